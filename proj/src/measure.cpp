#include "condmeas/measure.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace condmeas {

double DiscreteMeasure::total_mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

void DiscreteMeasure::add_atom(const std::vector<double>& x, double w) {
    if (dim == 0) dim = int(x.size());
    if (int(x.size()) != dim) throw std::invalid_argument("atom dimension mismatch");
    coords.insert(coords.end(), x.begin(), x.end());
    weights.push_back(w);
}

void DiscreteMeasure::validate() const {
    for (double w : weights) {
        if (!(w >= 0.0) || !std::isfinite(w))
            throw std::invalid_argument("atom weights must be finite and >= 0");
    }
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same = true;
            for (int k = 0; k < dim; ++k)
                if (point(i)[k] != point(j)[k]) { same = false; break; }
            if (same) throw std::invalid_argument("duplicate atom locations");
        }
    }
}

static ComponentKind parse_tag(const std::string& tag, double& support_dim) {
    if (tag.empty() || tag == "atomic") return ComponentKind::Atomic;
    if (tag == "singular") return ComponentKind::DeclaredSingular;
    if (tag.rfind("density", 0) == 0) {
        const auto colon = tag.find(':');
        support_dim = colon == std::string::npos
                          ? 0.0
                          : std::stod(tag.substr(colon + 1));
        return ComponentKind::Density;
    }
    throw std::invalid_argument("unknown component tag: " + tag);
}

DiscreteMeasure load_measure_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open measure file: " + path);
    DiscreteMeasure m;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty measure file");
    // header: x1,...,xd,weight[,component]
    int ncols = 1;
    for (char c : line)
        if (c == ',') ++ncols;
    bool has_tag = line.find("component") != std::string::npos;
    m.dim = ncols - 1 - (has_tag ? 1 : 0);
    if (m.dim < 1) throw std::invalid_argument("bad measure header: " + line);

    std::string cur_tag = "\x01";  // sentinel: differs from any real tag
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> x(m.dim);
        for (int j = 0; j < m.dim; ++j) {
            if (!std::getline(ss, tok, ',')) throw std::invalid_argument("short row");
            x[j] = std::stod(tok);
        }
        if (!std::getline(ss, tok, ',')) throw std::invalid_argument("short row");
        const double w = std::stod(tok);
        std::string tag;
        std::getline(ss, tag, ',');
        m.add_atom(x, w);
        if (tag != cur_tag) {
            ComponentTag ct;
            ct.kind = parse_tag(tag, ct.support_dim);
            ct.begin = m.size() - 1;
            ct.end = m.size();
            m.components.push_back(ct);
            cur_tag = tag;
        } else if (!m.components.empty()) {
            m.components.back().end = m.size();
        }
    }
    return m;
}

void save_measure_csv(const DiscreteMeasure& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (int j = 0; j < m.dim; ++j) out << "x" << (j + 1) << ",";
    out << "weight,component\n";
    out.precision(17);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::string tag;
        for (const auto& c : m.components) {
            if (i >= c.begin && i < c.end) {
                switch (c.kind) {
                    case ComponentKind::Atomic: tag = "atomic"; break;
                    case ComponentKind::DeclaredSingular: tag = "singular"; break;
                    case ComponentKind::Density:
                        tag = "density:" + std::to_string(c.support_dim);
                        break;
                }
                break;
            }
        }
        for (int j = 0; j < m.dim; ++j) out << m.point(i)[j] << ",";
        out << m.weights[i] << "," << tag << "\n";
    }
}

}  // namespace condmeas
