#include "condmeas/dyadic.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace condmeas {

Box Box::cube(int dim, double a, double b) {
    Box box;
    box.dim = dim;
    for (int j = 0; j < dim; ++j) {
        box.lo[j] = a;
        box.hi[j] = b;
    }
    return box;
}

bool Box::contains(const double* x) const {
    for (int j = 0; j < dim; ++j)
        if (x[j] < lo[j] || x[j] >= hi[j]) return false;
    return true;
}

bool Box::contains_box(const Box& other) const {
    for (int j = 0; j < dim; ++j)
        if (other.lo[j] < lo[j] || other.hi[j] > hi[j]) return false;
    return true;
}

bool Box::intersects(const Box& other) const {
    for (int j = 0; j < dim; ++j)
        if (other.hi[j] <= lo[j] || other.lo[j] >= hi[j]) return false;
    return true;
}

double Box::volume() const {
    double v = 1.0;
    for (int j = 0; j < dim; ++j) v *= hi[j] - lo[j];
    return v;
}

double Box::outer_radius() const {
    double r2 = 0.0;
    for (int j = 0; j < dim; ++j) {
        const double m = std::max(std::fabs(lo[j]), std::fabs(hi[j]));
        r2 += m * m;
    }
    return std::sqrt(r2);
}

bool BallRegion::contains(const double* x) const {
    double r2 = 0.0;
    for (int j = 0; j < dim; ++j) {
        const double d = x[j] - center[j];
        r2 += d * d;
    }
    return r2 <= radius * radius;
}

double DyadicCube::side() const { return std::ldexp(1.0, -level); }

double DyadicCube::diameter() const { return std::sqrt(double(dim)) * side(); }

Box DyadicCube::box() const {
    Box b;
    b.dim = dim;
    const double s = side();
    for (int j = 0; j < dim; ++j) {
        b.lo[j] = double(index[j]) * s;
        b.hi[j] = double(index[j] + 1) * s;
    }
    return b;
}

bool DyadicCube::contains(const double* x) const {
    const double scale = std::ldexp(1.0, level);
    for (int j = 0; j < dim; ++j)
        if (std::int64_t(std::floor(x[j] * scale)) != index[j]) return false;
    return true;
}

DyadicCube DyadicCube::parent() const {
    if (level == 0) throw std::invalid_argument("level-0 cube has no parent");
    DyadicCube p;
    p.level = level - 1;
    p.dim = dim;
    for (int j = 0; j < dim; ++j)
        p.index[j] = (index[j] >= 0) ? index[j] / 2 : (index[j] - 1) / 2;
    return p;
}

bool DyadicCube::operator==(const DyadicCube& other) const {
    if (level != other.level || dim != other.dim) return false;
    for (int j = 0; j < dim; ++j)
        if (index[j] != other.index[j]) return false;
    return true;
}

std::string DyadicCube::to_string() const {
    std::string out = std::to_string(level) + ":";
    for (int j = 0; j < dim; ++j) {
        if (j) out += ",";
        out += std::to_string(index[j]);
    }
    return out;
}

std::size_t DyadicCubeHash::operator()(const DyadicCube& q) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull ^ (std::uint64_t(q.level) << 32) ^
                      std::uint64_t(q.dim);
    for (int j = 0; j < q.dim; ++j) {
        h ^= std::uint64_t(q.index[j]) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return std::size_t(h);
}

std::optional<DyadicCube> cube_of_point(const double* x, int dim, int level) {
    if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("bad dimension");
    if (level < 0 || level > kMaxLevel) throw std::invalid_argument("bad level");
    bool origin = true;
    for (int j = 0; j < dim; ++j) {
        if (!std::isfinite(x[j])) throw std::invalid_argument("non-finite coordinate");
        if (x[j] != 0.0) origin = false;
    }
    if (origin) return std::nullopt;  // the family is origin-punctured
    DyadicCube q;
    q.level = level;
    q.dim = dim;
    const double scale = std::ldexp(1.0, level);
    for (int j = 0; j < dim; ++j)
        q.index[j] = std::int64_t(std::floor(x[j] * scale));
    return q;
}

std::optional<DyadicCube> cube_of_point(const std::vector<double>& x, int level) {
    return cube_of_point(x.data(), int(x.size()), level);
}

double cube_distance(const DyadicCube& q, const DyadicCube& s) {
    if (q.dim != s.dim) throw std::invalid_argument("dimension mismatch");
    const Box a = q.box();
    const Box b = s.box();
    double d2 = 0.0;
    for (int j = 0; j < q.dim; ++j) {
        const double gap = std::max({0.0, b.lo[j] - a.hi[j], a.lo[j] - b.hi[j]});
        d2 += gap * gap;
    }
    return std::sqrt(d2);
}

bool in_annular_family(const DyadicCube& q, const AnnularFamilySpec& spec) {
    if (q.level != spec.k || q.dim != spec.dim)
        throw std::invalid_argument("cube level/dim does not match family spec");
    if (spec.k < spec.i || spec.i < 1)
        throw std::invalid_argument("annular family requires 1 <= i <= k");
    // Both +-2^i and +-2^{-i} are multiples of the cube side 2^{-k},
    // so containment checks reduce to integer index ranges.
    const std::int64_t outer = std::int64_t(1) << (spec.k + spec.i);
    const std::int64_t inner = std::int64_t(1) << (spec.k - spec.i);
    bool inside_hole = true;
    for (int j = 0; j < q.dim; ++j) {
        if (q.index[j] < -outer || q.index[j] >= outer) return false;
        if (q.index[j] < -inner || q.index[j] >= inner) inside_hole = false;
    }
    return !inside_hole;
}

std::vector<DyadicCube> covering_cubes(const Box& region, int level) {
    if (level < 0 || level > kMaxLevel) throw std::invalid_argument("bad level");
    if (region.dim < 1 || region.dim > kMaxDim)
        throw std::invalid_argument("bad dimension");
    const double scale = std::ldexp(1.0, level);
    std::array<std::int64_t, kMaxDim> lo{}, hi{};
    double count = 1.0;
    for (int j = 0; j < region.dim; ++j) {
        if (!std::isfinite(region.lo[j]) || !std::isfinite(region.hi[j]))
            throw std::invalid_argument("unbounded region");
        if (region.hi[j] <= region.lo[j]) return {};
        lo[j] = std::int64_t(std::floor(region.lo[j] * scale));
        // largest index i with i < hi*2^k
        const double h = region.hi[j] * scale;
        std::int64_t ih = std::int64_t(std::ceil(h)) - 1;
        if (double(ih) >= h) --ih;  // guard against hi*2^k integral
        if (double(ih + 1) <= h) ++ih;
        hi[j] = ih;
        count *= double(hi[j] - lo[j] + 1);
    }
    if (count > 5e8) throw std::length_error("covering_cubes: region too large");
    std::vector<DyadicCube> out;
    out.reserve(std::size_t(count));
    DyadicCube q;
    q.level = level;
    q.dim = region.dim;
    std::array<std::int64_t, kMaxDim> cur = lo;
    while (true) {
        for (int j = 0; j < region.dim; ++j) q.index[j] = cur[j];
        out.push_back(q);
        int j = 0;
        for (; j < region.dim; ++j) {
            if (++cur[j] <= hi[j]) break;
            cur[j] = lo[j];
        }
        if (j == region.dim) break;
    }
    return out;
}

DyadicCube parse_cube(const std::string& text) {
    DyadicCube q;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad cube id");
    q.level = std::atoi(text.substr(0, colon).c_str());
    std::size_t pos = colon + 1;
    int j = 0;
    while (pos <= text.size() && j < kMaxDim) {
        const auto comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - pos);
        q.index[j++] = std::atoll(tok.c_str());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    q.dim = j;
    return q;
}

}  // namespace condmeas
