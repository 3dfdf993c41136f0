#include "condmeas/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace condmeas {

KernelSpec KernelSpec::riesz(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("riesz exponent must be > 0");
    KernelSpec s;
    s.kind = KernelKind::Riesz;
    s.alpha = alpha;
    return s;
}

KernelSpec KernelSpec::log_kernel() {
    KernelSpec s;
    s.kind = KernelKind::Log;
    return s;
}

KernelSpec KernelSpec::brownian_f(int d) {
    if (d < 3) throw std::invalid_argument("brownian_F requires d >= 3");
    KernelSpec s;
    s.kind = KernelKind::BrownianF;
    s.d = d;
    s.alpha = double(d - 2);
    return s;
}

KernelSpec KernelSpec::green(int d) {
    if (d < 3) throw std::invalid_argument("green kernel requires d >= 3");
    KernelSpec s;
    s.kind = KernelKind::Green;
    s.d = d;
    s.alpha = double(d - 2);
    return s;
}

double KernelSpec::phi(double r) const {
    switch (kind) {
        case KernelKind::Riesz:
            return r == 0.0 ? kInf : std::pow(r, -alpha);
        case KernelKind::Log:
            return r == 0.0 ? kInf : std::max(0.0, std::log(1.0 / r));
        case KernelKind::Green:
            return r == 0.0 ? kInf : c_of_d(d) * std::pow(r, -double(d - 2));
        case KernelKind::BrownianF:
            // radial profile of the distance part only
            return r == 0.0 ? kInf : std::pow(r, -double(d - 2));
        case KernelKind::Custom:
            return custom(r);
    }
    return kInf;
}

bool KernelSpec::infinite_at_zero() const {
    return kind != KernelKind::Custom || custom(0.0) == kInf;
}

double KernelSpec::critical_exponent() const {
    switch (kind) {
        case KernelKind::Riesz: return alpha;
        case KernelKind::Green:
        case KernelKind::BrownianF: return double(d - 2);
        default: return 0.0;
    }
}

double c_of_d(int d) {
    if (d < 3) throw std::invalid_argument("c(d) requires d >= 3");
    return std::tgamma(0.5 * d - 1.0) * 0.5 * std::pow(M_PI, -0.5 * d);
}

double norm2(const double* x, int dim) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) s += x[j] * x[j];
    return std::sqrt(s);
}

double dist2(const double* x, const double* y, int dim) {
    double s = 0.0;
    for (int j = 0; j < dim; ++j) {
        const double d = x[j] - y[j];
        s += d * d;
    }
    return std::sqrt(s);
}

double eval_kernel(const KernelSpec& spec, const double* x, const double* y,
                   int dim) {
    const double r = dist2(x, y, dim);
    if (spec.kind == KernelKind::BrownianF) {
        const double nx = norm2(x, dim);
        const double ny = norm2(y, dim);
        if (nx == 0.0 || ny == 0.0)
            throw std::domain_error("brownian_F is undefined at the origin");
        if (r == 0.0) return kInf;
        const double e = double(spec.d - 2);
        return (std::pow(nx, e) + std::pow(ny, e)) / std::pow(r, e);
    }
    return spec.phi(r);
}

}  // namespace condmeas
