#pragma once

#include <functional>
#include <limits>

namespace condmeas {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class KernelKind { Riesz, Log, BrownianF, Green, Custom };

// A radially decreasing kernel phi(r), plus the two Brownian kernels
// F(x,y) = (|x|^{d-2}+|y|^{d-2})/|x-y|^{d-2} and G(x,y) = c(d)|x-y|^{2-d}.
struct KernelSpec {
    KernelKind kind = KernelKind::Riesz;
    double alpha = 1.0;  // Riesz exponent
    int d = 3;           // spatial dimension for BrownianF / Green
    std::function<double(double)> custom;  // symmetric radial profile

    static KernelSpec riesz(double alpha);
    static KernelSpec log_kernel();
    static KernelSpec brownian_f(int d);
    static KernelSpec green(int d);

    // phi(r); +inf at r = 0 for Riesz/Log/Green.
    double phi(double r) const;
    bool infinite_at_zero() const;
    // Exponent separating finite-energy support dimensions: alpha for
    // Riesz, d-2 for Green/BrownianF, 0 for Log.
    double critical_exponent() const;
};

// Green's-function constant c(d) = Gamma(d/2-1) / (2 pi^{d/2}), d >= 3.
double c_of_d(int d);

// Kernel value at a pair of points; BrownianF requires x, y != 0.
double eval_kernel(const KernelSpec& spec, const double* x, const double* y,
                   int dim);

double norm2(const double* x, int dim);
double dist2(const double* x, const double* y, int dim);

}  // namespace condmeas
