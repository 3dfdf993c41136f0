#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "condmeas/kernels.hpp"
#include "condmeas/measure.hpp"

namespace condmeas {

// Diagonal handling when a continuum energy is evaluated on atoms.
struct DiagonalMode {
    enum Kind { Include, SelfEnergy, Exclude } kind = Include;
    double h = 0.0;  // cell size for SelfEnergy

    static DiagonalMode include() { return {Include, 0.0}; }
    static DiagonalMode self_energy(double h) {
        if (!(h > 0.0)) throw std::invalid_argument("self-energy cell size must be > 0");
        return {SelfEnergy, h};
    }
    static DiagonalMode exclude() { return {Exclude, 0.0}; }
};

// Sum_i Sum_j w_i w_j K(x_i, x_j) with the diagonal handled per mode;
// +inf propagates.
double energy(const DiscreteMeasure& mu, const KernelSpec& spec,
              const DiagonalMode& diag);

struct FrankWolfeOptions {
    double gap_tolerance = 1e-8;
    long max_iterations = 100000;
};

struct FrankWolfeResult {
    std::vector<double> weights;
    double energy = 0.0;
    double gap = 0.0;
    long iterations = 0;
};

struct SolverError : std::runtime_error {
    double last_gap;
    long iterations;
    SolverError(const std::string& what, double gap, long iters)
        : std::runtime_error(what), last_gap(gap), iterations(iters) {}
};

// Minimize w^T E w over the probability simplex by Frank-Wolfe with
// away steps; E is a symmetric n x n matrix in row-major order.
// Throws SolverError (carrying the last gap) if the duality gap does
// not reach the tolerance within the iteration budget.
FrankWolfeResult minimize_energy_on_simplex(const std::vector<double>& gram,
                                            std::size_t n,
                                            const FrankWolfeOptions& opts = {});

struct CapacityResult {
    double value = 0.0;     // 1 / minimal energy
    std::vector<double> minimizer;
    double gap = 0.0;
    long iterations = 0;
};

// phi-capacity of a finite point set: the minimal diagonal-regularized
// quadratic energy over the probability simplex, inverted.
CapacityResult capacity_finite(const std::vector<double>& coords, int dim,
                               const KernelSpec& spec, double h,
                               const FrankWolfeOptions& opts = {});

// Capacity of a measure (Def. of C_K over tau << nu): for a discrete nu
// the admissible tau are exactly the reweightings of nu's atoms.
CapacityResult capacity_of_measure(const DiscreteMeasure& nu,
                                   const KernelSpec& spec, double h,
                                   const FrankWolfeOptions& opts = {});

// Median nearest-neighbour distance; the default cell size for
// point-cloud capacities ("--h auto").
double auto_cell_size(const std::vector<double>& coords, int dim);

// Split nu into (regular, singular) parts along declared components:
// atomic and declared-singular ranges are singular; density ranges are
// regular iff their support dimension exceeds the kernel's critical
// exponent. Requires full component metadata.
std::pair<DiscreteMeasure, DiscreteMeasure> classify_decomposition(
    const DiscreteMeasure& nu, const KernelSpec& spec);

}  // namespace condmeas
