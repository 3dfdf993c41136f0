#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace condmeas {

enum class ComponentKind { Atomic, Density, DeclaredSingular };

// Tags a contiguous range of atoms [begin, end) as one declared component.
struct ComponentTag {
    ComponentKind kind = ComponentKind::Atomic;
    double support_dim = 0.0;  // density components only
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Finite list of weighted atoms in R^d standing in for a measure nu.
struct DiscreteMeasure {
    int dim = 0;
    std::vector<double> coords;   // flattened, size = n * dim
    std::vector<double> weights;  // size = n
    std::vector<ComponentTag> components;  // optional metadata

    std::size_t size() const { return weights.size(); }
    const double* point(std::size_t i) const { return coords.data() + i * dim; }
    double total_mass() const;

    void add_atom(const std::vector<double>& x, double w);
    void validate() const;  // weights >= 0, distinct locations
};

// CSV columns: x1..xd, weight, component-tag. Tag strings are
// "atomic", "density:<dim>", "singular", or empty (defaults to atomic).
DiscreteMeasure load_measure_csv(const std::string& path);
void save_measure_csv(const DiscreteMeasure& m, const std::string& path);

}  // namespace condmeas
