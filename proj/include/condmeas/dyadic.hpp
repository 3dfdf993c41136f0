#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace condmeas {

inline constexpr int kMaxDim = 8;
// floor(x * 2^k) stays exact in double arithmetic up to this level.
inline constexpr int kMaxLevel = 52;

// Axis-aligned half-open box prod_j [lo_j, hi_j).
struct Box {
    int dim = 0;
    std::array<double, kMaxDim> lo{};
    std::array<double, kMaxDim> hi{};

    static Box cube(int dim, double a, double b);
    bool contains(const double* x) const;
    bool contains_box(const Box& other) const;
    bool intersects(const Box& other) const;
    double volume() const;
    // Largest |coordinate| over the closure; radius of a ball at the
    // origin that covers the box.
    double outer_radius() const;
};

struct BallRegion {
    int dim = 0;
    std::array<double, kMaxDim> center{};
    double radius = 0.0;

    bool contains(const double* x) const;
};

// Half-open dyadic cube 2^{-level} * prod_j [index_j, index_j + 1).
struct DyadicCube {
    int level = 0;
    int dim = 0;
    std::array<std::int64_t, kMaxDim> index{};

    double side() const;
    double diameter() const;
    Box box() const;
    bool contains(const double* x) const;
    DyadicCube parent() const;

    bool operator==(const DyadicCube& other) const;
    std::string to_string() const;  // "k:i1,i2,...,id"
};

struct DyadicCubeHash {
    std::size_t operator()(const DyadicCube& q) const;
};

// The annular family Q_k^i: level-k cubes contained in
// [-2^i, 2^i)^d \ [-2^{-i}, 2^{-i})^d.
struct AnnularFamilySpec {
    int i = 1;
    int k = 1;
    int dim = 3;
};

// Level-k cube containing x in the origin-punctured dyadic family;
// nullopt exactly when x is the origin.
std::optional<DyadicCube> cube_of_point(const double* x, int dim, int level);
std::optional<DyadicCube> cube_of_point(const std::vector<double>& x, int level);

// Euclidean inf distance between the two (closed) boxes.
double cube_distance(const DyadicCube& q, const DyadicCube& s);

bool in_annular_family(const DyadicCube& q, const AnnularFamilySpec& spec);

// Exactly the level-k cubes intersecting the box, each once.
std::vector<DyadicCube> covering_cubes(const Box& region, int level);

DyadicCube parse_cube(const std::string& text);

}  // namespace condmeas
