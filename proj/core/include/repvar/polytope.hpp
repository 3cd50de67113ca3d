#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "repvar/graphs.hpp"
#include "repvar/rational.hpp"

namespace repvar {

// One linear inequality sum_i a_i t_i <= b with exact rational coefficients.
struct Inequality {
    std::vector<Rational> a;
    Rational b;
};

// The moduli polytope in t = alpha/pi coordinates: for each trivalent vertex
// with incident edges i, j, k (loops listed twice) the triangle inequalities
//   t_i <= t_j + t_k   (three rotations)
// and the perimeter bound t_i + t_j + t_k <= 2, intersected with [0,1]^E.
class Polytope {
public:
    Polytope(int dimension, std::vector<Inequality> inequalities, bool add_cube_bounds = true);

    int dimension() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }

    bool contains(const std::vector<Rational>& t, bool strict = false) const;

private:
    int dim_ = 0;
    std::vector<Inequality> ineqs_;
};

Polytope polytope_from_graph(const TrivalentGraph& g);

// All vertices, deduplicated, as exact rational points.  Brute force over
// d-subsets of the inequality list with a floating-point prefilter; every
// reported vertex is verified feasible in exact arithmetic.
std::vector<std::vector<Rational>> enumerate_vertices(const Polytope& p);

// Exact volume in t-units (multiply by pi^dim for the volume of Delta).
// Pyramid decomposition from a vertex apex over exact facet volumes.
// Throws for empty input or dimension > 6.
Rational exact_volume(const Polytope& p);

struct McVolume {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
};

// Hit fraction of the unit cube under a counter-based generator; the result
// depends only on (seed, samples), never on the worker count.
McVolume monte_carlo_volume(const Polytope& p, std::uint64_t seed, std::uint64_t samples,
                            int workers = 0);

// Exact rational multiple of a power of pi.
struct PiValue {
    Rational mantissa;
    int pi_power = 0;
    double value() const;
    std::string to_string() const; // e.g. "16/3 * pi^6"
};

// Vol(M) = (2 pi)^{3g-3} 2^{2g-3} Vol(Delta) with Vol(Delta) = vol_t * pi^{3g-3}.
PiValue symplectic_volume(int genus, const Rational& vol_t);

// Period lattice of the fiber tori: Z^E extended by the half-integral
// vectors supported on mod-2 cycles of the graph.  Contains Z^E with
// index 2^g, matching the torus volume in the symplectic volume formula.
class BSLattice {
public:
    explicit BSLattice(const TrivalentGraph& g);
    const std::vector<std::vector<Rational>>& generators() const { return gens_; }
    // [Lambda : Z^E] from the Hermite normal form of the generator matrix
    BigInt index_from_determinant() const;

private:
    int dim_;
    std::vector<std::vector<Rational>> gens_;
};

// [Lambda : Z^E] = 2^(E - rank_2(incidence)) = 2^(dim H^1(Gamma, Z_2))
BigInt lattice_index(const TrivalentGraph& g);

} // namespace repvar
