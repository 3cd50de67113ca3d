#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "repvar/graphs.hpp"

namespace repvar {

// Unit complex number tracked by its angle.
struct HolonomyPhase {
    double angle = 0.0; // radians, arbitrary branch

    std::complex<double> phase() const { return std::polar(1.0, angle); }
    HolonomyPhase times(const HolonomyPhase& o) const { return {angle + o.angle}; }
    HolonomyPhase times_sign(int s) const { return {s < 0 ? angle + M_PI : angle}; }
    // distance of the angle to the nearest multiple of 2 pi
    double defect() const;
    bool is_trivial(double tol = 1e-9) const { return defect() < tol; }
};

// Generator loops of the fiber lattice: one per edge, one per vertex.
struct LatticePath {
    enum Kind { EdgeLoop, VertexLoop } kind;
    int index;
};

// Holonomy of the level-K prequantum bundle along a lattice path:
//   exp(-2 i K alpha_i) for an edge loop,
//   exp(-i K (alpha_i + alpha_j + alpha_k)) for a vertex loop.
// alpha has one value per edge, each strictly inside (0, pi).
HolonomyPhase prequantum_holonomy(const TrivalentGraph& g, const LatticePath& path,
                                  const std::vector<double>& alpha, int level);

// Half-form holonomy: +1 along edge loops, -1 along vertex loops.
int halfform_holonomy(const LatticePath& path);

// An admissible edge labeling at level K: integers sigma_i in [1, K-1] with,
// at every vertex, the triangle inequalities, odd sum, and sum <= 2K.
struct BSLabeling {
    std::vector<int> sigma;
};

// Exhaustive enumeration of the quantum Clebsch-Gordan labelings,
// lexicographically sorted.
std::vector<BSLabeling> bs_fibers(const TrivalentGraph& g, int level);

// Same set computed through the holonomy characterization: labelings whose
// point alpha = sigma pi / K lies strictly inside the moduli polytope and
// whose prequantum x half-form holonomy is trivial along every generator
// loop.  Used as the independent cross-check of bs_fibers.
std::vector<BSLabeling> bs_fibers_via_holonomy(const TrivalentGraph& g, int level,
                                               double tol = 1e-9);

// Closed-form count sum_{j=1}^{K-1} (K/2)^{g-1} sin(j pi / K)^{2-2g}, rounded
// to the nearest integer; throws when the rounding residual exceeds 1e-6.
// K = 1 gives 0 (empty sum).
long long verlinde_count(int genus, int level);

// Integers l with |l| <= alpha and l != alpha mod 2 (use corrected = false
// for the uncorrected set l = alpha mod 2).
std::vector<int> sphere_bs(int alpha, bool corrected = true);

// {k / c : k odd, 1 <= k <= max_k}
std::vector<double> oscillator_bs(double c, int max_k);

// 4 pi^2 / order
double cs_lens_value(int order);

} // namespace repvar
