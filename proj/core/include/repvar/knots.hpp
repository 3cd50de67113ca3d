#pragma once

#include <vector>

#include "repvar/rational.hpp"
#include "repvar/trace_poly.hpp"
#include "repvar/words.hpp"

namespace repvar {

// Character polynomial of the two-bridge knot B(a, b) in the coordinates
// x = Tr(u) = Tr(v), y = Tr(uv): the alternating sum over symmetric
// trimmings of the Schubert word,
//   F_{a,b} = sum_{n=0}^{(a-1)/2} (-1)^n F_{w_n},   F_{empty} taken as 1,
// sign-normalized so the leading coefficient in print order is positive.
TracePolynomial two_bridge_polynomial(int a, int b);

// Exact check that F_{a,b} cuts out the representation variety:
//   Tr(rho(w u w^-1 v^-1)) - 2 == (x^2 - y - 2) * F_{a,b}^2
// as an identity of integer polynomials.  Returns true when it holds.
bool two_bridge_identity_holds(int a, int b);

// Irreducible arc of the torus-knot variety: ang(u) = k pi / a,
// ang(v) = l pi / b, with ang(uv) ranging over [lo, hi] (in units of pi,
// stored as exact rationals).
struct ArcDescription {
    int k = 0, l = 0;
    Rational lo_over_pi;
    Rational hi_over_pi;
};

// All (k, l) with 0 < k < a, 0 < l < b, k = l mod 2, each with its interval.
// There are (a-1)(b-1)/2 of them.  Requires coprime a, b >= 2.
std::vector<ArcDescription> torus_knot_arcs(int a, int b);

struct ZeroPoint {
    double x = 0.0, y = 0.0;
    bool abelian = false; // lies on the locus y = x^2 - 2
};

// Real zeros of a polynomial in (x, y) inside the pair-of-matrices region
//   -2 <= x <= 2,  x^2 - 2 <= y <= 2,
// located by sign-change bisection along grid rows and columns and refined to
// |p| < 1e-9.  Even-multiplicity (tangential) zeros can be missed.  Points on
// the abelian boundary are flagged.  Throws on the zero polynomial.
std::vector<ZeroPoint> zero_set(const TracePolynomial& poly, int resolution);

// Representation of the two-bridge group B(a, b) with Tr u = Tr v = x and
// Tr(uv) = y.  Requires (x, y) inside the region and F_{a,b}(x, y) ~ 0;
// the relator residual is checked against 1e-6.
Representation rep_from_point(int a, int b, double x, double y);

} // namespace repvar
