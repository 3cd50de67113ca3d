#pragma once

// shared helpers for building valid representations of the standard groups

#include <cmath>
#include <utility>
#include <vector>

#include "repvar/cohomology.hpp"
#include "repvar/rng.hpp"
#include "repvar/su2.hpp"
#include "repvar/words.hpp"

namespace repvar::testing {

// solve [A, B] = C by hitting the commutator trace with a pair of equal-angle
// elements, then conjugating into place
inline std::pair<SU2, SU2> commutator_pair(const SU2& c) {
    const double target = c.trace();
    const double x = std::sqrt((target + 2.0) / 2.0);
    const double phi = std::acos(std::min(1.0, std::max(-1.0, x / 2.0)));
    auto [a, b] = pair_from_angles({phi, phi, M_PI / 2.0});
    const SU2 k = a * b * a.inverse() * b.inverse();
    const SU2 q = conjugating_element(c, k); // q c q^-1 = k
    return {q.inverse() * a * q, q.inverse() * b * q};
}

// random representation of surface_group(genus): free choices for the first
// g-1 handle pairs, last pair solves the leftover commutator
inline Representation random_surface_rep(int genus, CounterRng& rng) {
    std::vector<SU2> images;
    SU2 prod = SU2::identity();
    for (int i = 0; i + 1 < genus; ++i) {
        const SU2 a = haar_random(rng), b = haar_random(rng);
        images.push_back(a);
        images.push_back(b);
        prod = prod * (a * b * a.inverse() * b.inverse());
    }
    auto [ag, bg] = commutator_pair(prod.inverse());
    images.push_back(ag);
    images.push_back(bg);
    return Representation::checked(surface_group(genus), std::move(images));
}

// random noncentral abelian pair on a random common axis
inline Representation random_torus_rep(CounterRng& rng) {
    const SU2 q = haar_random(rng);
    const double phi = 0.3 + 2.4 * rng.next_double();
    const double psi = 0.3 + 2.4 * rng.next_double();
    return Representation::checked(
        torus_group(), {conjugate(q, SU2::exp_i(phi)), conjugate(q, SU2::exp_i(psi))});
}

// random representation of torus_knot_group(a, b) on the (k, l) arc
inline Representation random_torus_knot_rep(int a, int b, int k, int l, CounterRng& rng) {
    const double phi = k * M_PI / a;
    const double psi = l * M_PI / b;
    const double lo = M_PI * std::abs(static_cast<double>(k) / a - static_cast<double>(l) / b);
    const double hi =
        M_PI * std::min(static_cast<double>(k) / a + static_cast<double>(l) / b,
                        2.0 - static_cast<double>(k) / a - static_cast<double>(l) / b);
    const double eta = lo + (hi - lo) * (0.2 + 0.6 * rng.next_double());
    auto [u, v] = pair_from_angles({phi, psi, eta});
    const SU2 q = haar_random(rng); // move off the normal form
    return Representation::checked(torus_knot_group(a, b),
                                   {conjugate(q, u), conjugate(q, v)});
}

// trefoil representation (two-bridge form) with Tr u = Tr v = x on the
// irreducible arc y = 1, |x| < sqrt(3)
inline Representation trefoil_rep(double x) {
    const double phi = std::acos(x / 2.0);
    auto [u, v] = pair_from_angles({phi, phi, std::acos(0.5)});
    return Representation::checked(two_bridge_group(3, 1), {u, v});
}

inline Word trefoil_meridian() { return {1}; }
inline Word trefoil_longitude() {
    // (uv)^3 u^-6, null-homologous and commuting with u
    Word l = power(Word{1, 2}, 3);
    Word tail = power(Word{-1}, 6);
    return concat(l, tail);
}

// central finite-difference derivative of the relator map at rep, in the
// right-translated su(2) chart; the oracle fox_block is checked against
inline Eigen::Matrix3d fd_fox_block(const Representation& rep, const Word& relator, int gen,
                                    double step = 1e-5) {
    Eigen::Matrix3d out;
    const SU2 base = evaluate_word(rep, relator);
    for (int col = 0; col < 3; ++col) {
        Eigen::Vector3d xi = Eigen::Vector3d::Zero();
        xi[col] = step;
        auto shifted = [&](double sign) {
            Representation r = rep;
            r.images[gen - 1] = SU2::exp(sign * xi) * r.images[gen - 1];
            return log_su2(evaluate_word(r, relator) * base.inverse());
        };
        out.col(col) = (shifted(+1.0) - shifted(-1.0)) / (2.0 * step);
    }
    return out;
}

} // namespace repvar::testing
