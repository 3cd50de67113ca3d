#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <utility>

#include "repvar/rng.hpp"

namespace repvar {

// Group element stored as a unit quaternion w + x i + y j + z k.
// The associated 2x2 matrix is [[w+ix, y+iz], [-y+iz, w-ix]], so trace = 2w.
// Renormalized after every constructor and product.
struct SU2 {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    SU2() = default;
    SU2(double w_, double x_, double y_, double z_);

    static SU2 identity() { return SU2{}; }
    // rotation about the i axis: diag(e^{i phi}, e^{-i phi})
    static SU2 exp_i(double phi);
    // exp of a pure quaternion xi given by su(2) coordinates in the basis (i,j,k)
    static SU2 exp(const Eigen::Vector3d& xi);

    double trace() const { return 2.0 * w; }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    bool is_unit(double tol = 1e-12) const;

    SU2 inverse() const { return SU2(w, -x, -y, -z); }
    Eigen::Matrix<std::complex<double>, 2, 2> matrix() const;

    friend SU2 operator*(const SU2& a, const SU2& b);
    SU2& operator*=(const SU2& b) { return *this = *this * b; }

    double distance(const SU2& other) const;
};

// ang(M) = arccos(Tr(M)/2), the complete conjugation invariant in [0, pi].
double angle(const SU2& m);

// c_a(b) = a b a^{-1}
SU2 conjugate(const SU2& a, const SU2& b);

// Matrix of xi -> m xi m^{-1} on su(2) in the basis (i, j, k).
// Orthogonal with determinant +1; kernel of m -> Ad_m is {+-1}.
Eigen::Matrix3d adjoint_matrix(const SU2& m);

// Principal logarithm: the pure-quaternion xi with exp(xi) = m and |xi| <= pi,
// as coordinates in (i, j, k).
Eigen::Vector3d log_su2(const SU2& m);

// Boundary angles of pairs: phi, psi, eta in [0, pi] subject to the
// tetrahedron inequalities.
struct AngleTriple {
    double phi, psi, eta;
    bool is_valid(double tol = 1e-12) const;
};

// Reconstruct a pair (A, B) with ang(A) = phi, ang(B) = psi, ang(AB) = eta.
// A is the i-axis rotation by phi and B = P e^{i psi} P^{-1} where P = alpha + beta j
// with alpha, beta >= 0, alpha^2 + beta^2 = 1 solving
//   cos(eta) = alpha^2 cos(phi+psi) + beta^2 cos(phi-psi).
// Throws validation_error when the triple violates the tetrahedron inequalities.
std::pair<SU2, SU2> pair_from_angles(const AngleTriple& t);

// Element q with q g q^{-1} = h; requires angle(g) = angle(h) up to tol.
SU2 conjugating_element(const SU2& g, const SU2& h, double tol = 1e-9);

// Haar-distributed element: 4 independent gaussians, normalized.
SU2 haar_random(CounterRng& rng);
SU2 haar_random(std::uint64_t seed);

} // namespace repvar
