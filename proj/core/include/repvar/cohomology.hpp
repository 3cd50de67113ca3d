#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "repvar/words.hpp"

namespace repvar {

// Twisted cochain complex of the presentation 2-complex with coefficients in
// su(2) twisted by Ad_rho:
//   C^0 = su(2)  --d0-->  C^1 = su(2)^n  --d1-->  C^2 = su(2)^m
// d0 has row blocks I - Ad(rho_i); d1 has blocks fox_block(relator_j, gen_i).
struct TwistedComplex {
    Eigen::MatrixXd d0; // 3n x 3
    Eigen::MatrixXd d1; // 3m x 3n
    int n = 0;          // generators
    int m = 0;          // relators
};

TwistedComplex build_complex(const Presentation& p, const Representation& rep);

struct CohomologySummary {
    int h0 = 0, h1 = 0, h2 = 0;
    int euler = 0; // h0 - h1 + h2, equals 3 * (1 - n + m)
    std::vector<double> sv_d0;
    std::vector<double> sv_d1;
    double tolerance = 0.0;   // absolute rank threshold used
    double spectral_gap = 0.0; // min over both matrices of (kept sv)/(dropped sv)
    bool ill_conditioned = false; // some singular value within 10x of the threshold
};

// Betti numbers by singular-value rank with threshold tol * max(1, sigma_max).
CohomologySummary cohomology_dims(const TwistedComplex& c, double tol = 1e-8);

enum class RepClass { Central, Abelian, Irreducible };

// Classification by h0 of the generator-only complex: 3 -> central,
// 1 -> abelian, 0 -> irreducible.
RepClass classify(const Representation& rep, double tol = 1e-8);
bool is_irreducible(const Representation& rep, double tol = 1e-8);
bool is_central(const Representation& rep, double tol = 1e-8);

std::string to_string(RepClass c);

// Regularity test for a knot exterior: rep restricted along the supplied
// peripheral words (meridian, longitude) must commute; regular means
// irreducible and h1(M) = h1(boundary torus) / 2.
struct RegularityReport {
    bool regular = false;
    bool irreducible = false;
    int h1_manifold = 0;
    int h1_boundary = 0;
};

RegularityReport is_regular(const Presentation& knot, const Representation& rep,
                            const Word& meridian, const Word& longitude,
                            double tol = 1e-8);

// Cup-product symplectic pairing on 1-cocycles of a one-relator presentation.
// Fan evaluation along the relator polygon,
//   fan(u, v) = sum_{k=2}^{L} < ext_u(prefix_{k-1}), Ad(prefix_{k-1}) v(l_k) >,
// antisymmetrized over the two arguments so that the pairing descends to H^1.
// u, v must be in ker d1 (residual < 1e-8 relative).
double cup_pairing(const Presentation& p, const Representation& rep,
                   const std::vector<Eigen::Vector3d>& u,
                   const std::vector<Eigen::Vector3d>& v);

// Orthonormal basis of ker d1 modulo im d0 (columns, dimension h1).
Eigen::MatrixXd harmonic_basis(const TwistedComplex& c, double tol = 1e-8);

// The full pairing matrix on a basis of H^1 (antisymmetric h1 x h1).
Eigen::MatrixXd cup_pairing_matrix(const Presentation& p, const Representation& rep,
                                   const Eigen::MatrixXd& basis);

std::vector<Eigen::Vector3d> unstack_cochain(const Eigen::VectorXd& v);

} // namespace repvar
