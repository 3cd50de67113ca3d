#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace repvar {

// Finite complex of based real vector spaces
//   C^0 --D0--> C^1 --D1--> ... --D_{N-1}--> C^N
// with the standard basis on each C^i.  When some cohomology is nonzero the
// caller supplies basis vectors for it, one list per degree.
struct BasedComplex {
    std::vector<Eigen::MatrixXd> differentials;          // D_i: C^i -> C^{i+1}
    std::vector<std::vector<Eigen::VectorXd>> homology;  // optional, per degree

    int spaces() const { return static_cast<int>(differentials.size()) + 1; }
    int dim(int i) const;
    void validate(double tol = 1e-10) const; // shapes and D_{i+1} D_i = 0
};

struct TorsionResult {
    double magnitude = 0.0;
    int sign = +1; // deterministic under the fixed basis ordering; conventional
    double value() const { return sign * magnitude; }
};

// Alternating-determinant torsion: choose preimage bases of the coboundary
// spaces by column pivoting, lift the supplied cohomology bases into the
// kernels, and form tau = prod_i det(M_i)^{(-1)^{i+1}} where M_i expresses
// the combined basis (image of level i-1, cohomology lifts, pivot preimages)
// in the standard basis of C^i.  The magnitude is independent of the pivot
// choice; pivot_seed randomizes the candidate order (0 keeps the natural one).
TorsionResult torsion(const BasedComplex& c, std::uint64_t pivot_seed = 0);

// Convenience: the twisted circle complex C^0 = C^1 = R^2 with
// D = I - R_theta (rotation by theta).  Acyclic unless theta = 0 mod 2pi.
BasedComplex circle_complex(double theta);

} // namespace repvar
