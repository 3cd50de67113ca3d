#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "repvar/su2.hpp"

namespace repvar {

// A word in a free group: signed 1-based generator indices, negative = inverse.
// The empty word is the identity.  No free reduction is performed implicitly;
// differentials are sensitive to the literal spelling.
using Word = std::vector<std::int32_t>;

Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int n);
Word free_reduce(const Word& w);

// parse "ab^-1" style compact strings: a..z generators 1..26, A..Z their inverses
Word parse_word(const std::string& letters);
std::string word_to_string(const Word& w);

struct Presentation {
    int n_generators = 0;
    std::vector<Word> relators;

    Presentation() = default;
    Presentation(int n, std::vector<Word> rels);

    void validate() const; // throws validation_error
};

// standard presentations
Presentation free_group(int n);
Presentation surface_group(int genus);           // 2g generators, one relator of commutators
Presentation torus_group();                      // surface_group(1)
Presentation torus_knot_group(int a, int b);     // <u,v | u^a v^-b>
Presentation two_bridge_group(int a, int b);     // <u,v | w u w^-1 v^-1>, w the Schubert word

// su(2) vectors are coordinates in the basis (i, j, k).  The invariant inner
// product is <A,B> = Tr(A conj(B)^T), which in these coordinates is 2 * dot.
// Norms use ||xi|| = sqrt(<xi,xi>).
inline double su2_inner(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    return 2.0 * a.dot(b);
}

struct Representation {
    std::vector<SU2> images; // one per generator

    // checked: every relator must evaluate to the identity within tol
    static Representation checked(const Presentation& p, std::vector<SU2> images,
                                  double tol = 1e-8);
    // raw: no relator check, for numeric continuation and search intermediates
    static Representation raw(std::vector<SU2> images);

    int n_generators() const { return static_cast<int>(images.size()); }
};

// Ordered product of generator images along w.  Throws on out-of-range index.
SU2 evaluate_word(const Representation& rep, const Word& w);

// Derivative block of the relator map with respect to one generator:
// sum over occurrences of gen in relator of
//   +Ad(rho(prefix before the letter))   for a positive letter,
//   -Ad(rho(prefix including the letter)) for an inverse letter,
// acting on su(2) in the basis (i, j, k).
Eigen::Matrix3d fox_block(const Representation& rep, const Word& relator, int gen);

// Extend a per-generator cochain to a word by the crossed-homomorphism rule
//   u(gh) = u(g) + Ad_g u(h),   u(g^-1) = -Ad_{g^-1} u(g).
Eigen::Vector3d crossed_extension(const Representation& rep,
                                  const std::vector<Eigen::Vector3d>& cochain,
                                  const Word& w);

// Schubert word for the two-bridge pair (a, b): length a-1, letters alternate
// u, v with exponents e_k = (-1)^floor(k b / a).
Word two_bridge_word(int a, int b);

} // namespace repvar
