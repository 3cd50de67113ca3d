#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include "repvar/rational.hpp"
#include "repvar/words.hpp"

namespace repvar {

// Sparse integer polynomial in the trace coordinates
//   x = Tr(A), y = Tr(B), z = Tr(AB)
// stored as exponent triple (i, j, k) -> coefficient.  Coefficients are exact
// arbitrary-precision integers; zero coefficients are never stored.
class TracePolynomial {
public:
    using Exponents = std::array<int, 3>;

    TracePolynomial() = default;
    static TracePolynomial constant(long c);
    static TracePolynomial monomial(int i, int j, int k, long c = 1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }

    TracePolynomial& operator+=(const TracePolynomial& o);
    TracePolynomial& operator-=(const TracePolynomial& o);
    friend TracePolynomial operator+(TracePolynomial a, const TracePolynomial& b) { return a += b; }
    friend TracePolynomial operator-(TracePolynomial a, const TracePolynomial& b) { return a -= b; }
    friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b);
    TracePolynomial negated() const;
    bool operator==(const TracePolynomial& o) const { return terms_ == o.terms_; }

    double evaluate(double x, double y, double z = 0.0) const;

    // total degree, and per-variable degree (0 for the zero polynomial)
    int degree() const;
    int degree_in(int var) const;

    // map (i,j,k) -> (i+j, k): set Tr(A) = Tr(B) = x and rename z to y.
    // Used for the two-bridge specialization where u and v are conjugate.
    TracePolynomial substitute_equal_traces() const;

    // Deterministic rendering: graded order (total degree descending), ties by
    // y-exponent, then x, then z, descending; explicit '*' and '^'.
    std::string to_string() const;

    // Negate if the leading coefficient in the print order is negative.
    TracePolynomial sign_normalized() const;

private:
    std::map<Exponents, BigInt> terms_;
    void set(const Exponents& e, BigInt c);
};

// Exact polynomial F_w with Tr(rho(w)) = F_w(Tr A, Tr B, Tr AB) for every
// SU(2) pair (A, B).  Reduction uses the identity
//   Tr(UV) = Tr(U)Tr(V) - Tr(UV^{-1})
// together with Cayley-Hamilton (B^2 = Tr(B) B - 1), memoizing on canonical
// word forms (minimum over cyclic rotations and inversion).
// Only generators 1 and 2 are allowed.
TracePolynomial trace_polynomial(const Word& w);

} // namespace repvar
