#include <doctest.h>

#include <cmath>
#include <vector>

#include "repvar/errors.hpp"
#include "repvar/trace_poly.hpp"
#include "support.hpp"

using namespace repvar;

namespace {

double direct_trace(const Word& w, const SU2& a, const SU2& b) {
    SU2 m = SU2::identity();
    for (auto l : w) {
        const SU2& g = (std::abs(l) == 1) ? a : b;
        m *= (l > 0) ? g : g.inverse();
    }
    return m.trace();
}

} // namespace

TEST_CASE("trace polynomial base cases") {
    CHECK(trace_polynomial({1}).to_string() == "x");
    CHECK(trace_polynomial({2}).to_string() == "y");
    CHECK(trace_polynomial({1, 2}).to_string() == "z");
    CHECK(trace_polynomial({}).to_string() == "2");
}

TEST_CASE("trace polynomial worked examples") {
    SUBCASE("ABAB = z^2 - 2") {
        CHECK(trace_polynomial({1, 2, 1, 2}).to_string() == "z^2 - 2");
    }
    SUBCASE("AB^-1 = x*y - z") {
        const TracePolynomial p = trace_polynomial({1, -2});
        TracePolynomial expected = TracePolynomial::monomial(1, 1, 0);
        expected -= TracePolynomial::monomial(0, 0, 1);
        CHECK(p == expected);
    }
    SUBCASE("commutator ABA^-1B^-1 matches 100 random pairs") {
        const TracePolynomial p = trace_polynomial({1, 2, -1, -2});
        // x^2 + y^2 + z^2 - xyz - 2
        TracePolynomial expected = TracePolynomial::monomial(2, 0, 0);
        expected += TracePolynomial::monomial(0, 2, 0);
        expected += TracePolynomial::monomial(0, 0, 2);
        expected -= TracePolynomial::monomial(1, 1, 1);
        expected -= TracePolynomial::constant(2);
        CHECK(p == expected);

        CounterRng rng(55);
        for (int it = 0; it < 100; ++it) {
            const SU2 a = haar_random(rng), b = haar_random(rng);
            const double direct = direct_trace({1, 2, -1, -2}, a, b);
            const double viapoly =
                p.evaluate(a.trace(), b.trace(), (a * b).trace());
            CHECK(std::abs(direct - viapoly) < 1e-9);
        }
    }
}

TEST_CASE("oracle equivalence on a word corpus") {
    // fixed corpus of 50 words of length <= 10, 100 Haar pairs
    std::vector<Word> corpus;
    CounterRng wordgen(777);
    while (corpus.size() < 50) {
        const int len = 1 + static_cast<int>(wordgen.next_u64() % 10);
        Word w;
        for (int i = 0; i < len; ++i) {
            const int gen = 1 + static_cast<int>(wordgen.next_u64() % 2);
            const int sign = (wordgen.next_u64() % 2) ? 1 : -1;
            w.push_back(sign * gen);
        }
        corpus.push_back(std::move(w));
    }

    std::vector<TracePolynomial> polys;
    polys.reserve(corpus.size());
    for (const auto& w : corpus) polys.push_back(trace_polynomial(w));

    CounterRng rng(101);
    for (int it = 0; it < 100; ++it) {
        const SU2 a = haar_random(rng), b = haar_random(rng);
        const double x = a.trace(), y = b.trace(), z = (a * b).trace();
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const double direct = direct_trace(corpus[i], a, b);
            CHECK(std::abs(direct - polys[i].evaluate(x, y, z)) < 1e-9);
        }
    }
}

TEST_CASE("trace is invariant under rotation and inversion of the word") {
    const Word w{1, 2, -1, 2, 2, -1};
    const TracePolynomial base = trace_polynomial(w);
    Word rot(w.begin() + 2, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + 2);
    CHECK(trace_polynomial(rot) == base);
    CHECK(trace_polynomial(inverse_word(w)) == base);
}

TEST_CASE("only two generators are supported") {
    CHECK_THROWS_AS(trace_polynomial({3}), validation_error);
    CHECK_THROWS_AS(trace_polynomial({1, -3}), validation_error);
}

TEST_CASE("printing is deterministic graded order") {
    // x^2 y leads; ties within a degree resolved y-major
    TracePolynomial p = TracePolynomial::monomial(2, 1, 0);
    p -= TracePolynomial::monomial(0, 2, 0);
    p -= TracePolynomial::monomial(2, 0, 0, 2);
    p += TracePolynomial::constant(3);
    CHECK(p.to_string() == "x^2*y - y^2 - 2*x^2 + 3");
}
