#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "repvar/errors.hpp"
#include "repvar/graphs.hpp"
#include "repvar/polytope.hpp"
#include "repvar/quantize.hpp"

using namespace repvar;

namespace {

std::vector<std::vector<int>> labels(const std::vector<BSLabeling>& v) {
    std::vector<std::vector<int>> out;
    out.reserve(v.size());
    for (const auto& l : v) out.push_back(l.sigma);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("prequantum holonomy") {
    const TrivalentGraph g = theta_graph();
    const int level = 4;
    SUBCASE("edge loop at alpha = pi / K is trivial") {
        std::vector<double> alpha(3, M_PI / level);
        const HolonomyPhase h =
            prequantum_holonomy(g, {LatticePath::EdgeLoop, 0}, alpha, level);
        CHECK(h.angle == doctest::Approx(-2.0 * M_PI));
        CHECK(h.is_trivial());
    }
    SUBCASE("vertex loop at perimeter 2 pi / K is trivial before the half-form sign") {
        std::vector<double> alpha(3, 2.0 * M_PI / (3.0 * level));
        const HolonomyPhase h =
            prequantum_holonomy(g, {LatticePath::VertexLoop, 0}, alpha, level);
        CHECK(h.is_trivial(1e-12));
    }
    SUBCASE("rejects level 0 and central angles") {
        std::vector<double> alpha(3, 0.5);
        CHECK_THROWS_AS(prequantum_holonomy(g, {LatticePath::EdgeLoop, 0}, alpha, 0),
                        validation_error);
        alpha[1] = 0.0;
        CHECK_THROWS_AS(prequantum_holonomy(g, {LatticePath::EdgeLoop, 0}, alpha, 2),
                        validation_error);
    }
}

TEST_CASE("half-form holonomy") {
    CHECK(halfform_holonomy({LatticePath::EdgeLoop, 0}) == +1);
    CHECK(halfform_holonomy({LatticePath::VertexLoop, 0}) == -1);
    // multiplicativity over a composite: edge then vertex
    CHECK(halfform_holonomy({LatticePath::EdgeLoop, 1}) *
              halfform_holonomy({LatticePath::VertexLoop, 0}) ==
          -1);
}

TEST_CASE("bs_fibers small levels") {
    SUBCASE("theta, K=2: exactly (1,1,1)") {
        const auto fibers = bs_fibers(theta_graph(), 2);
        REQUIRE(fibers.size() == 1);
        CHECK(fibers[0].sigma == std::vector<int>{1, 1, 1});
    }
    SUBCASE("theta, K=3: count 4, (1,1,1) plus permutations of (1,2,2)") {
        const auto fibers = bs_fibers(theta_graph(), 3);
        CHECK(labels(fibers) ==
              std::vector<std::vector<int>>{{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
    }
    SUBCASE("dumbbell, K=3: count 4 (graph independence)") {
        CHECK(bs_fibers(dumbbell_graph(), 3).size() == 4);
    }
    SUBCASE("K=1: empty label range") {
        CHECK(bs_fibers(theta_graph(), 1).empty());
    }
}

TEST_CASE("holonomy characterization matches the Clebsch-Gordan enumeration") {
    for (int level = 1; level <= 12; ++level) {
        CHECK(labels(bs_fibers(theta_graph(), level)) ==
              labels(bs_fibers_via_holonomy(theta_graph(), level)));
        CHECK(labels(bs_fibers(dumbbell_graph(), level)) ==
              labels(bs_fibers_via_holonomy(dumbbell_graph(), level)));
    }
    for (int level = 1; level <= 8; ++level) {
        CHECK(labels(bs_fibers(genus_chain(3), level)) ==
              labels(bs_fibers_via_holonomy(genus_chain(3), level)));
    }
}

TEST_CASE("graph independence of the fiber counts") {
    for (int level = 1; level <= 20; ++level)
        CHECK(bs_fibers(theta_graph(), level).size() ==
              bs_fibers(dumbbell_graph(), level).size());

    const TrivalentGraph k4 = graph_from_json(
        R"({"vertices": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    for (int level = 1; level <= 10; ++level)
        CHECK(bs_fibers(genus_chain(3), level).size() == bs_fibers(k4, level).size());
}

TEST_CASE("verlinde oracle") {
    SUBCASE("anchored small values") {
        CHECK(verlinde_count(2, 2) == 1);
        CHECK(verlinde_count(2, 3) == 4);
        CHECK(verlinde_count(2, 1) == 0);
    }
    SUBCASE("matches the enumeration, genus 2 up to K = 12") {
        for (int level = 1; level <= 12; ++level)
            CHECK(verlinde_count(2, level) ==
                  static_cast<long long>(bs_fibers(theta_graph(), level).size()));
    }
    SUBCASE("matches the enumeration, genus 3 up to K = 8") {
        for (int level = 1; level <= 8; ++level)
            CHECK(verlinde_count(3, level) ==
                  static_cast<long long>(bs_fibers(genus_chain(3), level).size()));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(verlinde_count(1, 3), validation_error);
        CHECK_THROWS_AS(verlinde_count(2, 0), validation_error);
    }
}

TEST_CASE("growth diagnostic: counts scale like K^3 towards the volume density") {
    // diagnostic, not a hard gate
    const double c100 = static_cast<double>(bs_fibers(theta_graph(), 100).size()) / 1e6;
    const double c200 = static_cast<double>(bs_fibers(theta_graph(), 200).size()) / 8e6;
    MESSAGE("count/K^3 at K=100: ", c100, ", at K=200: ", c200);
    WARN(std::abs(c200 - c100) / c100 < 0.05);
    // limit should approach Vol(Delta in t-units) * parity density = (1/3) * (1/2)
    WARN(std::abs(c200 - 1.0 / 6.0) / (1.0 / 6.0) < 0.10);
}

TEST_CASE("sphere Bohr-Sommerfeld sets") {
    SUBCASE("alpha = 3: {-2, 0, 2}") {
        CHECK(sphere_bs(3) == std::vector<int>{-2, 0, 2});
    }
    SUBCASE("alpha = 1: {0}") { CHECK(sphere_bs(1) == std::vector<int>{0}); }
    SUBCASE("alpha = 2: {-1, 1}") { CHECK(sphere_bs(2) == std::vector<int>{-1, 1}); }
    SUBCASE("count equals alpha for alpha <= 50") {
        for (int alpha = 1; alpha <= 50; ++alpha)
            CHECK(sphere_bs(alpha).size() == static_cast<std::size_t>(alpha));
    }
    SUBCASE("uncorrected set keeps l = alpha mod 2") {
        CHECK(sphere_bs(3, false) == std::vector<int>{-3, -1, 1, 3});
    }
    SUBCASE("rejects non-positive alpha") {
        CHECK_THROWS_AS(sphere_bs(0), validation_error);
    }
}

TEST_CASE("oscillator Bohr-Sommerfeld values") {
    CHECK(oscillator_bs(1.0, 5) == std::vector<double>{1.0, 3.0, 5.0});
    CHECK(oscillator_bs(2.0, 3) == std::vector<double>{0.5, 1.5});
    CHECK(oscillator_bs(1.0, 0).empty());
}

TEST_CASE("lens space Chern-Simons values") {
    CHECK(cs_lens_value(1) == doctest::Approx(4.0 * M_PI * M_PI));
    CHECK(cs_lens_value(8) == doctest::Approx(M_PI * M_PI / 2.0));
    for (int p : {2, 3, 5, 7})
        CHECK(cs_lens_value(p) == doctest::Approx(4.0 * M_PI * M_PI / p));
    CHECK_THROWS_AS(cs_lens_value(0), validation_error);
}
