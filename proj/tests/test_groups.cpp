#include <doctest.h>

#include <cmath>

#include "repvar/errors.hpp"
#include "repvar/words.hpp"
#include "support.hpp"

using namespace repvar;
using namespace repvar::testing;

TEST_CASE("builders") {
    SUBCASE("torus_knot_group(3,2) is <u,v | u^3 v^-2>") {
        const Presentation p = torus_knot_group(3, 2);
        CHECK(p.n_generators == 2);
        REQUIRE(p.relators.size() == 1);
        CHECK(p.relators[0] == Word{1, 1, 1, -2, -2});
    }
    SUBCASE("surface_group(2) has 4 generators and a length-8 relator") {
        const Presentation p = surface_group(2);
        CHECK(p.n_generators == 4);
        REQUIRE(p.relators.size() == 1);
        CHECK(p.relators[0].size() == 8);
        CHECK(p.relators[0] == Word{1, 2, -1, -2, 3, 4, -3, -4});
    }
    SUBCASE("two_bridge_group(5,3) relator spells w u w^-1 v^-1 with w = uv^-1u^-1v") {
        const Presentation p = two_bridge_group(5, 3);
        REQUIRE(p.relators.size() == 1);
        const Word w{1, -2, -1, 2};
        CHECK(two_bridge_word(5, 3) == w);
        CHECK(p.relators[0] == concat(concat(w, Word{1}), concat(inverse_word(w), Word{-2})));
    }
    SUBCASE("parameter validation") {
        CHECK_THROWS_AS(torus_knot_group(4, 2), validation_error);
        CHECK_THROWS_AS(surface_group(0), validation_error);
        CHECK_THROWS_AS(two_bridge_group(5, 2), validation_error);
        CHECK_THROWS_AS(free_group(0), validation_error);
    }
}

TEST_CASE("evaluate_word") {
    CounterRng rng(31);
    const Representation rep = Representation::raw({haar_random(rng), haar_random(rng)});
    SUBCASE("empty word is the identity") {
        CHECK(evaluate_word(rep, {}).distance(SU2::identity()) == 0.0);
    }
    SUBCASE("g g^-1 is the identity") {
        CHECK(evaluate_word(rep, {1, -1}).distance(SU2::identity()) < 1e-12);
    }
    SUBCASE("relator evaluates to identity at valid torus-knot reps") {
        const Presentation p = torus_knot_group(3, 2);
        CounterRng r2(8);
        const Representation tk = random_torus_knot_rep(3, 2, 1, 1, r2);
        CHECK(evaluate_word(tk, p.relators[0]).distance(SU2::identity()) < 1e-8);
    }
    SUBCASE("multiplicativity over concatenation") {
        const Word w1{1, -2, 1}, w2{2, 2, -1};
        const SU2 lhs = evaluate_word(rep, concat(w1, w2));
        const SU2 rhs = evaluate_word(rep, w1) * evaluate_word(rep, w2);
        CHECK(lhs.distance(rhs) < 1e-14);
    }
    SUBCASE("index out of range") {
        CHECK_THROWS_AS(evaluate_word(rep, {3}), validation_error);
    }
}

TEST_CASE("fox_block basics") {
    CounterRng rng(17);
    const Representation rep = Representation::raw({haar_random(rng), haar_random(rng)});
    SUBCASE("single positive letter gives I3") {
        CHECK((fox_block(rep, {1}, 1) - Eigen::Matrix3d::Identity()).norm() < 1e-14);
    }
    SUBCASE("trivial relator g g^-1 has zero derivative") {
        CHECK(fox_block(rep, {1, -1}, 1).norm() < 1e-12);
    }
}

TEST_CASE("fox_block agrees with finite differences of the relator map") {
    // step 1e-5, tolerance 1e-4, for every builder presentation at random valid reps
    const double tol = 1e-4;
    CounterRng rng(400);

    auto check_presentation = [&](const Presentation& p, const Representation& rep) {
        for (const auto& rel : p.relators)
            for (int gen = 1; gen <= p.n_generators; ++gen) {
                const Eigen::Matrix3d fd = fd_fox_block(rep, rel, gen);
                const Eigen::Matrix3d fx = fox_block(rep, rel, gen);
                CHECK((fd - fx).norm() < tol);
            }
    };

    for (int it = 0; it < 20; ++it) {
        check_presentation(surface_group(2), random_surface_rep(2, rng));
        check_presentation(torus_group(), random_torus_rep(rng));
        check_presentation(torus_knot_group(3, 2), random_torus_knot_rep(3, 2, 1, 1, rng));
        check_presentation(two_bridge_group(3, 1),
                           trefoil_rep(-1.5 + 3.0 * rng.next_double()));
        // free groups have no relators; any tuple is a representation
    }
}

TEST_CASE("crossed_extension") {
    CounterRng rng(23);
    const Representation rep =
        Representation::raw({haar_random(rng), haar_random(rng), haar_random(rng)});
    std::vector<Eigen::Vector3d> cochain;
    for (int i = 0; i < 3; ++i)
        cochain.push_back(Eigen::Vector3d(rng.next_gaussian(), rng.next_gaussian(),
                                          rng.next_gaussian()));

    SUBCASE("empty word maps to zero") {
        CHECK(crossed_extension(rep, cochain, {}).norm() == 0.0);
    }
    SUBCASE("single generator returns its cochain value") {
        CHECK((crossed_extension(rep, cochain, {2}) - cochain[1]).norm() < 1e-15);
    }
    SUBCASE("coboundaries extend to xi - Ad_w xi") {
        const Eigen::Vector3d xi(0.3, -1.1, 0.7);
        std::vector<Eigen::Vector3d> db;
        for (int i = 0; i < 3; ++i)
            db.push_back(xi - adjoint_matrix(rep.images[i]) * xi);
        for (const Word& w : {Word{1, 2, -3, 1}, Word{-2, -2, 3, 1, -1}, Word{3, 3, 3}}) {
            const Eigen::Vector3d lhs = crossed_extension(rep, db, w);
            const Eigen::Vector3d rhs = xi - adjoint_matrix(evaluate_word(rep, w)) * xi;
            CHECK((lhs - rhs).norm() < 1e-10);
        }
    }
}

TEST_CASE("word helpers") {
    CHECK(parse_word("abA") == Word{1, 2, -1});
    CHECK(word_to_string({1, -2, 1}) == "aBa");
    CHECK(free_reduce({1, 2, -2, -1, 1}) == Word{1});
    CHECK(free_reduce({1, -1}) == Word{});
    CHECK_THROWS_AS(parse_word("a1b"), validation_error);
}

TEST_CASE("representation constructors") {
    const Presentation p = torus_group();
    SUBCASE("strict rejects non-representations") {
        CounterRng rng(3);
        CHECK_THROWS_AS(
            Representation::checked(p, {haar_random(rng), haar_random(rng)}),
            tolerance_error);
    }
    SUBCASE("raw accepts anything with matching arity") {
        CounterRng rng(3);
        const Representation r = Representation::raw({haar_random(rng), haar_random(rng)});
        CHECK(r.n_generators() == 2);
    }
}
