#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace symcurve;
using namespace testsupport;

namespace {

RationalField Q;

}  // namespace

TEST_CASE("staircase lengths") {
    CHECK(staircase_length(Staircase({{1, 0}, {0, 1}})) == 1);          // (x, y)
    CHECK(staircase_length(Staircase({{2, 0}, {1, 2}, {0, 4}})) == 6);  // (x^2, x y^2, y^4)
    CHECK(staircase_length(Staircase({{2, 0}, {1, 1}, {0, 4}})) == 5);  // P mod x, the fixture
}

TEST_CASE("malformed staircases are rejected") {
    CHECK_THROWS_AS(Staircase({{2, 0}}), MalformedStaircaseError);
    CHECK_THROWS_AS(Staircase({{2, 1}, {0, 3}}), MalformedStaircaseError);   // v_0 != 0
    CHECK_THROWS_AS(Staircase({{2, 0}, {1, 2}}), MalformedStaircaseError);   // u_n != 0
    CHECK_THROWS_AS(Staircase({{2, 0}, {2, 1}, {0, 2}}), MalformedStaircaseError);  // u not strict
    CHECK_THROWS_AS(Staircase({{2, 0}, {1, 3}, {0, 2}}), MalformedStaircaseError);  // v decreases
    CHECK_THROWS_AS(Staircase({{2, 0}, {0, 0}}), MalformedStaircaseError);   // v_1 = 0
}

TEST_CASE("staircase length agrees with lattice-point counting") {
    std::mt19937 rng(1234321);
    std::uniform_int_distribution<int> len(2, 6);
    std::uniform_int_distribution<int> strict(1, 6);
    std::uniform_int_distribution<int> lax(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = len(rng);
        std::vector<std::pair<int, int>> steps(n);
        steps[n - 1].first = 0;
        for (int i = n - 2; i >= 0; --i) steps[i].first = steps[i + 1].first + strict(rng);
        steps[0].second = 0;
        for (int i = 1; i < n; ++i)
            steps[i].second = steps[i - 1].second + (i == 1 ? strict(rng) : lax(rng));
        Staircase s(steps);
        CHECK(staircase_length(s) == staircase_colength_bruteforce(steps));
    }
}

TEST_CASE("reduce and monomialize") {
    auto e = classify_weights({5, 11, 4});
    Weights w = canonical_weights(e);
    auto p = power_ideal(1, e, Q, w);

    auto mod_x = reduce_and_monomialize(p, Variable::x);
    auto s = std::get<Staircase>(mod_x);
    CHECK(s.steps() == std::vector<std::pair<int, int>>{{2, 0}, {1, 1}, {0, 4}});
    CHECK(staircase_length(s) == 5);  // (c1 + 2 c2) b

    // the level-3 basis contains D_3 = y^4 - z^11 mod x: not a monomial
    IdealGens<RationalField> sym3(Q, w, sympow_basis(3, e, Q).generators);
    auto bad = reduce_and_monomialize(sym3, Variable::x);
    auto nm = std::get<NonMonomialReduction>(bad);
    CHECK(nm.generator_label == "D_3");
    CHECK(nm.reduced == "y^4 - z^11");

    // mod z every generator reduces to a monomial
    auto mod_z = reduce_and_monomialize(sym3, Variable::z);
    CHECK(std::holds_alternative<Staircase>(mod_z));

    // missing pure power: (y^2, y z) in the remaining variables
    auto [f, g, h] = fgh(e, Q);
    IdealGens<RationalField> small(Q, w, {{"F", f}, {"H", h}});
    auto not_artinian = reduce_and_monomialize(small, Variable::x);
    CHECK(std::holds_alternative<NotArtinian>(not_artinian));
}

TEST_CASE("length criterion on the worked example") {
    auto e = classify_weights({5, 11, 4});
    Weights w = canonical_weights(e);

    // level 1: {F, G, H}, mod x, length 5 = binom(2,2) * (c1 + 2 c2) b
    auto level1 = verify_symbolic_equality(power_ideal(1, e, Q, w), 1, e);
    CHECK(level1.outcome == EqualityOutcome::verified);
    CHECK(level1.axis == Variable::x);
    CHECK(level1.length == 5);

    // level 3: (D_3) + (G^i H^j), mod z, length 24 = binom(4,2) * (2 a1 + a2) b
    IdealGens<RationalField> b3(Q, w, proof_set(3, e, Q));
    auto level3 = verify_symbolic_equality(b3, 3, e);
    CHECK(level3.outcome == EqualityOutcome::verified);
    CHECK(level3.axis == Variable::z);
    CHECK(level3.length == 24);

    // a deliberately small set undershoots
    auto [f, g, h] = fgh(e, Q);
    IdealGens<RationalField> small(Q, w, {{"F^2", f * f}, {"F*G", f * g}});
    auto outcome = verify_symbolic_equality(small, 2, e);
    CHECK(outcome.outcome == EqualityOutcome::failed);

    // both axis reductions non-monomial: inconclusive, distinct from failed.
    // D_3 breaks the x axis (y^4 - z^11); y^3 F + x^8 H breaks the z axis
    // (y^5 + x^11).
    auto twisted = f.times_monomial(Monomial(0, 3, 0)) + h.times_monomial(Monomial(8, 0, 0));
    IdealGens<RationalField> both(Q, w,
                                  {{"D_3", d_poly(3, e, Q).value}, {"twisted", twisted}});
    auto inconclusive = verify_symbolic_equality(both, 1, e);
    CHECK(inconclusive.outcome == EqualityOutcome::inconclusive);

    CHECK_THROWS_AS(verify_symbolic_equality(b3, 3, classify_weights({7, 9, 10})),
                    WrongTypeError);
}

TEST_CASE("length bookkeeping for all levels and both cases") {
    for (const auto& fixture : type1prime_fixtures()) {
        auto e = classify_weights(fixture.weights);
        Weights w = canonical_weights(e);
        const int r = r_index(e);
        const bool case1 = e.a2 > (r - 1) * e.a1;
        for (int level = 1; level <= r + 2; ++level) {
            IdealGens<RationalField> b(Q, w, proof_set(level, e, Q));
            auto report = verify_symbolic_equality(b, level, e);
            INFO(fixture.name << " level " << level << ": " << report.detail);
            CHECK(report.outcome == EqualityOutcome::verified);
            // The lemma's target for the axis that monomialized, re-derived.
            REQUIRE(report.axis.has_value());
            const long long binom = static_cast<long long>(level + 1) * level / 2;
            const long long expected = *report.axis == Variable::x
                                           ? binom * (e.c1 + 2LL * e.c2) * e.b1
                                           : binom * (2LL * e.a1 + e.a2) * e.b1;
            if (case1) CHECK(report.axis == Variable::x);
            CHECK(report.length == expected);
        }
    }
}

TEST_CASE("length targets grow strictly") {
    auto e = classify_weights({5, 11, 4});
    long long last = 0;
    for (int level = 1; level <= 6; ++level) {
        const long long binom = static_cast<long long>(level + 1) * level / 2;
        const long long target = binom * (e.c1 + 2LL * e.c2) * e.b1;
        CHECK(target > last);
        last = target;
    }
}
