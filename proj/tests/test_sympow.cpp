#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace symcurve;
using namespace testsupport;

namespace {

RationalField Q;

Polynomial<RationalField> parse(const std::string& s) { return parse_polynomial(s, Q); }

}  // namespace

TEST_CASE("generators F, G, H") {
    auto e = classify_weights({5, 11, 4});
    auto [f, g, h] = fgh(e, Q);
    CHECK(f == parse("y^2 - x^2*z^3"));
    CHECK(g == parse("z^4 - x*y"));
    CHECK(h == parse("x^3 - y*z"));

    MatrixExponents ones{1, 1, 1, 1, 1, 1, MatrixType::type1prime, {}};
    auto [f1, g1, h1] = fgh(ones, Q);
    CHECK(f1 == parse("y^2 - x*z"));
    CHECK(g1 == parse("z^2 - x*y"));
    CHECK(h1 == parse("x^2 - y*z"));

    auto e2 = classify_weights({7, 9, 10});
    auto [f2, g2, h2] = fgh(e2, Q);
    CHECK(f2 == parse("y^3 - x*z^2"));
    CHECK(g2 == parse("z^3 - x^3*y"));
    CHECK(h2 == parse("x^4 - y^2*z"));
}

TEST_CASE("the D recursion on the worked example") {
    auto e = classify_weights({5, 11, 4});
    CHECK(d_poly(0, e, Q).value == parse("-y"));
    CHECK(d_poly(1, e, Q).value == fgh(e, Q)[0]);  // D_1 = F
    CHECK(d_poly(2, e, Q).value.to_string() == "-y^3 - x^5*z^2 + 3*x^2*y*z^3 - x*z^7");
    CHECK(d_poly(3, e, Q).value.to_string() ==
          "y^4 - x^8*z + 4*x^5*y*z^2 - 6*x^2*y^2*z^3 - x^4*z^6 + 4*x*y*z^7 - z^11");
    // D_{r+1} = D_4 is -z^{(r+1)c1 + r c2 + gamma} = -z^15 mod x
    CHECK(d_poly(4, e, Q).value.reduce_mod_variable(Variable::x) == parse("-z^15"));

    CHECK(d_poly(4, e, Q).alpha == 1);
    CHECK(d_poly(4, e, Q).gamma == 0);
    CHECK_THROWS_AS(d_poly(5, e, Q), LevelOutOfRangeError);
    CHECK_THROWS_AS(d_poly(-1, e, Q), LevelOutOfRangeError);
    CHECK_THROWS_AS(d_poly(2, classify_weights({7, 9, 10}), Q), WrongTypeError);
}

TEST_CASE("D_1 = F for every type-1 fixture") {
    for (const auto& fixture : type1prime_fixtures()) {
        auto e = classify_weights(fixture.weights);
        CHECK(d_poly(1, e, Q).value == fgh(e, Q)[0]);
    }
}

TEST_CASE("Schenzel generator and its m P certificate") {
    auto e = classify_weights({5, 11, 4});
    auto result = d2_general(e, Q);
    CHECK(result.d2.value == d_poly(2, e, Q).value);
    REQUIRE(result.certificate.cofactors.size() == 3);
    CHECK(result.certificate.cofactors[0] == parse("-y"));
    CHECK(result.certificate.cofactors[1] == parse("-x*z^3"));
    CHECK(result.certificate.cofactors[2] == parse("-x^2*z^2"));
    CHECK(result.certificate.expand() == result.d2.value);
    // every cofactor lies in m, witnessing P^(2) in m P
    for (const auto& cofactor : result.certificate.cofactors)
        CHECK(cofactor.leading_term().first.total_degree() >= 1);
}

TEST_CASE("Schenzel generator for the type-2 fixture") {
    auto e = classify_weights({7, 9, 10});
    auto result = d2_general(e, Q);
    const int alpha2 = std::max(0, e.a1 - e.a2);
    CHECK(alpha2 == 2);
    // z^{c2} D_2 = x^{alpha2} H F - x^{alpha2 + a2 - a1} y^{b1 - b2} G^2
    auto [f, g, h] = fgh(e, Q);
    auto lhs = result.d2.value.times_monomial(Monomial(0, 0, e.c2));
    auto rhs = (h * f).times_monomial(Monomial(alpha2, 0, 0)) -
               (g * g).times_monomial(Monomial(alpha2 + e.a2 - e.a1, e.b1 - e.b2, 0));
    CHECK(lhs == rhs);
}

TEST_CASE("recursion and Schenzel formula agree on type-1' fixtures") {
    for (const auto& fixture : type1prime_fixtures()) {
        auto e = classify_weights(fixture.weights);
        CHECK(d_poly(2, e, Q).value == d2_general(e, Q).d2.value);
    }
}

TEST_CASE("type-1 level-3 certificates") {
    auto e = classify_weights({5, 11, 4});
    auto result = d3_type1(e, Q);
    CHECK(result.d3.generator.value == d_poly(3, e, Q).value);

    // the displayed certificate D_3 = F^2 - z^3 G^2 - x^2 z H^2 - 2 x z^2 GH
    REQUIRE(result.d3.certificate.cofactors.size() == 4);
    CHECK(result.d3.certificate.cofactors[0] == parse("1"));
    CHECK(result.d3.certificate.cofactors[1] == parse("-z^3"));
    CHECK(result.d3.certificate.cofactors[2] == parse("-x^2*z"));
    CHECK(result.d3.certificate.cofactors[3] == parse("-2*x*z^2"));
    CHECK(result.d3.certificate.expand() == result.d3.generator.value);

    // beta_3 = max{0, 2 b2 - b1} = 1 here, so D'_3 is a different polynomial
    // of weighted degree 55 (= 44 + b * n_y); both certificates re-expand.
    CHECK(result.d3_prime.certificate.expand() == result.d3_prime.generator.value);
    CHECK(result.d3_prime.generator.value != result.d3.generator.value);
    Weights w(5, 11, 4);
    CHECK(std::get<long long>(weighted_degree(result.d3_prime.generator.value, w)) == 55);
    CHECK(std::get<long long>(weighted_degree(result.d3.generator.value, w)) == 44);
}

TEST_CASE("the F^2 cofactor is a unit exactly under the criterion") {
    // cofactor of F^2 in the D_3 formula is x^alpha y^{b1-b2} z^gamma
    auto unit_cofactor = [](const MatrixExponents& e) {
        auto result = d3_type1(e, RationalField{});
        auto lead = result.d3.certificate.cofactors[0].leading_term().first;
        return lead.is_unit();
    };
    CHECK(unit_cofactor(classify_weights({5, 11, 4})));
    CHECK_FALSE(unit_cofactor(classify_weights({3, 4, 5})));  // alpha_3 = 1
}

TEST_CASE("type-2 level-3 triple with certificates") {
    auto e = classify_weights({7, 9, 10});
    auto result = d3_type2(e, Q);
    CHECK_FALSE(result.characteristic_two);
    REQUIRE(result.generators.size() == 3);
    CHECK(result.generators[0].generator.label == "D_3");
    CHECK(result.generators[1].generator.label == "D'_3");
    CHECK(result.generators[2].generator.label == "D''_3");

    // instantiated cofactors for (alpha, beta, gamma) = (0, 0, 0)
    const auto& cofs = result.generators[0].certificate.cofactors;
    REQUIRE(cofs.size() == 4);
    CHECK(cofs[0] == parse("x*y*z"));
    CHECK(cofs[1] == parse("z^2"));
    CHECK(cofs[2] == parse("-x^2*z"));
    CHECK(cofs[3] == parse("2*x^2*y"));
    for (const auto& gen : result.generators) {
        CHECK(gen.certificate.expand() == gen.generator.value);
        // every cofactor lies in m: the containment theorem for type 2
        for (const auto& cofactor : gen.certificate.cofactors)
            CHECK(cofactor.leading_term().first.total_degree() >= 1);
    }

    // sigma has order 3
    CHECK(d3_type2_variant(3, e, Q) == d3_type2_variant(0, e, Q));
    CHECK(d3_type2_variant(4, e, Q) == d3_type2_variant(1, e, Q));
}

TEST_CASE("characteristic-2 collapse of the type-2 triple") {
    PrimeField f2(2);
    auto e = classify_weights({7, 9, 10});
    detail::Type2Groups gs(e);

    // sigma-image identity: z^{-c2+gamma} D_3 = x^{-a2+alpha} D'_3 = y^{-b2+beta} D''_3
    auto d3 = d3_type2_variant(0, e, f2);
    auto d3p = d3_type2_variant(1, e, f2);
    auto d3pp = d3_type2_variant(2, e, f2);
    auto core_z = d3.exact_div_monomial(Monomial(0, 0, gs.hi[2] - gs.delta[2]));
    auto core_x = d3p.exact_div_monomial(Monomial(gs.hi[0] - gs.delta[0], 0, 0));
    auto core_y = d3pp.exact_div_monomial(Monomial(0, gs.hi[1] - gs.delta[1], 0));
    CHECK(core_z == core_x);
    CHECK(core_z == core_y);

    // away from characteristic 2 the divisions must fail
    CHECK_THROWS_AS(
        d3_type2_variant(1, e, Q).exact_div_monomial(Monomial(gs.hi[0] - gs.delta[0], 0, 0)),
        NotDivisibleError);

    auto result = d3_type2(e, f2);
    CHECK(result.characteristic_two);
    REQUIRE(result.generators.size() == 1);
    CHECK(result.generators[0].generator.value == core_z);
    CHECK(result.generators[0].certificate.expand() == core_z);
    CHECK(result.generators[0].certificate.basis.size() == 3);  // F^2, G^2, H^2
}

TEST_CASE("plain type-1 third-power route") {
    // b1 > b2 in every qualifying relabeling: the level-3 set comes from the
    // P^(2) P + (D_3, D'_3) lemma, and the recursion is still available.
    auto outcome = classify({1, 2, 3, 1, 2, 1});
    REQUIRE(outcome.ok());
    const MatrixExponents& e = *outcome.exponents;
    REQUIRE(e.type == MatrixType::type1);

    auto result = d3_type1(e, Q);
    CHECK(result.d3.certificate.expand() == result.d3.generator.value);
    CHECK(result.d3_prime.certificate.expand() == result.d3_prime.generator.value);
    // b1 - b2 = 2 > 0 puts the F^2 cofactor inside m
    CHECK(result.d3.certificate.cofactors[0].leading_term().first.total_degree() >= 1);

    auto basis = sympow_basis(3, e, Q);
    CHECK(basis.provenance == Provenance::type1_third);
    bool has_d3 = false, has_d3p = false;
    for (const auto& g : basis.generators) {
        has_d3 |= g.label == "D_3";
        has_d3p |= g.label == "D'_3";
    }
    CHECK(has_d3);
    CHECK(has_d3p);
    CHECK_THROWS_AS(sympow_basis(4, e, Q), LevelOutOfRangeError);

    // the containment theorem, solver-checked: P^(3) in m P^2
    auto w = weights_of(e);
    REQUIRE(w.has_value());
    IdealGens<RationalField> sym3(Q, *w, basis.generators);
    CHECK(contained(sym3, m_multiples(power_ideal(2, e, Q, *w), 1)).contained);
    CHECK(third_power_criterion(e) == ThirdPowerVerdict::contained);
}

TEST_CASE("symbolic power bases") {
    auto e = classify_weights({5, 11, 4});
    auto level0 = sympow_basis(0, e, Q);
    REQUIRE(level0.generators.size() == 1);
    CHECK(level0.generators[0].value == parse("1"));

    auto level1 = sympow_basis(1, e, Q);
    CHECK(level1.generators.size() == 3);
    CHECK(level1.provenance == Provenance::powers_only);

    auto level2 = sympow_basis(2, e, Q);
    CHECK(level2.provenance == Provenance::schenzel_d2);
    REQUIRE(level2.generators.size() == 7);
    std::vector<std::string> labels;
    for (const auto& g : level2.generators) labels.push_back(g.label);
    CHECK(labels == std::vector<std::string>{"F^2", "F*G", "F*H", "G^2", "G*H", "H^2", "D_2"});

    auto level3 = sympow_basis(3, e, Q);
    CHECK(level3.provenance == Provenance::type1prime_low);
    CHECK(level3.generators.size() == 11);  // ten cubic products + D_3

    auto level4 = sympow_basis(4, e, Q);  // r + 1
    CHECK(level4.provenance == Provenance::type1prime_r_plus_1);
    CHECK(level4.generators.back().label == "D_4");

    auto level5 = sympow_basis(5, e, Q);  // r + 2
    CHECK(level5.provenance == Provenance::type1prime_r_plus_2);
    bool has_d2d3 = false;
    for (const auto& g : level5.generators) has_d2d3 |= (g.label == "D_2*D_3");
    CHECK(has_d2d3);
    CHECK_THROWS_AS(sympow_basis(6, e, Q), LevelOutOfRangeError);

    auto type2 = classify_weights({7, 9, 10});
    auto t2level3 = sympow_basis(3, type2, Q);
    CHECK(t2level3.provenance == Provenance::type2_third);
    CHECK_THROWS_AS(sympow_basis(4, type2, Q), LevelOutOfRangeError);

    PrimeField f2(2);
    auto t2char2 = sympow_basis(3, type2, f2);
    CHECK(t2char2.provenance == Provenance::type2_third_char2);
}

TEST_CASE("basis generators are homogeneous and lie in the kernel") {
    RationalField q;
    for (const auto& fixture : fixtures()) {
        auto e = classify_weights(fixture.weights);
        auto w = canonical_weights(e);
        int top = fixture.expected_type == MatrixType::type1prime ? r_index(e) + 2 : 3;
        for (int level = 0; level <= top; ++level) {
            for (const auto& g : sympow_basis(level, e, q).generators) {
                CHECK(is_weighted_homogeneous(g.value, w));
                if (level >= 1) CHECK(substitute_powers(g.value, w).is_zero());
            }
        }
    }
}

TEST_CASE("dual identity") {
    for (const auto& fixture : type1prime_fixtures()) {
        auto e = classify_weights(fixture.weights);
        const int r = r_index(e);
        for (int level = 1; level <= r + 1; ++level) CHECK(dual_identity_check(level, e));
        CHECK_THROWS_AS(dual_identity_check(r + 2, e), LevelOutOfRangeError);
    }
    CHECK_THROWS_AS(dual_identity_check(1, classify_weights({7, 9, 10})), WrongTypeError);
}

TEST_CASE("clearing exponents") {
    auto e = classify_weights({5, 11, 4});
    CHECK(clearing_exponents(1, e) == std::make_pair(Monomial(0, 0, 0), Monomial(0, 0, 0)));
    CHECK(clearing_exponents(3, e) == std::make_pair(Monomial(2, 0, 0), Monomial(0, 0, 2)));
    CHECK(clearing_exponents(4, e) == std::make_pair(Monomial(3, 0, 0), Monomial(0, 0, 3)));
}

TEST_CASE("congruence lemmas for D_l") {
    RationalField q;
    for (const auto& fixture : type1prime_fixtures()) {
        auto e = classify_weights(fixture.weights);
        const int r = r_index(e);
        const bool case1 = e.a2 > (r - 1) * e.a1;
        const int b = e.b1;
        for (int level = 1; level <= r; ++level) {
            auto d = d_poly(level, e, q).value;
            auto lead = Polynomial<RationalField>::monomial(
                q, Monomial(0, b * (level + 1), 0),
                (level + 1) % 2 == 0 ? q.one() : q.neg(q.one()));
            // coarse congruence: mod x in Case 1, mod z in Case 2
            if (case1)
                CHECK(d.reduce_mod_variable(Variable::x) == lead);
            else
                CHECK(d.reduce_mod_variable(Variable::z) == lead);
            // finer congruence mod the monomial x^{a2-(l-1)a1} z^{c1-(l-1)c2+1}
            auto sub = Polynomial<RationalField>::monomial(
                q, Monomial((level - 1) * e.a1 + level * e.a2, 0, e.c1 - (level - 1) * e.c2),
                q.neg(q.one()));
            CHECK(congruent_mod_monomial(
                d, lead + sub,
                Monomial(e.a2 - (level - 1) * e.a1, 0, e.c1 - (level - 1) * e.c2 + 1)));
        }
        // D_{r+1} = -z^{(r+1)c1 + r c2 + gamma} mod x
        const int gamma = gamma_exponent(e, r + 1);
        auto top = d_poly(r + 1, e, q).value.reduce_mod_variable(Variable::x);
        CHECK(top == Polynomial<RationalField>::monomial(
                         q, Monomial(0, 0, (r + 1) * e.c1 + r * e.c2 + gamma), q.neg(q.one())));
    }
}
