#pragma once

// Shared fixtures and independent oracles for the test suites.  The oracles
// here deliberately avoid the library's arithmetic paths: naive term-by-term
// multiplication over raw maps, lattice-point counting for staircases.

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "symcurve/symcurve.hpp"

namespace testsupport {

using namespace symcurve;

struct Fixture {
    std::string name;
    std::array<long long, 3> weights;
    RawExponents expected_exponents;  // canonical form
    MatrixType expected_type;
};

/// Desk-scale curves used throughout: the counterexample curve, the s = 5
/// family member, two fixtures with a2 > (r-1)a1, the smallest type 1'
/// curve, and the type-2 fixture.
inline const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all{
        {"P(5,11,4)", {5, 11, 4}, {1, 2, 1, 1, 3, 1}, MatrixType::type1prime},
        {"P(6,19,5)", {6, 19, 5}, {1, 3, 1, 1, 4, 1}, MatrixType::type1prime},
        {"P(7,13,4)", {7, 13, 4}, {2, 3, 1, 1, 2, 1}, MatrixType::type1prime},
        {"P(9,26,5)", {9, 26, 5}, {2, 5, 1, 1, 3, 1}, MatrixType::type1prime},
        {"P(3,4,5)", {3, 4, 5}, {1, 1, 1, 1, 2, 1}, MatrixType::type1prime},
        {"P(11,34,7)", {11, 34, 7}, {2, 3, 1, 1, 5, 3}, MatrixType::type1prime},  // gamma_{r+1} > 0
        {"P(7,9,10)", {7, 9, 10}, {3, 1, 2, 1, 2, 1}, MatrixType::type2},
    };
    return all;
}

inline std::vector<Fixture> type1prime_fixtures() {
    std::vector<Fixture> out;
    for (const auto& f : fixtures())
        if (f.expected_type == MatrixType::type1prime) out.push_back(f);
    return out;
}

inline MatrixExponents classify_weights(const std::array<long long, 3>& w) {
    Weights weights(w[0], w[1], w[2]);
    auto rels = minimal_relations(weights);
    auto raw = exponents_from_relations(std::get<RelationTriple>(rels));
    auto outcome = classify(raw);
    if (!outcome.ok()) throw Error("fixture failed to classify: " + outcome.failure_reason);
    return *outcome.exponents;
}

inline Weights canonical_weights(const MatrixExponents& e) {
    auto w = weights_of(e);
    if (!w) throw Error("fixture has no weights");
    return *w;
}

// ---------------------------------------------------------------------------
// Independent oracles

/// Naive term-by-term product over a raw exponent map; no canonical order,
/// no library arithmetic.
template <CoefficientField F>
Polynomial<F> naive_mul(const Polynomial<F>& p, const Polynomial<F>& q) {
    const F& field = p.field();
    std::map<std::array<int, 3>, typename F::Elem> acc;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            std::array<int, 3> key{m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]};
            auto it = acc.find(key);
            if (it == acc.end())
                acc.emplace(key, field.mul(c1, c2));
            else
                it->second = field.add(it->second, field.mul(c1, c2));
        }
    }
    Polynomial<F> out = Polynomial<F>::zero(field);
    for (const auto& [key, c] : acc)
        out = out + Polynomial<F>::monomial(field, Monomial(key[0], key[1], key[2]), c);
    return out;
}

/// Lattice points outside the staircase ideal, counted one by one.
inline long long staircase_colength_bruteforce(const std::vector<std::pair<int, int>>& steps) {
    int umax = 0, vmax = 0;
    for (const auto& [u, v] : steps) {
        umax = std::max(umax, u);
        vmax = std::max(vmax, v);
    }
    long long count = 0;
    for (int i = 0; i < umax + 1; ++i) {
        for (int j = 0; j < vmax + 1; ++j) {
            bool inside = false;
            for (const auto& [u, v] : steps)
                if (i >= u && j >= v) {
                    inside = true;
                    break;
                }
            if (!inside) ++count;
        }
    }
    return count;
}

template <CoefficientField F>
Polynomial<F> random_polynomial(F field, std::mt19937& rng, int max_terms = 6, int max_exp = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    Polynomial<F> p = Polynomial<F>::zero(field);
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        long long c = coeff(rng);
        p = p + Polynomial<F>::monomial(field, Monomial(exp(rng), exp(rng), exp(rng)),
                                        field.from_int(c));
    }
    return p;
}

inline Monomial random_monomial(std::mt19937& rng, int max_exp = 5) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    return Monomial(exp(rng), exp(rng), exp(rng));
}

// ---------------------------------------------------------------------------
// The generating sets used in the length-criterion verifications: for levels
// up to r these are (D_l) + (G^i H^j : i+j = l); at r+1 and r+2 they follow
// the two cases of the proof, which differ in whether D_{r+1} enters.

template <CoefficientField F>
std::vector<LabeledPoly<F>> proof_set(int level, const MatrixExponents& e, F field) {
    const int r = e.a2 / e.a1 + 1;
    const bool case1 = e.a2 > (r - 1) * e.a1;
    auto [f, g, h] = fgh(e, field);
    auto gh = [&](int i, int j) {
        return LabeledPoly<F>{detail::label_product(i ? "G^" + std::to_string(i) : "1",
                                                    j ? "H^" + std::to_string(j) : "1"),
                              g.pow(i) * h.pow(j)};
    };
    std::vector<LabeledPoly<F>> out;
    if (level <= r) {
        out.push_back({"D_" + std::to_string(level), d_poly(level, e, field).value});
        for (int i = 0; i <= level; ++i) out.push_back(gh(i, level - i));
        return out;
    }
    auto dr = d_poly(r, e, field).value;
    if (level == r + 1) {
        out.push_back({detail::label_product("F", "D_" + std::to_string(r)), f * dr});
        out.push_back({detail::label_product("H", "D_" + std::to_string(r)), h * dr});
        out.push_back({detail::label_product("G", "D_" + std::to_string(r)), g * dr});
        if (case1)
            out.push_back({"D_" + std::to_string(r + 1), d_poly(r + 1, e, field).value});
        for (int i = 0; i <= r; ++i) out.push_back(gh(i, r + 1 - i));
        return out;
    }
    if (level == r + 2) {
        auto d2 = d_poly(2, e, field).value;
        out.push_back({detail::label_product("D_2", "D_" + std::to_string(r)), d2 * dr});
        out.push_back({detail::label_product("H^2", "D_" + std::to_string(r)), h * h * dr});
        out.push_back({detail::label_product("G*H", "D_" + std::to_string(r)), g * h * dr});
        out.push_back({detail::label_product("G^2", "D_" + std::to_string(r)), g * g * dr});
        if (case1) {
            auto drp1 = d_poly(r + 1, e, field).value;
            out.push_back({detail::label_product("H", "D_" + std::to_string(r + 1)), h * drp1});
            out.push_back({detail::label_product("G", "D_" + std::to_string(r + 1)), g * drp1});
        }
        for (int i = 0; i <= r; ++i) out.push_back(gh(i, r + 2 - i));
        return out;
    }
    throw LevelOutOfRangeError("proof sets cover 1 <= level <= r+2");
}

}  // namespace testsupport
