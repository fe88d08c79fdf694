#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symcurve/curve.hpp"
#include "symcurve/labeled.hpp"
#include "symcurve/polynomial.hpp"

namespace symcurve {

inline int alpha_exponent(const MatrixExponents& e, int level) {
    return std::max(0, (level - 1) * e.a1 - e.a2);
}

inline int gamma_exponent(const MatrixExponents& e, int level) {
    return std::max(0, (level - 1) * e.c2 - e.c1);
}

/// The signed binomial generators of P = I_2(M):
///   F = y^{b1+b2} - x^{a2} z^{c1},
///   G = z^{c1+c2} - x^{a1} y^{b2},
///   H = x^{a1+a2} - y^{b1} z^{c2}.
template <CoefficientField F>
std::array<Polynomial<F>, 3> fgh(const MatrixExponents& e, F field) {
    using P = Polynomial<F>;
    auto neg_one = field.neg(field.one());
    P f = P::monomial(field, Monomial(0, e.b1 + e.b2, 0)) +
          P::monomial(field, Monomial(e.a2, 0, e.c1), neg_one);
    P g = P::monomial(field, Monomial(0, 0, e.c1 + e.c2)) +
          P::monomial(field, Monomial(e.a1, e.b2, 0), neg_one);
    P h = P::monomial(field, Monomial(e.a1 + e.a2, 0, 0)) +
          P::monomial(field, Monomial(0, e.b1, e.c2), neg_one);
    return {f, g, h};
}

template <CoefficientField F>
struct DPoly {
    int level = 0;
    Polynomial<F> value;
    int alpha = 0;
    int gamma = 0;
};

/// Runs the recursion
///   D_n = x^{alpha_n} z^{gamma_n - c2} (H D_{n-1} - x^{a2-(n-1)a1} y^{(n-1)(b1-b2)} G^n),
///   D_0 = -y^{b2},
/// with the x factors combined before evaluation so exponents stay
/// non-negative, and the z factor applied as a checked exact division when
/// its exponent is negative.  Defined for type 1 / 1' and 0 <= n <= r+1.
template <CoefficientField F>
DPoly<F> d_poly(int level, const MatrixExponents& e, F field) {
    if (e.type == MatrixType::type2)
        throw WrongTypeError("the D_n recursion is defined for type 1 matrices only");
    const int r = e.a2 / e.a1 + 1;
    if (level < 0 || level > r + 1)
        throw LevelOutOfRangeError("D_" + std::to_string(level) + " is outside 0 <= n <= r+1 = " +
                                   std::to_string(r + 1));
    using P = Polynomial<F>;
    auto [f, g, h] = fgh(e, field);
    P d = P::monomial(field, Monomial(0, e.b2, 0), field.neg(field.one()));
    P g_pow = P::one(field);
    for (int n = 1; n <= level; ++n) {
        g_pow = g_pow * g;
        const int alpha = alpha_exponent(e, n);
        const int gamma = gamma_exponent(e, n);
        const int x_combined = std::max(0, e.a2 - (n - 1) * e.a1);  // alpha_n + a2 - (n-1)a1
        P t = (h * d).times_monomial(Monomial(alpha, 0, 0)) -
              g_pow.times_monomial(Monomial(x_combined, (n - 1) * (e.b1 - e.b2), 0));
        const int ze = gamma - e.c2;
        d = ze >= 0 ? t.times_monomial(Monomial(0, 0, ze))
                    : t.exact_div_monomial(Monomial(0, 0, -ze));
    }
    return DPoly<F>{level, d, alpha_exponent(e, level), gamma_exponent(e, level)};
}

/// A combination f = sum h_i g_i held next to its ingredients.
template <CoefficientField F>
struct ExplicitCertificate {
    std::vector<LabeledPoly<F>> basis;
    std::vector<Polynomial<F>> cofactors;

    Polynomial<F> expand() const {
        Polynomial<F> acc = Polynomial<F>::zero(basis.at(0).value.field());
        for (std::size_t i = 0; i < basis.size(); ++i) acc = acc + cofactors.at(i) * basis[i].value;
        return acc;
    }
};

/// Re-verifies a closed-form certificate by expansion.  A mismatch is a hard
/// error, never a warning.
template <CoefficientField F>
void require_certificate(const Polynomial<F>& target, const ExplicitCertificate<F>& cert,
                         const std::string& what) {
    if (cert.expand() != target)
        throw InternalMismatchError("certificate for " + what + " does not re-expand to its target");
}

template <CoefficientField F>
struct CertifiedGenerator {
    LabeledPoly<F> generator;
    ExplicitCertificate<F> certificate;
};

template <CoefficientField F>
struct D2Result {
    DPoly<F> d2;
    ExplicitCertificate<F> certificate;  // over (F, G, H); every cofactor lies in m
};

/// Schenzel's generator D_2 = x^{alpha_2} z^{-c2} (H F - x^{a2-a1} y^{b1-b2} G^2)
/// with alpha_2 = max{0, a1-a2}, together with the explicit combination
///   D_2 = -x^{alpha_2} (y^{b1} F + x^{a2-a1} y^{b1-b2} z^{c1} G + x^{a2} z^{c1-c2} H).
/// Valid for type 1 and type 2.
template <CoefficientField F>
D2Result<F> d2_general(const MatrixExponents& e, F field) {
    using P = Polynomial<F>;
    auto [f, g, h] = fgh(e, field);
    const int alpha2 = std::max(0, e.a1 - e.a2);
    const int x_g = alpha2 + e.a2 - e.a1;  // = max(0, a2-a1)
    P t = (h * f).times_monomial(Monomial(alpha2, 0, 0)) -
          (g * g).times_monomial(Monomial(x_g, e.b1 - e.b2, 0));
    P d2 = t.exact_div_monomial(Monomial(0, 0, e.c2));

    auto neg_one = field.neg(field.one());
    ExplicitCertificate<F> cert{
        {{"F", f}, {"G", g}, {"H", h}},
        {P::monomial(field, Monomial(alpha2, e.b1, 0), neg_one),
         P::monomial(field, Monomial(x_g, e.b1 - e.b2, e.c1), neg_one),
         P::monomial(field, Monomial(alpha2 + e.a2, 0, e.c1 - e.c2), neg_one)}};
    require_certificate(d2, cert, "D_2");
    return D2Result<F>{DPoly<F>{2, d2, alpha2, gamma_exponent(e, 2)}, cert};
}

template <CoefficientField F>
struct D3Type1Result {
    CertifiedGenerator<F> d3;        // over (F^2, G^2, H^2, G*H)
    CertifiedGenerator<F> d3_prime;  // over the same basis
};

/// The two distinguished level-3 generators of a type-1 matrix, each written
/// in terms of F^2, G^2, H^2 and GH.  With alpha = max{0, 2a1-a2},
/// beta = max{0, 2b2-b1}, gamma = max{0, 2c2-c1}:
///   D_3  = x^alpha y^{b1-b2} z^gamma F^2 - x^{a2-2a1+alpha} y^{2b1-2b2} z^{c1+gamma} G^2
///          - x^{a2+alpha} z^{c1-2c2+gamma} H^2 - 2 x^{a2-a1+alpha} y^{b1-b2} z^{c1-c2+gamma} GH,
///   D'_3 = y^beta z^{gamma-c2} (H D_2 + x^{a2-a1} y^{b1-2b2} F G^2) with the analogous formula.
template <CoefficientField F>
D3Type1Result<F> d3_type1(const MatrixExponents& e, F field) {
    if (e.type == MatrixType::type2) throw WrongTypeError("d3_type1 requires a type 1 matrix");
    using P = Polynomial<F>;
    auto [f, g, h] = fgh(e, field);
    const int alpha = std::max(0, 2 * e.a1 - e.a2);
    const int beta = std::max(0, 2 * e.b2 - e.b1);
    const int gamma = std::max(0, 2 * e.c2 - e.c1);
    auto one = field.one();
    auto neg_one = field.neg(one);
    auto neg_two = field.neg(field.from_int(2));

    std::vector<LabeledPoly<F>> basis{{"F^2", f * f}, {"G^2", g * g}, {"H^2", h * h}, {"G*H", g * h}};

    P d3 = d_poly(3, e, field).value;
    ExplicitCertificate<F> cert3{
        basis,
        {P::monomial(field, Monomial(alpha, e.b1 - e.b2, gamma), one),
         P::monomial(field, Monomial(e.a2 - 2 * e.a1 + alpha, 2 * (e.b1 - e.b2), e.c1 + gamma),
                     neg_one),
         P::monomial(field, Monomial(e.a2 + alpha, 0, e.c1 - 2 * e.c2 + gamma), neg_one),
         P::monomial(field, Monomial(e.a2 - e.a1 + alpha, e.b1 - e.b2, e.c1 - e.c2 + gamma),
                     neg_two)}};
    require_certificate(d3, cert3, "D_3");

    P d2 = d2_general(e, field).d2.value;
    P t = (h * d2).times_monomial(Monomial(0, beta, 0)) +
          (f * (g * g)).times_monomial(Monomial(e.a2 - e.a1, std::max(0, e.b1 - 2 * e.b2), 0));
    const int ze = gamma - e.c2;
    P d3p = ze >= 0 ? t.times_monomial(Monomial(0, 0, ze))
                    : t.exact_div_monomial(Monomial(0, 0, -ze));
    ExplicitCertificate<F> cert3p{
        basis,
        {P::monomial(field, Monomial(0, e.b1 - e.b2 + beta, gamma), one),
         P::monomial(field, Monomial(2 * e.a2 - e.a1, std::max(0, e.b1 - 2 * e.b2), e.c1 - e.c2 + gamma),
                     neg_one),
         P::monomial(field, Monomial(e.a2, beta, e.c1 - 2 * e.c2 + gamma), neg_one),
         P::monomial(field, Monomial(e.a2 - e.a1, e.b1 - e.b2 + beta, e.c1 - e.c2 + gamma),
                     neg_two)}};
    require_certificate(d3p, cert3p, "D'_3");

    return D3Type1Result<F>{{{"D_3", d3}, cert3}, {{"D'_3", d3p}, cert3p}};
}

namespace detail {

// Rotated type-2 exponent bookkeeping: group g holds variable g's exponent
// pair (lo, hi) and its delta = max{0, 2 hi - lo}.
struct Type2Groups {
    std::array<int, 3> lo, hi, delta;

    explicit Type2Groups(const MatrixExponents& e)
        : lo{e.a1, e.b1, e.c1}, hi{e.a2, e.b2, e.c2} {
        for (int g = 0; g < 3; ++g) delta[g] = std::max(0, 2 * hi[g] - lo[g]);
    }

    static Monomial mono(std::initializer_list<std::pair<int, int>> parts) {
        std::array<int, 3> ex{0, 0, 0};
        for (auto [v, p] : parts) ex[v] += p;
        return Monomial(ex[0], ex[1], ex[2]);
    }
};

}  // namespace detail

/// The sigma^t image of the type-2 generator D_3, built from its defining
/// expression; t = 0, 1, 2 give D_3, D'_3, D''_3.
template <CoefficientField F>
Polynomial<F> d3_type2_variant(int t, const MatrixExponents& e, F field) {
    if (e.type != MatrixType::type2) throw WrongTypeError("d3_type2 requires a type 2 matrix");
    detail::Type2Groups gs(e);
    auto p = fgh(e, field);
    t = ((t % 3) + 3) % 3;  // sigma has order 3
    const int t1 = (t + 1) % 3, t2 = (t + 2) % 3;
    auto term1 = (p[t2] * p[t2] * p[t]).times_monomial(detail::Type2Groups::mono(
        {{t, std::max(0, gs.lo[t] - 2 * gs.hi[t])}, {t1, gs.delta[t1]}}));
    auto term2 = p[t1].pow(3).times_monomial(detail::Type2Groups::mono(
        {{t1, std::max(0, gs.lo[t1] - 2 * gs.hi[t1])}, {t, gs.delta[t]}}));
    return (term1 + term2).exact_div_monomial(Monomial::var(static_cast<Variable>(t2), gs.hi[t2]));
}

template <CoefficientField F>
struct D3Type2Result {
    bool characteristic_two = false;
    std::vector<CertifiedGenerator<F>> generators;
};

/// Extra level-3 generators of a type-2 matrix.  Away from characteristic 2
/// these are D_3, D'_3 = D_3^sigma and D''_3 = D_3^{sigma^2}, each certified
/// over (F^2, G^2, H^2, FG) and its sigma images.  In characteristic 2 the
/// single generator z^{-c2+gamma} D_3 suffices, certified over
/// (F^2, G^2, H^2).
template <CoefficientField F>
D3Type2Result<F> d3_type2(const MatrixExponents& e, F field) {
    if (e.type != MatrixType::type2) throw WrongTypeError("d3_type2 requires a type 2 matrix");
    using P = Polynomial<F>;
    using detail::Type2Groups;
    Type2Groups gs(e);
    auto p = fgh(e, field);
    const std::array<std::string, 3> names{"F", "G", "H"};
    auto one = field.one();
    auto neg_one = field.neg(one);

    if (field.characteristic() == 2) {
        P d3 = d3_type2_variant(0, e, field);
        P value = d3.exact_div_monomial(Monomial(0, 0, gs.hi[2] - gs.delta[2]));
        ExplicitCertificate<F> cert{
            {{"F^2", p[0] * p[0]}, {"G^2", p[1] * p[1]}, {"H^2", p[2] * p[2]}},
            {P::monomial(field,
                         Monomial(gs.lo[0] - 2 * gs.hi[0] + gs.delta[0],
                                  gs.lo[1] - gs.hi[1] + gs.delta[1], gs.delta[2]),
                         neg_one),
             P::monomial(field,
                         Monomial(gs.delta[0], gs.lo[1] - 2 * gs.hi[1] + gs.delta[1],
                                  gs.lo[2] - gs.hi[2] + gs.delta[2]),
                         neg_one),
             P::monomial(field,
                         Monomial(gs.lo[0] - gs.hi[0] + gs.delta[0], gs.delta[1],
                                  gs.lo[2] - 2 * gs.hi[2] + gs.delta[2]),
                         one)}};
        require_certificate(value, cert, "z^{-c2+gamma} D_3");
        std::string label = gs.delta[2] == gs.hi[2] ? "D_3" : "z^-" + std::to_string(gs.hi[2] - gs.delta[2]) + "*D_3";
        D3Type2Result<F> out;
        out.characteristic_two = true;
        out.generators.push_back({{label, value}, cert});
        return out;
    }

    D3Type2Result<F> out;
    const std::array<std::string, 3> labels{"D_3", "D'_3", "D''_3"};
    for (int t = 0; t < 3; ++t) {
        const int t1 = (t + 1) % 3, t2 = (t + 2) % 3;
        P value = d3_type2_variant(t, e, field);
        ExplicitCertificate<F> cert{
            {{names[t] + "^2", p[t] * p[t]},
             {names[t1] + "^2", p[t1] * p[t1]},
             {names[t2] + "^2", p[t2] * p[t2]},
             {names[t] + "*" + names[t1], p[t] * p[t1]}},
            {P::monomial(field,
                         Type2Groups::mono({{t, gs.lo[t] - 2 * gs.hi[t] + gs.delta[t]},
                                            {t1, gs.lo[t1] - gs.hi[t1] + gs.delta[t1]},
                                            {t2, gs.hi[t2]}}),
                         one),
             P::monomial(field,
                         Type2Groups::mono({{t, gs.delta[t]},
                                            {t1, gs.lo[t1] - 2 * gs.hi[t1] + gs.delta[t1]},
                                            {t2, gs.lo[t2]}}),
                         one),
             P::monomial(field,
                         Type2Groups::mono({{t, gs.lo[t] - gs.hi[t] + gs.delta[t]},
                                            {t1, gs.delta[t1]},
                                            {t2, gs.lo[t2] - gs.hi[t2]}}),
                         neg_one),
             P::monomial(field,
                         Type2Groups::mono({{t, gs.lo[t] - gs.hi[t] + gs.delta[t]},
                                            {t1, gs.lo[t1] - gs.hi[t1] + gs.delta[t1]}}),
                         field.from_int(2))}};
        require_certificate(value, cert, labels[t]);
        out.generators.push_back({{labels[t], value}, cert});
    }
    return out;
}

enum class Provenance {
    powers_only,
    schenzel_d2,
    type1_third,
    type2_third,
    type2_third_char2,
    type1prime_low,
    type1prime_r_plus_1,
    type1prime_r_plus_2,
};

inline std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::powers_only: return "powers_only";
        case Provenance::schenzel_d2: return "schenzel_d2";
        case Provenance::type1_third: return "type1_third";
        case Provenance::type2_third: return "type2_third";
        case Provenance::type2_third_char2: return "type2_third_char2";
        case Provenance::type1prime_low: return "type1prime_low";
        case Provenance::type1prime_r_plus_1: return "type1prime_r_plus_1";
        case Provenance::type1prime_r_plus_2: return "type1prime_r_plus_2";
    }
    return "?";
}

template <CoefficientField F>
struct SymbolicPowerBasis {
    int level = 0;
    Provenance provenance = Provenance::powers_only;
    std::vector<LabeledPoly<F>> generators;
};

namespace detail {

template <CoefficientField F>
std::vector<LabeledPoly<F>> power_products(int level, const MatrixExponents& e, F field) {
    if (level == 0) return {{"1", Polynomial<F>::one(field)}};
    auto [f, g, h] = fgh(e, field);
    std::vector<LabeledPoly<F>> out;
    for (int i = level; i >= 0; --i) {
        for (int j = level - i; j >= 0; --j) {
            int k = level - i - j;
            std::string label = "1";
            Polynomial<F> value = Polynomial<F>::one(field);
            auto mul_in = [&](const char* name, const Polynomial<F>& p, int times) {
                for (int n = 0; n < times; ++n) {
                    label = label_product(label, name);
                    value = value * p;
                }
            };
            mul_in("F", f, i);
            mul_in("G", g, j);
            mul_in("H", h, k);
            out.push_back({label, value});
        }
    }
    return out;
}

}  // namespace detail

/// Explicit finite generating set of P^(level), assembled from the
/// generating-set theorems: P^(l) = P^l + (D_l) for l <= r (type 1'),
/// P^(r+1) = P^(r) P + (D_{r+1}), P^(r+2) = P^(r+1) P + P^(r) P^(2), and the
/// type-1 / type-2 third-power lemmas otherwise.
template <CoefficientField F>
SymbolicPowerBasis<F> sympow_basis(int level, const MatrixExponents& e, F field) {
    if (level < 0) throw LevelOutOfRangeError("negative symbolic power");
    SymbolicPowerBasis<F> out;
    out.level = level;

    if (level <= 1) {
        out.provenance = Provenance::powers_only;
        out.generators = detail::power_products(level, e, field);
        return out;
    }
    if (level == 2) {
        out.provenance = Provenance::schenzel_d2;
        out.generators = detail::power_products(2, e, field);
        out.generators.push_back({"D_2", d2_general(e, field).d2.value});
        return out;
    }

    if (e.type == MatrixType::type1prime) {
        const int r = r_index(e);
        if (level <= r) {
            out.provenance = Provenance::type1prime_low;
            out.generators = detail::power_products(level, e, field);
            out.generators.push_back({"D_" + std::to_string(level), d_poly(level, e, field).value});
            return out;
        }
        if (level == r + 1) {
            out.provenance = Provenance::type1prime_r_plus_1;
            auto prev = sympow_basis(r, e, field);
            out.generators =
                detail::labeled_products(prev.generators, detail::power_products(1, e, field));
            out.generators.push_back({"D_" + std::to_string(level), d_poly(level, e, field).value});
            return out;
        }
        if (level == r + 2) {
            out.provenance = Provenance::type1prime_r_plus_2;
            auto at_r = sympow_basis(r, e, field);
            auto at_r1 = sympow_basis(r + 1, e, field);
            auto at_2 = sympow_basis(2, e, field);
            out.generators =
                detail::labeled_products(at_r1.generators, detail::power_products(1, e, field));
            auto mixed = detail::labeled_products(at_r.generators, at_2.generators);
            std::map<std::string, bool> seen;
            for (const auto& g : out.generators) seen.emplace(detail::scalar_class_key(g.value), true);
            for (const auto& g : mixed) {
                if (seen.emplace(detail::scalar_class_key(g.value), true).second)
                    out.generators.push_back(g);
            }
            return out;
        }
        throw LevelOutOfRangeError("symbolic powers above r+2 are out of reach for type 1'");
    }

    if (level == 3) {
        auto base = sympow_basis(2, e, field);
        out.generators =
            detail::labeled_products(base.generators, detail::power_products(1, e, field));
        if (e.type == MatrixType::type1) {
            out.provenance = Provenance::type1_third;
            auto d3s = d3_type1(e, field);
            out.generators.push_back(d3s.d3.generator);
            out.generators.push_back(d3s.d3_prime.generator);
        } else {
            auto extras = d3_type2(e, field);
            out.provenance = extras.characteristic_two ? Provenance::type2_third_char2
                                                       : Provenance::type2_third;
            for (const auto& g : extras.generators) out.generators.push_back(g.generator);
        }
        return out;
    }
    throw LevelOutOfRangeError("symbolic powers above 3 are out of reach for type " +
                               to_string(e.type));
}

/// Checks the two expressions for x^{-alpha_l} z^{-gamma_l} D_l against each
/// other after clearing denominators:
///   x^{a1} (H D_{l-1} - x^{a2-(l-1)a1} G^l) = z^{c2} (G D_{l-1} - z^{c1-(l-1)c2} H^l).
inline bool dual_identity_check(int level, const MatrixExponents& e) {
    if (e.type != MatrixType::type1prime)
        throw WrongTypeError("dual identity is stated for type 1' matrices");
    const int r = r_index(e);
    if (level < 1 || level > r + 1)
        throw LevelOutOfRangeError("dual identity holds for 1 <= l <= r+1");
    RationalField field;
    auto [f, g, h] = fgh(e, field);
    auto d_prev = d_poly(level - 1, e, field).value;
    const int alpha = alpha_exponent(e, level);
    const int gamma = gamma_exponent(e, level);
    auto lhs = ((h * d_prev).times_monomial(Monomial(alpha, 0, 0)) -
                g.pow(level).times_monomial(Monomial(std::max(0, e.a2 - (level - 1) * e.a1), 0, 0)))
                   .times_monomial(Monomial(e.a1, 0, gamma));
    auto rhs = ((g * d_prev).times_monomial(Monomial(0, 0, gamma)) -
                h.pow(level).times_monomial(Monomial(0, 0, std::max(0, e.c1 - (level - 1) * e.c2))))
                   .times_monomial(Monomial(alpha, 0, e.c2));
    return lhs == rhs;
}

/// The monomial multipliers x^{(l-1)a1} and z^{(l-1)c2} clearing D_l into P^l.
inline std::pair<Monomial, Monomial> clearing_exponents(int level, const MatrixExponents& e) {
    if (e.type != MatrixType::type1prime)
        throw WrongTypeError("clearing exponents are stated for type 1' matrices");
    const int r = r_index(e);
    if (level < 1 || level > r + 1)
        throw LevelOutOfRangeError("clearing multipliers hold for 1 <= l <= r+1");
    return {Monomial((level - 1) * e.a1, 0, 0), Monomial(0, 0, (level - 1) * e.c2)};
}

/// True when every term of p - q is divisible by m.
template <CoefficientField F>
bool congruent_mod_monomial(const Polynomial<F>& p, const Polynomial<F>& q, const Monomial& m) {
    Polynomial<F> diff = p - q;
    for (const auto& [mm, c] : diff.terms())
        if (!m.divides(mm)) return false;
    return true;
}

}  // namespace symcurve
