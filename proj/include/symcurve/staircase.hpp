#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcurve/membership.hpp"
#include "symcurve/sympow.hpp"

namespace symcurve {

/// A two-variable staircase ideal, given by the antichain pairing
/// (u_0, v_0), ..., (u_n, v_n) with u_0 > ... > u_{n-1} > u_n = 0 and
/// v_0 = 0 < v_1 <= ... <= v_n.
class Staircase {
public:
    explicit Staircase(std::vector<std::pair<int, int>> steps) : steps_(std::move(steps)) {
        if (steps_.size() < 2) throw MalformedStaircaseError("a staircase needs at least two steps");
        if (steps_.front().second != 0)
            throw MalformedStaircaseError("v_0 must be 0");
        if (steps_.back().first != 0)
            throw MalformedStaircaseError("u_n must be 0");
        for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
            if (steps_[i].first <= steps_[i + 1].first)
                throw MalformedStaircaseError("u must decrease strictly");
            if (steps_[i].second > steps_[i + 1].second)
                throw MalformedStaircaseError("v must not decrease");
        }
        if (steps_[1].second <= 0) throw MalformedStaircaseError("v_1 must be positive");
        for (const auto& [u, v] : steps_)
            if (u < 0 || v < 0) throw MalformedStaircaseError("negative staircase exponent");
    }

    const std::vector<std::pair<int, int>>& steps() const { return steps_; }

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (i) s += ",";
            s += "(" + std::to_string(steps_[i].first) + "," + std::to_string(steps_[i].second) + ")";
        }
        return s + "}";
    }

private:
    std::vector<std::pair<int, int>> steps_;
};

/// length(R/I) = sum u_i (v_{i+1} - v_i): the lattice points under the
/// staircase.
inline long long staircase_length(const Staircase& s) {
    long long total = 0;
    const auto& steps = s.steps();
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        total += static_cast<long long>(steps[i].first) * (steps[i + 1].second - steps[i].second);
    return total;
}

/// A generator whose reduction is not a unit multiple of a monomial.
struct NonMonomialReduction {
    std::string generator_label;
    std::string reduced;
};

/// The reduced monomial set misses a pure power on one axis, so the quotient
/// is not artinian.
struct NotArtinian {
    Variable missing_axis;
};

using MonomializeOutcome = std::variant<Staircase, NonMonomialReduction, NotArtinian>;

/// Reduces every generator mod v.  Succeeds only if each nonzero reduction
/// is a unit multiple of a monomial in the remaining two variables; the
/// minimalized monomial set is returned as a staircase, pairing
/// (first remaining variable, second remaining variable) in x < y < z order.
template <CoefficientField F>
MonomializeOutcome reduce_and_monomialize(const IdealGens<F>& ideal, Variable v) {
    const int dropped = static_cast<int>(v);
    const int first = dropped == 0 ? 1 : 0;
    const int second = dropped == 2 ? 1 : 2;

    std::vector<std::pair<int, int>> pairs;
    for (const auto& g : ideal.generators()) {
        Polynomial<F> red = g.value.reduce_mod_variable(v);
        if (red.is_zero()) continue;
        if (!red.is_monomial_multiple()) return NonMonomialReduction{g.label, red.to_string()};
        const Monomial m = red.leading_term().first;
        pairs.emplace_back(m[first], m[second]);
    }

    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<std::pair<int, int>> minimal;
    for (const auto& p : pairs) {
        bool dominated = false;
        for (const auto& q : pairs)
            if (q != p && q.first <= p.first && q.second <= p.second) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(p);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    if (minimal.empty() || minimal.front().second != 0)
        return NotArtinian{static_cast<Variable>(first)};
    if (minimal.back().first != 0) return NotArtinian{static_cast<Variable>(second)};
    return Staircase(minimal);
}

enum class EqualityOutcome { verified, failed, inconclusive };

struct SymbolicEqualityReport {
    EqualityOutcome outcome = EqualityOutcome::inconclusive;
    std::optional<Variable> axis;  // the axis whose reduction monomialized
    long long length = -1;
    long long target = -1;
    std::string detail;

    explicit operator bool() const { return outcome == EqualityOutcome::verified; }
};

/// The length criterion: B = P^(l) iff (a) every generator of B certifies
/// into P^(l) via a cleared multiple z^{(l-1)c2} g or x^{(l-1)a1} g lying in
/// P^l, and (b) some axis reduction monomializes with staircase length
/// binom(l+1,2)(c1+2c2)b (mod x) or binom(l+1,2)(2a1+a2)b (mod z).
template <CoefficientField F>
SymbolicEqualityReport verify_symbolic_equality(const IdealGens<F>& b, int level,
                                                const MatrixExponents& e) {
    if (e.type != MatrixType::type1prime)
        throw WrongTypeError("the length criterion is stated for type 1' matrices");
    if (level < 1) throw LevelOutOfRangeError("level must be positive");
    SymbolicEqualityReport report;
    const F& field = b.field();

    IdealGens<F> power_l(field, b.weights(), detail::power_products(level, e, field));
    const Monomial clear_z(0, 0, (level - 1) * e.c2);
    const Monomial clear_x((level - 1) * e.a1, 0, 0);
    for (const auto& g : b.generators()) {
        bool certified =
            std::holds_alternative<MembershipCertificate<F>>(
                component_membership(g.value.times_monomial(clear_z), power_l)) ||
            std::holds_alternative<MembershipCertificate<F>>(
                component_membership(g.value.times_monomial(clear_x), power_l));
        if (!certified) {
            report.outcome = EqualityOutcome::failed;
            report.detail = "generator " + g.label + " has no clearing certificate into P^" +
                            std::to_string(level);
            return report;
        }
    }

    const long long binom = static_cast<long long>(level + 1) * level / 2;
    const long long target_x = binom * (e.c1 + 2LL * e.c2) * e.b1;
    const long long target_z = binom * (2LL * e.a1 + e.a2) * e.b1;

    bool any_axis = false;
    for (auto [axis, target] : {std::pair{Variable::x, target_x}, std::pair{Variable::z, target_z}}) {
        MonomializeOutcome out = reduce_and_monomialize(b, axis);
        if (std::holds_alternative<NonMonomialReduction>(out)) continue;
        any_axis = true;
        report.axis = axis;
        report.target = target;
        if (const auto* na = std::get_if<NotArtinian>(&out)) {
            report.outcome = EqualityOutcome::failed;
            report.length = -1;
            report.detail = std::string("reduction mod ") + variable_name(axis) +
                            " is not artinian: no pure power of " +
                            variable_name(na->missing_axis);
            return report;
        }
        report.length = staircase_length(std::get<Staircase>(out));
        report.outcome =
            report.length == target ? EqualityOutcome::verified : EqualityOutcome::failed;
        report.detail = std::string("mod ") + variable_name(axis) + " length " +
                        std::to_string(report.length) + " vs target " + std::to_string(target);
        return report;
    }
    (void)any_axis;
    report.outcome = EqualityOutcome::inconclusive;
    report.detail = "no axis reduction is monomial";
    return report;
}

}  // namespace symcurve
