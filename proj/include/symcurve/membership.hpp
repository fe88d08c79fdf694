#pragma once

#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcurve/labeled.hpp"
#include "symcurve/linsolve.hpp"
#include "symcurve/polynomial.hpp"

namespace symcurve {

/// A weighted-homogeneous ideal, presented by labeled generators.
template <CoefficientField F>
class IdealGens {
public:
    IdealGens(F field, Weights weights, std::vector<LabeledPoly<F>> gens)
        : field_(std::move(field)), weights_(weights), gens_(std::move(gens)) {
        for (const auto& g : gens_) {
            if (g.value.is_zero())
                throw WeightMismatchError("ideal generator " + g.label + " is zero");
            if (!is_weighted_homogeneous(g.value, weights_))
                throw WeightMismatchError("ideal generator " + g.label +
                                          " is not weighted-homogeneous");
        }
    }

    const F& field() const { return field_; }
    const Weights& weights() const { return weights_; }
    const std::vector<LabeledPoly<F>>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }

private:
    F field_;
    Weights weights_;
    std::vector<LabeledPoly<F>> gens_;
};

/// All monomials of weighted degree d, in canonical order.
inline std::vector<Monomial> monomials_of_wdegree(long long d, const Weights& w) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (long long k = 0; k * w[2] <= d; ++k) {
        for (long long i = 0; k * w[2] + i * w[0] <= d; ++i) {
            long long rem = d - k * w[2] - i * w[0];
            if (rem % w[1] == 0)
                out.push_back(Monomial(static_cast<int>(i), static_cast<int>(rem / w[1]),
                                       static_cast<int>(k)));
        }
    }
    return out;
}

/// Cofactors h_i with f = sum h_i g_i, aligned with the ideal's generators.
template <CoefficientField F>
struct MembershipCertificate {
    std::vector<Polynomial<F>> cofactors;
};

template <CoefficientField F>
Polynomial<F> expand_certificate(const IdealGens<F>& ideal, const MembershipCertificate<F>& cert) {
    Polynomial<F> acc = Polynomial<F>::zero(ideal.field());
    for (std::size_t i = 0; i < ideal.size(); ++i)
        acc = acc + cert.cofactors.at(i) * ideal.generators()[i].value;
    return acc;
}

/// Refutation detail: the graded component and the first monomial coordinate
/// (canonical order) where the residual is nonzero.
struct NotMember {
    long long degree = 0;
    Monomial pivot_coordinate;
};

using MembershipOutcome = std::variant<std::monostate, NotMember>;

namespace detail {

// Solves one weighted-degree-d component: f_component must lie in the span of
// { m * g_i : deg m = d - deg g_i }.  Cofactors accumulate into `cofactors`.
template <CoefficientField F>
std::optional<NotMember> solve_component(const Polynomial<F>& component, long long d,
                                         const IdealGens<F>& ideal,
                                         std::vector<Polynomial<F>>& cofactors) {
    const F& field = ideal.field();
    const Weights& w = ideal.weights();
    const std::vector<Monomial> rows = monomials_of_wdegree(d, w);
    if (rows.empty()) return NotMember{d, Monomial::unit()};

    std::map<Monomial, int, CanonicalTermOrder> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], static_cast<int>(r));

    struct Column {
        std::size_t gen;
        Monomial multiplier;
    };
    std::vector<Column> columns;
    for (std::size_t i = 0; i < ideal.size(); ++i) {
        const auto& g = ideal.generators()[i].value;
        long long dg = std::get<long long>(weighted_degree(g, w));
        for (const Monomial& m : monomials_of_wdegree(d - dg, w)) columns.push_back({i, m});
    }

    DenseMatrix<F> a(field, static_cast<int>(rows.size()), static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& g = ideal.generators()[columns[c].gen].value;
        for (const auto& [m, coeff] : g.terms())
            a.at(row_of.at(m * columns[c].multiplier), static_cast<int>(c)) = coeff;
    }
    std::vector<typename F::Elem> b(rows.size(), field.zero());
    for (const auto& [m, coeff] : component.terms()) b[row_of.at(m)] = coeff;

    auto result = solve_linear(a, b);
    if (!result.solution) return NotMember{d, rows[result.inconsistent_row]};
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& coeff = (*result.solution)[c];
        if (field.is_zero(coeff)) continue;
        cofactors[columns[c].gen] =
            cofactors[columns[c].gen] +
            Polynomial<F>::monomial(field, columns[c].multiplier, coeff);
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides f in I by exact linear algebra on weighted-degree components.
/// Inhomogeneous f splits into components, each solved separately.  A
/// returned certificate has been re-expanded and checked.
template <CoefficientField F>
std::variant<MembershipCertificate<F>, NotMember> component_membership(const Polynomial<F>& f,
                                                                       const IdealGens<F>& ideal) {
    MembershipCertificate<F> cert;
    cert.cofactors.assign(ideal.size(), Polynomial<F>::zero(ideal.field()));
    if (f.is_zero()) return cert;
    if (!(f.field() == ideal.field()))
        throw FieldMismatchError("polynomial and ideal live over different fields");

    for (const auto& [d, component] : homogeneous_components(f, ideal.weights())) {
        auto failure = detail::solve_component(component, d, ideal, cert.cofactors);
        if (failure) return *failure;
    }
    if (expand_certificate(ideal, cert) != f)
        throw InternalMismatchError("membership certificate failed re-expansion");
    return cert;
}

/// Pairwise products, deduplicated up to scalar.
template <CoefficientField F>
IdealGens<F> ideal_product(const IdealGens<F>& a, const IdealGens<F>& b) {
    if (!(a.weights() == b.weights()))
        throw WeightMismatchError("ideal product of differently graded ideals");
    return IdealGens<F>(a.field(), a.weights(),
                        detail::labeled_products(a.generators(), b.generators()));
}

/// Generators { v * g : v monomial of total degree delta, g in I } of m^delta I.
template <CoefficientField F>
IdealGens<F> m_multiples(const IdealGens<F>& ideal, int delta) {
    if (delta < 0) throw Error("negative power of the maximal ideal");
    if (delta == 0) return ideal;
    std::vector<LabeledPoly<F>> monos;
    for (const Monomial& m : monomials_of_total_degree(delta))
        monos.push_back({m.to_string(), Polynomial<F>::monomial(ideal.field(), m)});
    return IdealGens<F>(ideal.field(), ideal.weights(),
                        detail::labeled_products(monos, ideal.generators()));
}

template <CoefficientField F>
struct ContainmentVerdict {
    struct Witness {
        std::string label;
        Polynomial<F> generator;
        long long degree = 0;
        Monomial pivot_coordinate;
    };

    bool contained = false;
    /// Per generator of A, in order; populated only when contained.
    std::vector<std::pair<std::string, MembershipCertificate<F>>> certificates;
    std::optional<Witness> witness;
};

/// A subset of B generator by generator.  `jobs` > 1 checks generators
/// concurrently without changing the verdict or the witness choice.
template <CoefficientField F>
ContainmentVerdict<F> contained(const IdealGens<F>& a, const IdealGens<F>& b, int jobs = 1) {
    if (!(a.weights() == b.weights()))
        throw WeightMismatchError("containment of differently graded ideals");
    ContainmentVerdict<F> verdict;

    auto check = [&](const LabeledPoly<F>& g) { return component_membership(g.value, b); };

    std::vector<std::variant<MembershipCertificate<F>, NotMember>> results;
    results.reserve(a.size());
    if (jobs <= 1) {
        for (const auto& g : a.generators()) {
            results.push_back(check(g));
            if (std::holds_alternative<NotMember>(results.back())) break;
        }
    } else {
        std::size_t next = 0;
        std::vector<std::future<void>> workers;
        std::mutex mu;
        results.resize(a.size(), MembershipCertificate<F>{});
        for (int t = 0; t < jobs; ++t) {
            workers.push_back(std::async(std::launch::async, [&]() {
                for (;;) {
                    std::size_t i;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= a.size()) return;
                        i = next++;
                    }
                    auto r = check(a.generators()[i]);
                    std::lock_guard<std::mutex> lock(mu);
                    results[i] = std::move(r);
                }
            }));
        }
        for (auto& wk : workers) wk.get();
    }

    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& g = a.generators()[i];
        if (const auto* failure = std::get_if<NotMember>(&results[i])) {
            verdict.contained = false;
            verdict.certificates.clear();
            verdict.witness = typename ContainmentVerdict<F>::Witness{
                g.label, g.value, failure->degree, failure->pivot_coordinate};
            return verdict;
        }
        verdict.certificates.emplace_back(g.label,
                                          std::get<MembershipCertificate<F>>(results[i]));
    }
    verdict.contained = true;
    return verdict;
}

}  // namespace symcurve
