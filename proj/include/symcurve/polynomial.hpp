#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "symcurve/fields.hpp"
#include "symcurve/monomial.hpp"

namespace symcurve {

/// Sparse exact polynomial in x, y, z over a coefficient field F.
///
/// Invariants: no stored coefficient is zero, and terms sit in the canonical
/// order, so printing and iteration are deterministic.  Values are immutable
/// in spirit: every operation returns a fresh polynomial.
template <CoefficientField F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    using TermMap = std::map<Monomial, Elem, CanonicalTermOrder>;

    explicit Polynomial(F field) : field_(std::move(field)) {}

    static Polynomial zero(F field) { return Polynomial(std::move(field)); }

    static Polynomial constant(F field, Elem c) {
        Polynomial p(std::move(field));
        p.add_term(Monomial::unit(), c);
        return p;
    }

    static Polynomial one(F field) {
        Elem c = field.one();
        return constant(std::move(field), c);
    }

    static Polynomial monomial(F field, const Monomial& m, Elem c) {
        Polynomial p(std::move(field));
        p.add_term(m, c);
        return p;
    }

    static Polynomial monomial(F field, const Monomial& m) {
        Elem c = field.one();
        return monomial(std::move(field), m, c);
    }

    const F& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial_multiple() const { return terms_.size() == 1; }

    /// Coefficient of m (field zero when absent).
    Elem coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    /// First term in canonical order; polynomial must be nonzero.
    std::pair<Monomial, Elem> leading_term() const {
        if (terms_.empty()) throw ZeroPolynomialError();
        return *terms_.begin();
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_field(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        require_same_field(o);
        Polynomial r(*this);
        for (const auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(field_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_field(o);
        Polynomial r(field_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, field_.mul(c1, c2));
        return r;
    }

    Polynomial scaled(const Elem& c) const {
        Polynomial r(field_);
        if (field_.is_zero(c)) return r;
        for (const auto& [m, cc] : terms_) r.terms_.emplace(m, field_.mul(cc, c));
        return r;
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial r(field_);
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
        return r;
    }

    Polynomial pow(int n) const {
        if (n < 0) throw Error("negative polynomial power");
        Polynomial r = one(field_);
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    bool operator==(const Polynomial& o) const {
        if (!(field_ == o.field_)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin(), jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (!(it->first == jt->first) || !field_.eq(it->second, jt->second)) return false;
        }
        return true;
    }

    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// q with q*m = *this; every term must be divisible by m.
    Polynomial exact_div_monomial(const Monomial& m) const {
        Polynomial r(field_);
        for (const auto& [mm, c] : terms_) {
            if (!m.divides(mm)) throw NotDivisibleError(mm.to_string(), m.to_string());
            r.terms_.emplace(mm / m, c);
        }
        return r;
    }

    /// Drops every term with a positive v-exponent.
    Polynomial reduce_mod_variable(Variable v) const {
        Polynomial r(field_);
        for (const auto& [m, c] : terms_)
            if (m[v] == 0) r.terms_.emplace(m, c);
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            CoeffParts parts = field_.coeff_parts(c);
            if (first) {
                if (parts.negative) out += '-';
                first = false;
            } else {
                out += parts.negative ? " - " : " + ";
            }
            if (m.is_unit()) {
                out += parts.magnitude;
            } else if (parts.unit) {
                out += m.to_string();
            } else {
                out += parts.magnitude + "*" + m.to_string();
            }
        }
        return out;
    }

private:
    void require_same_field(const Polynomial& o) const {
        if (!(field_ == o.field_))
            throw FieldMismatchError("operands live over different fields: " +
                                     field_.spec().to_string() + " vs " +
                                     o.field_.spec().to_string());
    }

    void add_term(const Monomial& m, const Elem& c) {
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    F field_;
    TermMap terms_;
};

/// Two terms of different weighted degree, witnessing inhomogeneity.
struct NonHomogeneous {
    Monomial first;
    Monomial second;
    long long degree_first = 0;
    long long degree_second = 0;
};

/// Weighted degree of a nonzero polynomial, or the first two witnesses of
/// inhomogeneity in canonical order.
template <CoefficientField F>
std::variant<long long, NonHomogeneous> weighted_degree(const Polynomial<F>& p, const Weights& w) {
    if (p.is_zero()) throw ZeroPolynomialError();
    auto it = p.terms().begin();
    const Monomial first = it->first;
    const long long d = first.weighted_degree(w);
    for (++it; it != p.terms().end(); ++it) {
        long long dd = it->first.weighted_degree(w);
        if (dd != d) return NonHomogeneous{first, it->first, d, dd};
    }
    return d;
}

template <CoefficientField F>
bool is_weighted_homogeneous(const Polynomial<F>& p, const Weights& w) {
    return p.is_zero() || std::holds_alternative<long long>(weighted_degree(p, w));
}

/// Splits into weighted-homogeneous components, keyed by degree.
template <CoefficientField F>
std::map<long long, Polynomial<F>> homogeneous_components(const Polynomial<F>& p, const Weights& w) {
    std::map<long long, Polynomial<F>> out;
    for (const auto& [m, c] : p.terms()) {
        long long d = m.weighted_degree(w);
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, Polynomial<F>::zero(p.field())).first;
        it->second = it->second + Polynomial<F>::monomial(p.field(), m, c);
    }
    return out;
}

/// Sparse univariate polynomial in t: the image of a trivariate polynomial
/// under x -> t^n1, y -> t^n2, z -> t^n3.
template <CoefficientField F>
struct UnivariatePoly {
    F field;
    std::map<long long, typename F::Elem> terms;  // exponent -> nonzero coefficient

    bool is_zero() const { return terms.empty(); }

    std::string to_string() const {
        if (terms.empty()) return "0";
        std::string out;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            CoeffParts parts = field.coeff_parts(it->second);
            if (out.empty()) {
                if (parts.negative) out += '-';
            } else {
                out += parts.negative ? " - " : " + ";
            }
            if (it->first == 0) {
                out += parts.magnitude;
            } else {
                if (!parts.unit) out += parts.magnitude + "*";
                out += "t";
                if (it->first > 1) out += "^" + std::to_string(it->first);
            }
        }
        return out;
    }
};

/// Exact image under the ring map x -> t^n1, y -> t^n2, z -> t^n3.
template <CoefficientField F>
UnivariatePoly<F> substitute_powers(const Polynomial<F>& p, const Weights& w) {
    UnivariatePoly<F> out{p.field(), {}};
    const F& f = p.field();
    for (const auto& [m, c] : p.terms()) {
        long long d = m.weighted_degree(w);
        auto [it, inserted] = out.terms.emplace(d, c);
        if (!inserted) {
            it->second = f.add(it->second, c);
            if (f.is_zero(it->second)) out.terms.erase(it);
        }
    }
    return out;
}

namespace detail {

inline void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::string read_digits(const std::string& s, std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected digits at position " + std::to_string(start) +
                                     " in \"" + s + "\"");
    return s.substr(start, i - start);
}

}  // namespace detail

/// Parses the canonical text format: signed terms, "*"-separated variable
/// powers, "^1" and unit coefficients elided, e.g.
/// "y^4 - x^8*z + 4*x^5*y*z^2 - z^11".  Inverse of Polynomial::to_string.
template <CoefficientField F>
Polynomial<F> parse_polynomial(const std::string& s, F field) {
    using detail::read_digits;
    using detail::skip_ws;
    Polynomial<F> out = Polynomial<F>::zero(field);
    std::size_t i = 0;
    skip_ws(s, i);
    if (i == s.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < s.size()) {
        bool negative = false;
        skip_ws(s, i);
        if (s[i] == '+' || s[i] == '-') {
            negative = (s[i] == '-');
            ++i;
            skip_ws(s, i);
        } else if (!first) {
            throw ParseError("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;

        typename F::Elem coeff = field.one();
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = read_digits(s, i);
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den = read_digits(s, i);
                coeff = field.from_fraction_strings(num, den);
            } else {
                coeff = field.from_decimal_string(num);
            }
            have_coeff = true;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            }
        }

        std::array<int, 3> exps{0, 0, 0};
        bool have_var = false;
        while (i < s.size() && (s[i] == 'x' || s[i] == 'y' || s[i] == 'z')) {
            Variable v = variable_from_name(s[i]);
            ++i;
            int e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                e = std::stoi(read_digits(s, i));
            }
            exps[static_cast<int>(v)] += e;
            have_var = true;
            skip_ws(s, i);
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws(s, i);
            } else {
                break;
            }
        }
        if (!have_coeff && !have_var)
            throw ParseError("expected term at position " + std::to_string(i) + " in \"" + s + "\"");
        if (negative) coeff = field.neg(coeff);
        out = out + Polynomial<F>::monomial(field, Monomial(exps[0], exps[1], exps[2]), coeff);
        skip_ws(s, i);
    }
    return out;
}

/// Parses "0" as well; convenience for round trips.
template <CoefficientField F>
Polynomial<F> parse_polynomial_or_zero(const std::string& s, F field) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed == "0") return Polynomial<F>::zero(field);
    return parse_polynomial(s, field);
}

}  // namespace symcurve
