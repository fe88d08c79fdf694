#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "symcurve/errors.hpp"

namespace symcurve {

/// Runtime description of a coefficient field: the rationals, or a prime
/// field F_p with p < 2^61.
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    static FieldSpec prime_field(std::uint64_t p) {
        if (p < 2 || p >= (std::uint64_t{1} << 61))
            throw Error("prime field characteristic must satisfy 2 <= p < 2^61");
        if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
        return FieldSpec{Kind::prime_field, p};
    }

    /// Trial division, 6k+-1 wheel.
    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        if (n % 3 == 0) return n == 3;
        for (std::uint64_t d = 5; d * d <= n; d += 6) {
            if (n % d == 0 || n % (d + 2) == 0) return false;
        }
        return true;
    }

    /// Accepts "q" or "fp:<p>".
    static FieldSpec parse(const std::string& s) {
        if (s == "q" || s == "Q") return rationals();
        if (s.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(s.substr(3));
            } catch (const std::exception&) {
                throw ParseError("bad field spec: " + s);
            }
            return prime_field(p);
        }
        throw ParseError("bad field spec: " + s + " (expected \"q\" or \"fp:<p>\")");
    }

    std::string to_string() const {
        return kind == Kind::rationals ? "q" : "fp:" + std::to_string(p);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// How a coefficient renders inside a polynomial term.
struct CoeffParts {
    bool negative = false;
    bool unit = false;        // magnitude 1, eligible for elision
    std::string magnitude;    // printed without sign
};

/// Exact rational numbers backed by GMP.  Stateless; there is only one Q.
class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }

    Elem from_decimal_string(const std::string& digits) const {
        return Elem(mpz_class(digits, 10));
    }

    Elem from_fraction_strings(const std::string& num, const std::string& den) const {
        mpz_class d(den, 10);
        if (d == 0) throw ParseError("zero denominator");
        Elem q(mpz_class(num, 10), d);
        q.canonicalize();
        return q;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw Error("division by zero");
        return a / b;
    }

    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::uint64_t characteristic() const { return 0; }
    FieldSpec spec() const { return FieldSpec::rationals(); }

    CoeffParts coeff_parts(const Elem& a) const {
        CoeffParts parts;
        parts.negative = a < 0;
        Elem m = abs(a);
        parts.unit = (m == 1);
        parts.magnitude = m.get_str();
        return parts;
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// The prime field F_p for p < 2^61; elements are canonical representatives
/// in {0, ..., p-1}.  Products go through 128-bit intermediates.
class PrimeField {
public:
    using Elem = std::uint64_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint64_t p) : p_(FieldSpec::prime_field(p).p) {}
    explicit PrimeField(const FieldSpec& fs) : p_(fs.p) {
        if (fs.kind != FieldSpec::Kind::prime_field) throw Error("FieldSpec is not a prime field");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }

    Elem from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }

    Elem from_decimal_string(const std::string& digits) const {
        Elem acc = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw ParseError("bad integer literal");
            acc = add(mul(acc, 10 % p_), static_cast<Elem>(c - '0') % p_);
        }
        return acc;
    }

    Elem from_fraction_strings(const std::string& num, const std::string& den) const {
        return div(from_decimal_string(num), from_decimal_string(den));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;  // p < 2^61, no overflow
        return s >= p_ ? s - p_ : s;
    }

    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }

    Elem pow(Elem a, std::uint64_t n) const {
        Elem r = one(), base = a;
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    Elem inv(Elem a) const {
        if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::uint64_t characteristic() const { return p_; }
    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime_field, p_}; }

    CoeffParts coeff_parts(Elem a) const {
        return CoeffParts{false, a == one(), std::to_string(a)};
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

template <class F>
concept CoefficientField = requires(const F f, const typename F::Elem a) {
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.add(a, a) } -> std::same_as<typename F::Elem>;
    { f.mul(a, a) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.spec() } -> std::same_as<FieldSpec>;
    { f == f } -> std::convertible_to<bool>;
};

}  // namespace symcurve
