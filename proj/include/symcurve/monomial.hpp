#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "symcurve/errors.hpp"

namespace symcurve {

enum class Variable : int { x = 0, y = 1, z = 2 };

inline char variable_name(Variable v) { return "xyz"[static_cast<int>(v)]; }

inline Variable variable_from_name(char c) {
    switch (c) {
        case 'x': return Variable::x;
        case 'y': return Variable::y;
        case 'z': return Variable::z;
        default: throw ParseError(std::string("unknown variable '") + c + "'");
    }
}

/// Weighted degrees of x, y, z.  Normalized to gcd 1 at construction.
class Weights {
public:
    Weights(long long n1, long long n2, long long n3) : n_{n1, n2, n3} {
        if (n1 <= 0 || n2 <= 0 || n3 <= 0) throw Error("weights must be positive");
        long long g = std::gcd(std::gcd(n1, n2), n3);
        for (auto& n : n_) n /= g;
    }

    long long operator[](int v) const { return n_[v]; }
    long long operator[](Variable v) const { return n_[static_cast<int>(v)]; }

    std::string to_string() const {
        return std::to_string(n_[0]) + "," + std::to_string(n_[1]) + "," + std::to_string(n_[2]);
    }

    friend bool operator==(const Weights&, const Weights&) = default;

private:
    std::array<long long, 3> n_;
};

/// A monomial x^i y^j z^k with non-negative exponents.
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    Monomial() = default;
    Monomial(int i, int j, int k) : e{i, j, k} {
        if (i < 0 || j < 0 || k < 0) throw Error("monomial exponents must be non-negative");
    }

    static Monomial unit() { return Monomial(); }

    static Monomial var(Variable v, int exp = 1) {
        Monomial m;
        m.e[static_cast<int>(v)] = exp;
        return m;
    }

    int operator[](int v) const { return e[v]; }
    int operator[](Variable v) const { return e[static_cast<int>(v)]; }

    bool is_unit() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    Monomial operator*(const Monomial& o) const {
        return Monomial(e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]);
    }

    bool divides(const Monomial& o) const {
        return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2];
    }

    /// Exact quotient; caller must ensure o divides *this.
    Monomial operator/(const Monomial& o) const {
        return Monomial(e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]);
    }

    int total_degree() const { return e[0] + e[1] + e[2]; }

    long long weighted_degree(const Weights& w) const {
        return e[0] * w[0] + e[1] * w[1] + e[2] * w[2];
    }

    std::string to_string() const {
        if (is_unit()) return "1";
        std::string s;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (!s.empty()) s += '*';
            s += "xyz"[v];
            if (e[v] > 1) s += '^' + std::to_string(e[v]);
        }
        return s;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical term order, fixed once for deterministic serialization:
/// ascending lexicographic on (k, i, j).  Every pinned output in the test
/// suite (the displayed D_2, D_3, the graded component bases) follows it.
struct CanonicalTermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.e[2] != b.e[2]) return a.e[2] < b.e[2];
        if (a.e[0] != b.e[0]) return a.e[0] < b.e[0];
        return a.e[1] < b.e[1];
    }
};

/// All monomials of total degree d, in canonical order.
inline std::vector<Monomial> monomials_of_total_degree(int d) {
    std::vector<Monomial> out;
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= d - k; ++i) out.push_back(Monomial(i, d - k - i, k));
    return out;
}

}  // namespace symcurve
