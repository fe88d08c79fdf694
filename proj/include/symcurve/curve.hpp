#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symcurve/errors.hpp"
#include "symcurve/monomial.hpp"

namespace symcurve {

/// One minimal relation k * n_pivot = u * n_j + v * n_k in the numerical
/// semigroup of the other two weights (j < k in variable order).
struct Relation {
    int pivot = 0;              // variable index 0..2
    long long multiple = 0;     // the minimal k
    std::array<long long, 2> coeffs{0, 0};

    std::string to_string() const {
        static const char* names = "xyz";
        int j = pivot == 0 ? 1 : 0;
        int k = pivot == 2 ? 1 : 2;
        return std::to_string(multiple) + "*n_" + names[pivot] + " = " +
               std::to_string(coeffs[0]) + "*n_" + names[j] + " + " +
               std::to_string(coeffs[1]) + "*n_" + names[k];
    }
};

/// A minimal relation degenerated to a single other generator, so the ideal
/// is a complete intersection and no all-positive 2x3 matrix exists.
struct CompleteIntersection {
    Relation degenerate;
};

using RelationTriple = std::array<Relation, 3>;
using RelationsOutcome = std::variant<RelationTriple, CompleteIntersection>;

/// For each pivot, the minimal positive multiple of n_pivot lying in the
/// semigroup generated by the other two weights, with its representation.
inline RelationsOutcome minimal_relations(const Weights& w) {
    RelationTriple rels;
    for (int pivot = 0; pivot < 3; ++pivot) {
        const long long np = w[pivot];
        const int j = pivot == 0 ? 1 : 0;
        const int k = pivot == 2 ? 1 : 2;
        const long long nj = w[j], nk = w[k];
        const long long bound = nj * nk;

        std::vector<std::array<long long, 2>> reps;
        long long multiple = 0;
        for (long long m = 1; reps.empty(); ++m) {
            if (m > bound)
                throw SearchBoundExceededError("no relation for pivot " + std::to_string(pivot) +
                                               " below " + std::to_string(bound));
            const long long target = m * np;
            for (long long u = 0; u * nj <= target; ++u) {
                long long rem = target - u * nj;
                if (rem % nk == 0) reps.push_back({u, rem / nk});
            }
            multiple = m;
        }

        for (const auto& rep : reps) {
            if (rep[0] == 0 || rep[1] == 0)
                return CompleteIntersection{Relation{pivot, multiple, rep}};
        }
        if (reps.size() > 1)
            throw InconsistentRelationsError(
                "minimal relation for pivot " + std::to_string(pivot) + " admits " +
                std::to_string(reps.size()) + " representations");
        rels[pivot] = Relation{pivot, multiple, reps.front()};
    }
    return rels;
}

using RawExponents = std::array<int, 6>;  // (a1, a2, b1, b2, c1, c2)

/// Reads (a1,a2,b1,b2,c1,c2) off the three relations:
///   (a1+a2) n1 = b1 n2 + c2 n3,  (b1+b2) n2 = a2 n1 + c1 n3,
///   (c1+c2) n3 = a1 n1 + b2 n2,
/// cross-checking the three sums.
inline RawExponents exponents_from_relations(const RelationTriple& rels) {
    const long long b1 = rels[0].coeffs[0], c2 = rels[0].coeffs[1];
    const long long a2 = rels[1].coeffs[0], c1 = rels[1].coeffs[1];
    const long long a1 = rels[2].coeffs[0], b2 = rels[2].coeffs[1];
    if (a1 + a2 != rels[0].multiple || b1 + b2 != rels[1].multiple || c1 + c2 != rels[2].multiple)
        throw InconsistentRelationsError("cross-readings of the relation exponents disagree");
    if (a1 <= 0 || a2 <= 0 || b1 <= 0 || b2 <= 0 || c1 <= 0 || c2 <= 0)
        throw InconsistentRelationsError("relation exponents are not all positive");
    return RawExponents{static_cast<int>(a1), static_cast<int>(a2), static_cast<int>(b1),
                        static_cast<int>(b2), static_cast<int>(c1), static_cast<int>(c2)};
}

enum class MatrixType { type1, type1prime, type2 };

inline std::string to_string(MatrixType t) {
    switch (t) {
        case MatrixType::type1: return "type1";
        case MatrixType::type1prime: return "type1prime";
        case MatrixType::type2: return "type2";
    }
    return "?";
}

/// A relabeling of the variables.  perm[v] is the original variable shown in
/// canonical slot v; odd permutations also swap the two matrix rows, so the
/// per-variable exponent pairs flip.
struct Relabeling {
    std::array<int, 3> perm{0, 1, 2};

    bool is_identity() const { return perm == std::array<int, 3>{0, 1, 2}; }

    bool odd() const {
        int inv = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (perm[i] > perm[j]) ++inv;
        return inv % 2 == 1;
    }

    RawExponents apply(const RawExponents& raw) const {
        RawExponents out{};
        const bool flip = odd();
        for (int v = 0; v < 3; ++v) {
            int lo = raw[2 * perm[v]], hi = raw[2 * perm[v] + 1];
            if (flip) std::swap(lo, hi);
            out[2 * v] = lo;
            out[2 * v + 1] = hi;
        }
        return out;
    }

    Weights apply(const Weights& w) const { return Weights(w[perm[0]], w[perm[1]], w[perm[2]]); }

    std::string to_string() const {
        if (is_identity()) return "identity";
        std::string s = "(x,y,z) <- (";
        for (int v = 0; v < 3; ++v) {
            if (v) s += ',';
            s += "xyz"[perm[v]];
        }
        return s + ")";
    }
};

inline std::array<Relabeling, 6> all_relabelings() {
    return {Relabeling{{0, 1, 2}}, Relabeling{{0, 2, 1}}, Relabeling{{1, 0, 2}},
            Relabeling{{1, 2, 0}}, Relabeling{{2, 0, 1}}, Relabeling{{2, 1, 0}}};
}

/// The six matrix exponents in canonical form, with the type tag and the
/// relabeling that reached it.
struct MatrixExponents {
    int a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
    MatrixType type = MatrixType::type1;
    Relabeling relabeling;

    RawExponents raw() const { return {a1, a2, b1, b2, c1, c2}; }

    std::string to_string() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(b1) +
               "," + std::to_string(b2) + "," + std::to_string(c1) + "," + std::to_string(c2) +
               ")";
    }
};

struct ClassifyOutcome {
    std::optional<MatrixExponents> exponents;
    std::string failure_reason;  // set when exponents is empty

    bool ok() const { return exponents.has_value(); }
};

namespace detail {

inline bool condition1(const RawExponents& t) {
    return t[0] <= t[1] && t[2] >= t[3] && t[4] >= t[5];
}

inline bool condition2(const RawExponents& t) {
    return t[0] > t[1] && t[2] > t[3] && t[4] > t[5];
}

// a2/a1 <= c1/c2, cross-multiplied to stay in integers.
inline bool ratio_condition(const RawExponents& t) {
    return static_cast<long long>(t[1]) * t[5] <= static_cast<long long>(t[0]) * t[4];
}

}  // namespace detail

/// Canonicalizes a raw exponent tuple over all six relabelings.  The result
/// is a function of the relabeling orbit, so feeding any relabeled form of
/// the same tuple yields the same canonical exponents.  Within an orbit the
/// preference is type 2, then type 1' (the form satisfying a2/a1 <= c1/c2),
/// then plain type 1; remaining ties resolve to the lexicographically
/// largest tuple.
inline ClassifyOutcome classify(const RawExponents& raw) {
    for (int v : raw)
        if (v <= 0) return {std::nullopt, "exponents must all be positive"};

    struct Candidate {
        RawExponents t;
        Relabeling rel;
    };
    std::vector<Candidate> cond1, cond2, prime;
    for (const Relabeling& rel : all_relabelings()) {
        RawExponents t = rel.apply(raw);
        if (detail::condition1(t)) {
            cond1.push_back({t, rel});
            if (t[2] == t[3] && detail::ratio_condition(t)) prime.push_back({t, rel});
        } else if (detail::condition2(t)) {
            cond2.push_back({t, rel});
        }
    }

    auto lex_max = [](const std::vector<Candidate>& v) {
        return *std::max_element(v.begin(), v.end(),
                                 [](const Candidate& a, const Candidate& b) { return a.t < b.t; });
    };

    auto build = [](const Candidate& c, MatrixType type) {
        return MatrixExponents{c.t[0], c.t[1], c.t[2], c.t[3], c.t[4], c.t[5], type, c.rel};
    };

    if (!cond2.empty()) return {build(lex_max(cond2), MatrixType::type2), ""};
    if (!prime.empty()) {
        Candidate c = lex_max(prime);
        const int a1 = c.t[0], a2 = c.t[1], c1 = c.t[4], c2 = c.t[5];
        const int r = a2 / a1 + 1;
        if (a2 == (r - 1) * a1 && c1 == (r - 1) * c2)
            return {std::nullopt,
                    "matrix cannot be prime: a2 = (r-1)a1 and c1 = (r-1)c2 force a factorization"};
        return {build(c, MatrixType::type1prime), ""};
    }
    if (!cond1.empty()) return {build(lex_max(cond1), MatrixType::type1), ""};
    return {std::nullopt, "no relabeling satisfies condition (1) or (2)"};
}

/// r[M] = floor(a2/a1) + 1, so (r-1) a1 <= a2 < r a1.  Type 1' only.
inline int r_index(const MatrixExponents& e) {
    if (e.type != MatrixType::type1prime)
        throw WrongTypeError("r[M] is defined for type 1' matrices only");
    return e.a2 / e.a1 + 1;
}

/// Inverts the three weighted-degree identities.  Returns the primitive
/// positive solution, or nothing when the kernel has no positive vector or
/// the solution is degenerate (two equal weights cannot come from a
/// non-complete-intersection curve).
inline std::optional<Weights> weights_of(const MatrixExponents& e) {
    const long long a1 = e.a1, a2 = e.a2, b1 = e.b1, b2 = e.b2, c1 = e.c1, c2 = e.c2;
    const std::array<long long, 3> r1{a1 + a2, -b1, -c2};
    const std::array<long long, 3> r2{-a2, b1 + b2, -c1};
    std::array<long long, 3> n{r1[1] * r2[2] - r1[2] * r2[1], r1[2] * r2[0] - r1[0] * r2[2],
                               r1[0] * r2[1] - r1[1] * r2[0]};
    if (n[0] == 0 && n[1] == 0 && n[2] == 0) return std::nullopt;
    long long g = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
    for (auto& v : n) v /= g;
    if (n[0] < 0 || n[1] < 0 || n[2] < 0) {
        if (n[0] > 0 || n[1] > 0 || n[2] > 0) return std::nullopt;
        for (auto& v : n) v = -v;
    }
    if (n[0] <= 0 || n[1] <= 0 || n[2] <= 0) return std::nullopt;
    if ((c1 + c2) * n[2] != a1 * n[0] + b2 * n[1]) return std::nullopt;
    if (n[0] == n[1] || n[1] == n[2] || n[0] == n[2]) return std::nullopt;
    return Weights(n[0], n[1], n[2]);
}

}  // namespace symcurve
