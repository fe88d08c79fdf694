#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symcurve/polynomial.hpp"

namespace symcurve {

template <CoefficientField F>
struct LabeledPoly {
    std::string label;
    Polynomial<F> value;
};

namespace detail {

// Generator labels are products of atoms ("F", "H^2", "D_3", "x").
// Multiplying labels merges the atom multisets, so "F^2*G" * "F" renders as
// "F^3*G".  Atom order: variables, then F, G, H, then D_k, then the rest.
inline int label_atom_rank(const std::string& atom) {
    if (atom == "x") return -3;
    if (atom == "y") return -2;
    if (atom == "z") return -1;
    if (atom == "F") return 0;
    if (atom == "G") return 1;
    if (atom == "H") return 2;
    if (atom.rfind("D_", 0) == 0) return 10 + std::atoi(atom.c_str() + 2);
    return 1000;
}

inline std::map<std::pair<int, std::string>, int> label_atoms(const std::string& label) {
    std::map<std::pair<int, std::string>, int> atoms;
    std::size_t i = 0;
    while (i < label.size()) {
        std::size_t j = label.find('*', i);
        std::string factor = label.substr(i, j == std::string::npos ? j : j - i);
        i = (j == std::string::npos) ? label.size() : j + 1;
        int power = 1;
        std::size_t caret = factor.rfind('^');
        if (caret != std::string::npos &&
            factor.find_first_not_of("0123456789", caret + 1) == std::string::npos &&
            caret + 1 < factor.size()) {
            power = std::atoi(factor.c_str() + caret + 1);
            factor = factor.substr(0, caret);
        }
        if (factor == "1" || factor.empty()) continue;
        atoms[{label_atom_rank(factor), factor}] += power;
    }
    return atoms;
}

inline std::string label_product(const std::string& a, const std::string& b) {
    auto atoms = label_atoms(a);
    for (const auto& [k, v] : label_atoms(b)) atoms[k] += v;
    if (atoms.empty()) return "1";
    std::string out;
    for (const auto& [k, v] : atoms) {
        if (!out.empty()) out += '*';
        out += k.second;
        if (v > 1) out += '^' + std::to_string(v);
    }
    return out;
}

// Dedup key: canonical print of the monic normal form.
template <CoefficientField F>
std::string scalar_class_key(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    auto [m, c] = p.leading_term();
    return p.scaled(p.field().inv(c)).to_string();
}

// Pairwise products deduplicated up to scalar multiples, first occurrence
// wins; order is deterministic.
template <CoefficientField F>
std::vector<LabeledPoly<F>> labeled_products(const std::vector<LabeledPoly<F>>& a,
                                             const std::vector<LabeledPoly<F>>& b) {
    std::vector<LabeledPoly<F>> out;
    std::map<std::string, bool> seen;
    for (const auto& ga : a) {
        for (const auto& gb : b) {
            Polynomial<F> prod = ga.value * gb.value;
            if (prod.is_zero()) continue;
            if (seen.emplace(scalar_class_key(prod), true).second)
                out.push_back({label_product(ga.label, gb.label), prod});
        }
    }
    return out;
}

}  // namespace detail

}  // namespace symcurve
