#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "symcurve/fields.hpp"

namespace symcurve {

/// Dense matrix over a coefficient field, row-major.
template <CoefficientField F>
class DenseMatrix {
public:
    using Elem = typename F::Elem;

    DenseMatrix(F field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * cols, field_.zero()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Elem& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> a_;
};

/// Outcome of an exact linear solve A x = b.
template <CoefficientField F>
struct LinearSolveResult {
    std::optional<std::vector<typename F::Elem>> solution;  // size cols; free columns zero
    std::vector<int> pivot_rows;      // original row indices carrying pivots
    int inconsistent_row = -1;        // original index of the first unsatisfiable row
};

/// Exact Gaussian elimination, processing columns left to right and picking
/// as pivot the nonzero entry with the smallest original row index.  Both the
/// solution (free variables set to zero) and the failure witness are
/// therefore deterministic functions of the input.
template <CoefficientField F>
LinearSolveResult<F> solve_linear(DenseMatrix<F> a, std::vector<typename F::Elem> b) {
    const F& field = a.field();
    const int rows = a.rows(), cols = a.cols();
    std::vector<int> orig(rows);
    for (int r = 0; r < rows; ++r) orig[r] = r;

    LinearSolveResult<F> out;
    std::vector<int> pivot_col_of_row(rows, -1);
    std::vector<int> pivot_row_of_col(cols, -1);
    int next = 0;  // next pivot position
    for (int c = 0; c < cols && next < rows; ++c) {
        int chosen = -1;
        for (int r = next; r < rows; ++r) {
            if (!field.is_zero(a.at(r, c)) && (chosen == -1 || orig[r] < orig[chosen])) chosen = r;
        }
        if (chosen == -1) continue;
        if (chosen != next) {
            for (int cc = c; cc < cols; ++cc) std::swap(a.at(next, cc), a.at(chosen, cc));
            std::swap(b[next], b[chosen]);
            std::swap(orig[next], orig[chosen]);
        }
        const auto inv_pivot = field.inv(a.at(next, c));
        for (int cc = c; cc < cols; ++cc) a.at(next, cc) = field.mul(a.at(next, cc), inv_pivot);
        b[next] = field.mul(b[next], inv_pivot);
        for (int r = 0; r < rows; ++r) {
            if (r == next || field.is_zero(a.at(r, c))) continue;
            const auto factor = a.at(r, c);
            for (int cc = c; cc < cols; ++cc)
                a.at(r, cc) = field.sub(a.at(r, cc), field.mul(factor, a.at(next, cc)));
            b[r] = field.sub(b[r], field.mul(factor, b[next]));
        }
        pivot_col_of_row[next] = c;
        pivot_row_of_col[c] = next;
        ++next;
    }

    for (int r = 0; r < rows; ++r)
        if (pivot_col_of_row[r] >= 0) out.pivot_rows.push_back(orig[r]);
    std::sort(out.pivot_rows.begin(), out.pivot_rows.end());

    int bad = -1;
    for (int r = next; r < rows; ++r) {
        if (!field.is_zero(b[r]) && (bad == -1 || orig[r] < bad)) bad = orig[r];
    }
    if (bad >= 0) {
        out.inconsistent_row = bad;
        return out;
    }

    std::vector<typename F::Elem> x(cols, field.zero());
    for (int c = 0; c < cols; ++c)
        if (pivot_row_of_col[c] >= 0) x[c] = b[pivot_row_of_col[c]];
    out.solution = std::move(x);
    return out;
}

}  // namespace symcurve
