#pragma once

#include "cvxorder/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cvxorder {

// Equality-form feasibility problem: find z >= 0 with A z = rhs.
struct LpProblem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> matrix; // row-major, rows*cols entries
    std::vector<Rational> rhs;    // rows entries

    static LpProblem zeros(std::size_t rows, std::size_t cols)
    {
        LpProblem p;
        p.rows = rows;
        p.cols = cols;
        p.matrix.assign(rows * cols, Rational(0));
        p.rhs.assign(rows, Rational(0));
        return p;
    }

    const Rational& at(std::size_t i, std::size_t j) const { return matrix[i * cols + j]; }
    Rational& at(std::size_t i, std::size_t j) { return matrix[i * cols + j]; }
};

enum class LpStatus { Feasible, Infeasible };

// Feasible carries a point with point >= 0 and A point = rhs, exactly.
// Infeasible carries a Farkas vector u with u'A >= 0 componentwise and
// u'rhs < 0, exactly. Either branch is checkable from scratch by
// verify_outcome.
struct LpOutcome {
    LpStatus status = LpStatus::Feasible;
    std::vector<Rational> point;  // cols entries when Feasible
    std::vector<Rational> farkas; // rows entries when Infeasible
};

inline void validate_problem(const LpProblem& p)
{
    if (p.rows < 1 || p.cols < 1)
        throw std::invalid_argument("lp: need at least one row and one column");
    if (p.matrix.size() != p.rows * p.cols)
        throw std::invalid_argument("lp: matrix storage does not match rows*cols");
    if (p.rhs.size() != p.rows)
        throw std::invalid_argument("lp: rhs length does not match row count");
}

// Phase-1 simplex on min sum(artificials) with Bland's least-index rule for
// both the entering and the leaving variable, which rules out cycling under
// the degeneracy these transport systems produce. Exact rational pivots
// throughout; no scaling, no elimination of redundant rows (artificials
// absorb them).
//
// On an infeasible system the Farkas vector is read off the optimal phase-1
// duals: y_i = 1 - reduced_cost(artificial_i) and u = -y, with row sign
// flips (applied up front to make rhs >= 0) undone at the end.
inline LpOutcome solve_feasibility(const LpProblem& p)
{
    validate_problem(p);
    const std::size_t m = p.rows;
    const std::size_t n = p.cols;
    const std::size_t width = n + m + 1; // structural | artificial | rhs
    const std::size_t rhs_col = n + m;

    std::vector<std::vector<Rational>> tab(m, std::vector<Rational>(width, Rational(0)));
    std::vector<int> flipped(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = p.rhs[i] < 0;
        flipped[i] = flip ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j)
            tab[i][j] = flip ? -p.at(i, j) : p.at(i, j);
        tab[i][n + i] = Rational(1);
        tab[i][rhs_col] = flip ? -p.rhs[i] : p.rhs[i];
    }

    // Reduced-cost row for the phase-1 objective (cost 1 on artificials),
    // priced out against the all-artificial starting basis. The last entry
    // holds the negated objective value.
    std::vector<Rational> red(width, Rational(0));
    for (std::size_t j = 0; j < width; ++j) {
        Rational colsum(0);
        for (std::size_t i = 0; i < m; ++i)
            colsum += tab[i][j];
        red[j] = -colsum;
    }
    for (std::size_t i = 0; i < m; ++i)
        red[n + i] += 1;

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i)
        basis[i] = n + i;

    for (;;) {
        // Entering: least column index with a negative reduced cost.
        std::size_t pivot_col = width;
        for (std::size_t j = 0; j < n + m; ++j) {
            if (red[j] < 0) {
                pivot_col = j;
                break;
            }
        }
        if (pivot_col == width)
            break;

        // Leaving: minimum ratio, ties broken by least basis variable index.
        std::size_t pivot_row = m;
        Rational best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (tab[i][pivot_col] <= 0)
                continue;
            Rational ratio = tab[i][rhs_col] / tab[i][pivot_col];
            if (pivot_row == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[pivot_row])) {
                pivot_row = i;
                best_ratio = ratio;
            }
        }
        if (pivot_row == m)
            throw std::logic_error("lp: phase-1 objective unbounded, corrupt tableau");

        const Rational pivot = tab[pivot_row][pivot_col];
        for (auto& entry : tab[pivot_row])
            entry /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == pivot_row || tab[i][pivot_col] == 0)
                continue;
            const Rational factor = tab[i][pivot_col];
            for (std::size_t j = 0; j < width; ++j)
                tab[i][j] -= factor * tab[pivot_row][j];
        }
        if (red[pivot_col] != 0) {
            const Rational factor = red[pivot_col];
            for (std::size_t j = 0; j < width; ++j)
                red[j] -= factor * tab[pivot_row][j];
        }
        basis[pivot_row] = pivot_col;
    }

    const Rational objective = -red[rhs_col];
    if (objective == 0) {
        LpOutcome out;
        out.status = LpStatus::Feasible;
        out.point.assign(n, Rational(0));
        // Any artificial still in the basis sits at level zero here, so the
        // structural part alone satisfies A z = rhs.
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n)
                out.point[basis[i]] = tab[i][rhs_col];
        return out;
    }

    LpOutcome out;
    out.status = LpStatus::Infeasible;
    out.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        out.farkas[i] = Rational(flipped[i]) * (red[n + i] - 1);
    return out;
}

// Re-checks an outcome's certificate against the problem from scratch.
// Shape mismatches throw; everything else is a plain true/false answer.
inline bool verify_outcome(const LpProblem& p, const LpOutcome& o)
{
    validate_problem(p);
    if (o.status == LpStatus::Feasible) {
        if (o.point.size() != p.cols)
            throw std::invalid_argument("verify_outcome: point length does not match columns");
        for (const auto& z : o.point)
            if (z < 0)
                return false;
        for (std::size_t i = 0; i < p.rows; ++i) {
            Rational lhs(0);
            for (std::size_t j = 0; j < p.cols; ++j)
                lhs += p.at(i, j) * o.point[j];
            if (lhs != p.rhs[i])
                return false;
        }
        return true;
    }
    if (o.farkas.size() != p.rows)
        throw std::invalid_argument("verify_outcome: certificate length does not match rows");
    for (std::size_t j = 0; j < p.cols; ++j) {
        Rational entry(0);
        for (std::size_t i = 0; i < p.rows; ++i)
            entry += o.farkas[i] * p.at(i, j);
        if (entry < 0)
            return false;
    }
    Rational value(0);
    for (std::size_t i = 0; i < p.rows; ++i)
        value += o.farkas[i] * p.rhs[i];
    return value < 0;
}

} // namespace cvxorder
