#pragma once

#include "cvxorder/lp.hpp"
#include "cvxorder/measure.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvxorder {

struct MaxAffinePiece {
    PointQ slope;
    Rational intercept;

    friend bool operator==(const MaxAffinePiece&, const MaxAffinePiece&) = default;
};

// Convex function given as a finite maximum of affine pieces,
// f(w) = max_i (slope_i . w + intercept_i). Used as the separating
// certificate when the order fails: stored witnesses satisfy
// integral(f dmu) > integral(f dnu) exactly.
struct MaxAffineWitness {
    std::vector<MaxAffinePiece> pieces;

    Rational operator()(const PointQ& w) const
    {
        if (pieces.empty())
            throw std::logic_error("max-affine witness has no pieces");
        Rational best = dot(pieces.front().slope, w) + pieces.front().intercept;
        for (std::size_t i = 1; i < pieces.size(); ++i) {
            Rational v = dot(pieces[i].slope, w) + pieces[i].intercept;
            if (v > best)
                best = std::move(v);
        }
        return best;
    }
};

// Equality system whose feasibility is equivalent to mu <= nu in the convex
// order (a feasible point is a martingale coupling). Variables pi(i,j) >= 0,
// one per (mu atom, nu atom) pair, indexed i*|nu|+j. Rows, in order:
//   row_mu(i):      sum_j pi(i,j)              = mu weight i
//   row_nu(j):      sum_i pi(i,j)              = nu weight j
//   row_bary(i,k):  sum_j pi(i,j) * nu_pt(j)[k] = mu weight i * mu_pt(i)[k]
// so any feasible coupling keeps the conditional nu-barycenter at each mu
// atom equal to that atom.
struct MartingaleSystem {
    std::vector<Atom> mu_atoms;
    std::vector<Atom> nu_atoms;
    std::size_t dim = 0;
    LpProblem lp;

    std::size_t var(std::size_t i, std::size_t j) const { return i * nu_atoms.size() + j; }
    std::size_t row_mu(std::size_t i) const { return i; }
    std::size_t row_nu(std::size_t j) const { return mu_atoms.size() + j; }
    std::size_t row_bary(std::size_t i, std::size_t k) const
    {
        return mu_atoms.size() + nu_atoms.size() + i * dim + k;
    }
};

inline MartingaleSystem build_martingale_system(const DiscreteMeasure& mu,
                                                const DiscreteMeasure& nu)
{
    if (mu.dim() != nu.dim())
        throw std::invalid_argument("build_martingale_system: dimension mismatch");

    MartingaleSystem sys;
    sys.mu_atoms = mu.atoms();
    sys.nu_atoms = nu.atoms();
    sys.dim = mu.dim();

    const std::size_t nm = sys.mu_atoms.size();
    const std::size_t nn = sys.nu_atoms.size();
    sys.lp = LpProblem::zeros(nm + nn + nm * sys.dim, nm * nn);

    for (std::size_t i = 0; i < nm; ++i) {
        for (std::size_t j = 0; j < nn; ++j)
            sys.lp.at(sys.row_mu(i), sys.var(i, j)) = Rational(1);
        sys.lp.rhs[sys.row_mu(i)] = sys.mu_atoms[i].weight;
    }
    for (std::size_t j = 0; j < nn; ++j) {
        for (std::size_t i = 0; i < nm; ++i)
            sys.lp.at(sys.row_nu(j), sys.var(i, j)) = Rational(1);
        sys.lp.rhs[sys.row_nu(j)] = sys.nu_atoms[j].weight;
    }
    for (std::size_t i = 0; i < nm; ++i) {
        for (std::size_t k = 0; k < sys.dim; ++k) {
            for (std::size_t j = 0; j < nn; ++j)
                sys.lp.at(sys.row_bary(i, k), sys.var(i, j)) = sys.nu_atoms[j].point[k];
            sys.lp.rhs[sys.row_bary(i, k)] = sys.mu_atoms[i].weight * sys.mu_atoms[i].point[k];
        }
    }
    return sys;
}

struct WitnessEvaluation {
    Rational int_mu;
    Rational int_nu;
    Rational gap; // int_mu - int_nu
};

inline WitnessEvaluation evaluate_witness(const MaxAffineWitness& f, const DiscreteMeasure& mu,
                                          const DiscreteMeasure& nu)
{
    if (mu.dim() != nu.dim())
        throw std::invalid_argument("evaluate_witness: measure dimension mismatch");
    for (const auto& piece : f.pieces)
        if (piece.slope.dim() != mu.dim())
            throw std::invalid_argument("evaluate_witness: witness slope dimension mismatch");

    WitnessEvaluation eval{Rational(0), Rational(0), Rational(0)};
    for (const auto& a : mu.atoms())
        eval.int_mu += a.weight * f(a.point);
    for (const auto& a : nu.atoms())
        eval.int_nu += a.weight * f(a.point);
    eval.gap = eval.int_mu - eval.int_nu;
    return eval;
}

// Turns a Farkas certificate for the coupling system into a separating
// max-affine witness. Splitting u into (a_i | b_j | c_i in Q^d) along the
// row blocks, certificate validity reads
//   a_i + b_j + c_i . y_j >= 0            for every column (i,j),
//   sum_i a_i w_i + sum_j b_j v_j + sum_i (c_i . x_i) w_i < 0,
// so f(w) = max_i (-a_i - c_i . w) satisfies f(y_j) <= b_j at every nu atom
// while sum_i w_i f(x_i) >= -sum_i w_i (a_i + c_i . x_i) > sum_j v_j b_j,
// giving a strictly positive gap. Pieces that never attain the maximum on
// the pooled supports are pruned; the gap is re-verified afterwards.
inline MaxAffineWitness extract_witness(const MartingaleSystem& sys,
                                        const std::vector<Rational>& farkas)
{
    LpOutcome outcome;
    outcome.status = LpStatus::Infeasible;
    outcome.farkas = farkas;
    if (!verify_outcome(sys.lp, outcome))
        throw std::invalid_argument("extract_witness: vector is not a valid Farkas certificate");

    const std::size_t nm = sys.mu_atoms.size();
    MaxAffineWitness f;
    f.pieces.reserve(nm);
    for (std::size_t i = 0; i < nm; ++i) {
        MaxAffinePiece piece;
        piece.intercept = -farkas[sys.row_mu(i)];
        piece.slope = zero_point(sys.dim);
        for (std::size_t k = 0; k < sys.dim; ++k)
            piece.slope[k] = -farkas[sys.row_bary(i, k)];
        f.pieces.push_back(std::move(piece));
    }

    // Prune pieces that are never active on the union of both supports.
    std::vector<PointQ> support;
    support.reserve(nm + sys.nu_atoms.size());
    for (const auto& a : sys.mu_atoms)
        support.push_back(a.point);
    for (const auto& a : sys.nu_atoms)
        support.push_back(a.point);

    std::vector<bool> active(f.pieces.size(), false);
    for (const auto& w : support) {
        const Rational value = f(w);
        for (std::size_t i = 0; i < f.pieces.size(); ++i)
            if (dot(f.pieces[i].slope, w) + f.pieces[i].intercept == value)
                active[i] = true;
    }
    MaxAffineWitness pruned;
    for (std::size_t i = 0; i < f.pieces.size(); ++i)
        if (active[i])
            pruned.pieces.push_back(std::move(f.pieces[i]));

    Rational gap(0);
    for (const auto& a : sys.mu_atoms)
        gap += a.weight * pruned(a.point);
    for (const auto& a : sys.nu_atoms)
        gap -= a.weight * pruned(a.point);
    if (gap <= 0)
        throw std::logic_error("extract_witness: pruned witness lost its positive gap");
    return pruned;
}

enum class OrderRelation { Dominated, NotDominated, MeanMismatch };

struct OrderVerdict {
    OrderRelation relation = OrderRelation::Dominated;
    // Dominated: the coupling kernel, |mu| x |nu|, satisfying every system row.
    std::vector<std::vector<Rational>> coupling;
    // NotDominated: separating witness, its exact positive gap, and the
    // Farkas vector it came from.
    std::optional<MaxAffineWitness> witness;
    Rational gap;
    std::vector<Rational> farkas;
};

// Decides mu <= nu in the convex order over Q^d for any d >= 1 via
// martingale-coupling feasibility. Every branch returns a certificate that
// is re-verified before being handed out.
inline OrderVerdict check_convex_order(const DiscreteMeasure& mu, const DiscreteMeasure& nu)
{
    if (mu.dim() != nu.dim())
        throw std::invalid_argument("check_convex_order: dimension mismatch");

    OrderVerdict verdict;
    if (barycenter(mu) != barycenter(nu)) {
        verdict.relation = OrderRelation::MeanMismatch;
        return verdict;
    }

    const MartingaleSystem sys = build_martingale_system(mu, nu);
    const LpOutcome outcome = solve_feasibility(sys.lp);
    if (!verify_outcome(sys.lp, outcome))
        throw std::logic_error("check_convex_order: solver produced an invalid certificate");

    if (outcome.status == LpStatus::Feasible) {
        verdict.relation = OrderRelation::Dominated;
        const std::size_t nn = sys.nu_atoms.size();
        verdict.coupling.resize(sys.mu_atoms.size());
        for (std::size_t i = 0; i < sys.mu_atoms.size(); ++i) {
            verdict.coupling[i].reserve(nn);
            for (std::size_t j = 0; j < nn; ++j)
                verdict.coupling[i].push_back(outcome.point[sys.var(i, j)]);
        }
        return verdict;
    }

    verdict.relation = OrderRelation::NotDominated;
    verdict.farkas = outcome.farkas;
    verdict.witness = extract_witness(sys, outcome.farkas);
    verdict.gap = evaluate_witness(*verdict.witness, mu, nu).gap;
    return verdict;
}

// The witness that separates the built-in counterexample:
// f(w) = max(0, w_1, w_2), three affine pieces with zero intercepts.
inline MaxAffineWitness counterexample_witness()
{
    MaxAffineWitness f;
    f.pieces = {
        {{Rational(0), Rational(0)}, Rational(0)},
        {{Rational(1), Rational(0)}, Rational(0)},
        {{Rational(0), Rational(1)}, Rational(0)},
    };
    return f;
}

struct TriangleInequalityEvaluation {
    Rational lhs;
    Rational rhs;
    bool holds = false;
};

// For triangle vertices x, y, z and convex f, compares
//   3 f(centroid) + f(x) + f(y) + f(z)   vs   2 [f(m_xy) + f(m_yz) + f(m_xz)].
// lhs >= rhs for every convex f is exactly the convex-order statement for
// the triangle_instance pair.
inline TriangleInequalityEvaluation evaluate_triangle_inequality(const PointQ& x, const PointQ& y,
                                                                 const PointQ& z,
                                                                 const MaxAffineWitness& f)
{
    if (x.dim() != 2 || y.dim() != 2 || z.dim() != 2)
        throw std::invalid_argument("evaluate_triangle_inequality: vertices must be 2-dimensional");
    const Rational half(1, 2), third(1, 3);
    TriangleInequalityEvaluation eval;
    eval.lhs = Rational(3) * f(third * (x + y + z)) + f(x) + f(y) + f(z);
    eval.rhs = Rational(2) * (f(half * (x + y)) + f(half * (y + z)) + f(half * (x + z)));
    eval.holds = eval.lhs >= eval.rhs;
    return eval;
}

} // namespace cvxorder
