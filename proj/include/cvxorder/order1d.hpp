#pragma once

#include "cvxorder/measure.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvxorder {

namespace detail {

inline void require_dim1(const DiscreteMeasure& m, const char* what)
{
    if (m.dim() != 1)
        throw std::invalid_argument(std::string(what) + ": measure must be 1-dimensional, got " +
                                    std::to_string(m.dim()));
}

} // namespace detail

// Expected payoff of (x - t)+, the extremal convex test functions on a line.
inline Rational stop_loss(const DiscreteMeasure& m, const Rational& t)
{
    detail::require_dim1(m, "stop_loss");
    Rational sum(0);
    for (const auto& a : m.atoms())
        if (a.point[0] > t)
            sum += a.weight * (a.point[0] - t);
    return sum;
}

// Stop-loss values over strictly increasing thresholds. As a function of the
// threshold the piecewise-linear extension is convex and nonincreasing.
struct StopLossProfile {
    std::vector<Rational> thresholds;
    std::vector<Rational> values;
};

inline StopLossProfile stop_loss_profile(const DiscreteMeasure& m,
                                         std::vector<Rational> thresholds)
{
    detail::require_dim1(m, "stop_loss_profile");
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    // Atoms are lex-sorted, so suffix sums give stop_loss(t) = M_k - t*W_k
    // where k is the first atom above t.
    const auto& atoms = m.atoms();
    const std::size_t n = atoms.size();
    std::vector<Rational> suffix_mass(n + 1, Rational(0));
    std::vector<Rational> suffix_moment(n + 1, Rational(0));
    for (std::size_t i = n; i-- > 0;) {
        suffix_mass[i] = suffix_mass[i + 1] + atoms[i].weight;
        suffix_moment[i] = suffix_moment[i + 1] + atoms[i].weight * atoms[i].point[0];
    }

    StopLossProfile profile;
    profile.values.reserve(thresholds.size());
    std::size_t k = 0;
    for (const auto& t : thresholds) {
        while (k < n && atoms[k].point[0] <= t)
            ++k;
        profile.values.push_back(suffix_moment[k] - t * suffix_mass[k]);
    }
    profile.thresholds = std::move(thresholds);
    return profile;
}

inline StopLossProfile stop_loss_profile(const DiscreteMeasure& m)
{
    detail::require_dim1(m, "stop_loss_profile");
    std::vector<Rational> thresholds;
    thresholds.reserve(m.size());
    for (const auto& a : m.atoms())
        thresholds.push_back(a.point[0]);
    return stop_loss_profile(m, std::move(thresholds));
}

enum class Order1D { Dominated, NotDominated, MeanMismatch };

struct Order1DResult {
    Order1D kind = Order1D::Dominated;
    // Set exactly when NotDominated: g(u) = max(u - threshold, 0) is a 1-D
    // convex witness with a strictly larger integral against a than b.
    std::optional<Rational> violating_threshold;
};

// Decides a <= b in the convex order on the line. With equal means the
// stop-loss difference is piecewise linear with kinks only at support points
// of either measure and vanishes at both infinities, so nonnegativity at the
// pooled support certifies it everywhere.
inline Order1DResult check_convex_order_1d(const DiscreteMeasure& a, const DiscreteMeasure& b)
{
    detail::require_dim1(a, "check_convex_order_1d");
    detail::require_dim1(b, "check_convex_order_1d");

    if (barycenter(a) != barycenter(b))
        return {Order1D::MeanMismatch, std::nullopt};

    std::vector<Rational> pooled;
    pooled.reserve(a.size() + b.size());
    for (const auto& atom : a.atoms())
        pooled.push_back(atom.point[0]);
    for (const auto& atom : b.atoms())
        pooled.push_back(atom.point[0]);

    const StopLossProfile pa = stop_loss_profile(a, pooled);
    const StopLossProfile pb = stop_loss_profile(b, std::move(pooled));
    for (std::size_t k = 0; k < pa.thresholds.size(); ++k)
        if (pa.values[k] > pb.values[k])
            return {Order1D::NotDominated, pa.thresholds[k]};
    return {Order1D::Dominated, std::nullopt};
}

struct MajorizationVerdict {
    bool holds = false;
    // 1-based: the first k whose descending partial sum of x exceeds that of
    // y, or n when the totals differ.
    std::optional<std::size_t> failing_k;
    std::vector<Rational> partial_sums_x;
    std::vector<Rational> partial_sums_y;
};

// x is majorized by y: descending partial sums of x never exceed those of y
// and the totals agree. Multiset semantics, repeated entries are fine.
inline MajorizationVerdict majorizes(std::vector<Rational> x, std::vector<Rational> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("majorizes: vectors must have equal length");
    if (x.empty())
        throw std::invalid_argument("majorizes: vectors must be non-empty");

    std::stable_sort(x.begin(), x.end(), std::greater<>());
    std::stable_sort(y.begin(), y.end(), std::greater<>());

    const std::size_t n = x.size();
    MajorizationVerdict verdict;
    verdict.partial_sums_x.reserve(n);
    verdict.partial_sums_y.reserve(n);
    Rational sx(0), sy(0);
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        verdict.partial_sums_x.push_back(sx);
        verdict.partial_sums_y.push_back(sy);
    }
    for (std::size_t k = 1; k < n; ++k) {
        if (verdict.partial_sums_x[k - 1] > verdict.partial_sums_y[k - 1]) {
            verdict.failing_k = k;
            return verdict;
        }
    }
    if (verdict.partial_sums_x[n - 1] != verdict.partial_sums_y[n - 1]) {
        verdict.failing_k = n;
        return verdict;
    }
    verdict.holds = true;
    return verdict;
}

// The explicit majorization behind Popoviciu's three-point inequality:
//   x = (midpoint of each vertex pair, twice each)
//   y = (mean of all three, three times, then the vertices themselves).
inline std::pair<std::vector<Rational>, std::vector<Rational>>
popoviciu_majorization_vectors(const Rational& r, const Rational& s, const Rational& t)
{
    const Rational half(1, 2), third(1, 3);
    const Rational rs = half * (r + s);
    const Rational st = half * (s + t);
    const Rational rt = half * (r + t);
    const Rational mean = third * (r + s + t);
    return {{rs, rs, st, st, rt, rt}, {mean, mean, mean, r, s, t}};
}

// Popoviciu's inequality for the uniform three-point case, decided through
// the explicit majorization. True for every rational triple; the function
// exists so the claim can be machine-checked.
inline bool popoviciu_holds(const Rational& r, const Rational& s, const Rational& t)
{
    auto [x, y] = popoviciu_majorization_vectors(r, s, t);
    return majorizes(std::move(x), std::move(y)).holds;
}

} // namespace cvxorder
