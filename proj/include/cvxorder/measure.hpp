#pragma once

#include "cvxorder/point.hpp"
#include "cvxorder/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvxorder {

struct Atom {
    PointQ point;
    Rational weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

// Finitely supported probability measure on Q^dim. Atoms are stored in
// lexicographic point order with distinct points and strictly positive
// weights summing to exactly 1.
class DiscreteMeasure {
public:
    // Rejects weight sums != 1. Duplicate points are merged, zero-weight
    // atoms dropped.
    static DiscreteMeasure from_atoms(std::vector<Atom> atoms)
    {
        auto [dim, merged, total] = merge(std::move(atoms));
        if (total != 1)
            throw std::invalid_argument("measure weights must sum to 1, got " +
                                        to_string(total));
        return DiscreteMeasure(dim, std::move(merged));
    }

    // Rescales the (nonnegative, not all zero) weights to total mass 1.
    static DiscreteMeasure normalized(std::vector<Atom> atoms)
    {
        auto [dim, merged, total] = merge(std::move(atoms));
        for (auto& a : merged)
            a.weight /= total;
        return DiscreteMeasure(dim, std::move(merged));
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return atoms_.size(); }
    const std::vector<Atom>& atoms() const { return atoms_; }

    // 0 when p is not a support point.
    Rational weight_at(const PointQ& p) const
    {
        for (const auto& a : atoms_)
            if (a.point == p)
                return a.weight;
        return Rational(0);
    }

    friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

private:
    DiscreteMeasure(std::size_t dim, std::vector<Atom> atoms)
        : dim_(dim), atoms_(std::move(atoms))
    {
    }

    struct Merged {
        std::size_t dim;
        std::vector<Atom> atoms;
        Rational total;
    };

    static Merged merge(std::vector<Atom> atoms)
    {
        if (atoms.empty())
            throw std::invalid_argument("measure needs at least one atom");
        const std::size_t dim = atoms.front().point.dim();
        if (dim == 0)
            throw std::invalid_argument("measure points need at least one coordinate");
        for (const auto& a : atoms) {
            if (a.point.dim() != dim)
                throw std::invalid_argument("measure atoms have mixed dimensions");
            if (a.weight < 0)
                throw std::invalid_argument("measure weight is negative: " +
                                            to_string(a.weight));
        }
        std::sort(atoms.begin(), atoms.end(),
                  [](const Atom& a, const Atom& b) { return lex_less(a.point, b.point); });

        std::vector<Atom> merged;
        Rational total(0);
        for (auto& a : atoms) {
            total += a.weight;
            if (!merged.empty() && merged.back().point == a.point)
                merged.back().weight += a.weight;
            else
                merged.push_back(std::move(a));
        }
        std::erase_if(merged, [](const Atom& a) { return a.weight == 0; });
        if (total == 0)
            throw std::invalid_argument("measure needs at least one positive weight");
        return {dim, std::move(merged), std::move(total)};
    }

    std::size_t dim_ = 0;
    std::vector<Atom> atoms_;
};

inline DiscreteMeasure dirac(PointQ at)
{
    return DiscreteMeasure::from_atoms({{std::move(at), Rational(1)}});
}

inline PointQ barycenter(const DiscreteMeasure& m)
{
    PointQ sum = zero_point(m.dim());
    for (const auto& a : m.atoms())
        sum = sum + a.weight * a.point;
    return sum;
}

// Pushforward of m under w |-> v.w; the result is 1-dimensional with
// coinciding images merged. v = 0 is allowed and yields the Dirac at 0.
inline DiscreteMeasure project(const DiscreteMeasure& m, const PointQ& v)
{
    if (v.dim() != m.dim())
        throw std::invalid_argument("project: direction dimension " + std::to_string(v.dim()) +
                                    " does not match measure dimension " +
                                    std::to_string(m.dim()));
    std::vector<Atom> atoms;
    atoms.reserve(m.size());
    for (const auto& a : m.atoms())
        atoms.push_back({PointQ{dot(v, a.point)}, a.weight});
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

// Pads points with trailing zero coordinates.
inline DiscreteMeasure embed(const DiscreteMeasure& m, std::size_t target_dim)
{
    if (target_dim < m.dim())
        throw std::invalid_argument("embed: target dimension " + std::to_string(target_dim) +
                                    " is below measure dimension " + std::to_string(m.dim()));
    std::vector<Atom> atoms;
    atoms.reserve(m.size());
    for (const auto& a : m.atoms()) {
        PointQ p = a.point;
        p.coords.resize(target_dim, Rational(0));
        atoms.push_back({std::move(p), a.weight});
    }
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

// Pushforward under w |-> A w + b with A given as rows; images that collide
// are merged.
inline DiscreteMeasure affine_pushforward(const DiscreteMeasure& m,
                                          const std::vector<PointQ>& matrix_rows,
                                          const PointQ& offset)
{
    if (matrix_rows.empty())
        throw std::invalid_argument("affine_pushforward: matrix needs at least one row");
    if (matrix_rows.size() != offset.dim())
        throw std::invalid_argument("affine_pushforward: offset dimension does not match row count");
    for (const auto& row : matrix_rows)
        if (row.dim() != m.dim())
            throw std::invalid_argument("affine_pushforward: matrix row dimension does not match measure");

    std::vector<Atom> atoms;
    atoms.reserve(m.size());
    for (const auto& a : m.atoms()) {
        PointQ image = offset;
        for (std::size_t i = 0; i < matrix_rows.size(); ++i)
            image[i] += dot(matrix_rows[i], a.point);
        atoms.push_back({std::move(image), a.weight});
    }
    return DiscreteMeasure::from_atoms(std::move(atoms));
}

// For triangle vertices x, y, z in Q^2:
//   mu = uniform on the three side midpoints,
//   nu = uniform on the multiset {centroid x3, x, y, z}.
// Degenerate triangles are fine; coinciding atoms merge.
inline std::pair<DiscreteMeasure, DiscreteMeasure>
triangle_instance(const PointQ& x, const PointQ& y, const PointQ& z)
{
    if (x.dim() != 2 || y.dim() != 2 || z.dim() != 2)
        throw std::invalid_argument("triangle_instance: vertices must be 2-dimensional");
    const Rational half(1, 2), third(1, 3), sixth(1, 6);
    const PointQ centroid = third * (x + y + z);
    DiscreteMeasure mu = DiscreteMeasure::from_atoms({
        {half * (x + y), third},
        {half * (y + z), third},
        {half * (x + z), third},
    });
    DiscreteMeasure nu = DiscreteMeasure::from_atoms({
        {centroid, half},
        {x, sixth},
        {y, sixth},
        {z, sixth},
    });
    return {std::move(mu), std::move(nu)};
}

// The built-in counterexample pair: the triangle construction at
// x=(0,-1), y=(-1,0), z=(2,2). Projection-wise convex order holds in every
// direction while the full 2-D order fails.
inline std::pair<DiscreteMeasure, DiscreteMeasure> counterexample_instance()
{
    return triangle_instance({Rational(0), Rational(-1)}, {Rational(-1), Rational(0)},
                             {Rational(2), Rational(2)});
}

} // namespace cvxorder
