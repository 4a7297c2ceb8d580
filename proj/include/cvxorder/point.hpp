#pragma once

#include "cvxorder/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cvxorder {

// Point of Q^d. The dimension is fixed by whoever owns the point; arithmetic
// between points of different dimension throws.
struct PointQ {
    std::vector<Rational> coords;

    PointQ() = default;
    explicit PointQ(std::vector<Rational> c) : coords(std::move(c)) {}
    PointQ(std::initializer_list<Rational> c) : coords(c) {}

    std::size_t dim() const { return coords.size(); }
    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    friend bool operator==(const PointQ&, const PointQ&) = default;
};

inline void require_same_dim(const PointQ& a, const PointQ& b, const char* what)
{
    if (a.dim() != b.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
}

inline PointQ zero_point(std::size_t dim)
{
    return PointQ(std::vector<Rational>(dim, Rational(0)));
}

inline Rational dot(const PointQ& a, const PointQ& b)
{
    require_same_dim(a, b, "dot");
    Rational sum(0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        sum += a[i] * b[i];
    return sum;
}

inline PointQ operator+(const PointQ& a, const PointQ& b)
{
    require_same_dim(a, b, "operator+");
    PointQ out = a;
    for (std::size_t i = 0; i < b.dim(); ++i)
        out[i] += b[i];
    return out;
}

inline PointQ operator-(const PointQ& a, const PointQ& b)
{
    require_same_dim(a, b, "operator-");
    PointQ out = a;
    for (std::size_t i = 0; i < b.dim(); ++i)
        out[i] -= b[i];
    return out;
}

inline PointQ operator*(const Rational& s, const PointQ& p)
{
    PointQ out = p;
    for (auto& c : out.coords)
        c *= s;
    return out;
}

inline PointQ operator-(const PointQ& p)
{
    return Rational(-1) * p;
}

// Canonical ordering of atoms and support points: lexicographic by coordinates.
inline bool lex_less(const PointQ& a, const PointQ& b)
{
    require_same_dim(a, b, "lex_less");
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a[i] < b[i])
            return true;
        if (b[i] < a[i])
            return false;
    }
    return false;
}

inline bool is_zero(const PointQ& p)
{
    for (const auto& c : p.coords)
        if (c != 0)
            return false;
    return true;
}

inline std::string to_string(const PointQ& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.dim(); ++i) {
        if (i > 0)
            out += ",";
        out += to_string(p[i]);
    }
    out += ")";
    return out;
}

} // namespace cvxorder
