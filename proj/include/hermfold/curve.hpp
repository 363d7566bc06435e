#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hermfold/field.hpp"

namespace hermfold {

// Affine point (x, y) on a Hermitian curve, stored as element codes of
// GF(q^2).
struct CurvePoint {
    std::uint16_t x = 0;
    std::uint16_t y = 0;
    bool operator==(const CurvePoint& o) const { return x == o.x && y == o.y; }
    bool operator<(const CurvePoint& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

// Monomial x^i y^j; pole order at the place at infinity is i*q + j*(q+1).
struct Monomial {
    long long i = 0;
    long long j = 0;
    bool operator==(const Monomial& o) const { return i == o.i && j == o.j; }
};

// The Hermitian curve y^q + y = x^(q+1) over GF(q^2).  It has exactly q^3
// affine rational points (for each of the q^2 values of x, the equation in y
// is an additive translate of the trace kernel and has q solutions), genus
// q(q-1)/2, and a single place at infinity whose pole orders generate the
// numerical semigroup <q, q+1>.
class HermitianCurve {
public:
    explicit HermitianCurve(int q);

    int q() const { return q_; }
    int genus() const { return genus_; }
    long long num_points() const { return (long long)points_.size(); }
    const FieldPtr& field() const { return field_; }

    // All affine points, sorted ascending by (x code, y code).
    const std::vector<CurvePoint>& points() const { return points_; }

    bool on_curve(const CurvePoint& pt) const;

    // Index of a point in points(); throws if the point is not on the curve.
    int point_index(const CurvePoint& pt) const;

    long long pole_order(const Monomial& m) const {
        return m.i * q_ + m.j * (q_ + 1);
    }

    // Monomials x^i y^j with i*q + j*(q+1) <= r and 0 <= j <= q-1, sorted by
    // pole order.  Restricting j below q makes the pole orders distinct, so
    // these monomials are a basis of the Riemann-Roch space L(r P_inf).
    std::vector<Monomial> monomial_basis(long long r) const;

    // dim L(r P_inf) = |monomial_basis(r)|; equals r - g + 1 once
    // r >= 2g - 1.
    long long riemann_roch_dim(long long r) const;

    // Evaluate x^i y^j at a point, as an element code.
    std::uint16_t eval_monomial(const Monomial& m, const CurvePoint& pt) const;

private:
    int q_;
    int genus_;
    FieldPtr field_;
    std::vector<CurvePoint> points_;
};

using CurvePtr = std::shared_ptr<const HermitianCurve>;

CurvePtr curve_create(int q);

} // namespace hermfold
