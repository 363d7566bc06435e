#include "hermfold/curve.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermfold {

namespace {

// Factor q as p^s for prime p, or throw.
void factor_prime_power(int q, int& p, int& s) {
    if (q < 2) throw std::invalid_argument("curve: q must be a prime power >= 2");
    int base = 0;
    for (int d = 2; d <= q; ++d) {
        if (q % d == 0) { base = d; break; }
    }
    int v = q, e = 0;
    while (v % base == 0) { v /= base; ++e; }
    if (v != 1) throw std::invalid_argument("curve: q must be a prime power");
    p = base;
    s = e;
}

} // namespace

HermitianCurve::HermitianCurve(int q) : q_(q) {
    int p = 0, s = 0;
    factor_prime_power(q, p, s);
    if (q > 16) throw std::invalid_argument("curve: q must be at most 16");
    genus_ = q * (q - 1) / 2;
    field_ = Field::create(p, 2 * s);

    // Collect the affine points in (x, y) code order: the outer loop over x
    // codes and inner loop over y codes yields them already sorted.
    const std::uint32_t Q2 = field_->order();
    points_.reserve((size_t)q * q * q);
    for (std::uint32_t x = 0; x < Q2; ++x) {
        std::uint16_t rhs = field_->norm_to((std::uint16_t)x, q_);
        for (std::uint32_t y = 0; y < Q2; ++y) {
            if (field_->trace_to((std::uint16_t)y, q_) == rhs)
                points_.push_back({(std::uint16_t)x, (std::uint16_t)y});
        }
    }
    if ((long long)points_.size() != (long long)q * q * q)
        throw std::logic_error("curve: point count != q^3");
}

bool HermitianCurve::on_curve(const CurvePoint& pt) const {
    field_->check_code(pt.x);
    field_->check_code(pt.y);
    return field_->trace_to(pt.y, q_) == field_->norm_to(pt.x, q_);
}

int HermitianCurve::point_index(const CurvePoint& pt) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), pt);
    if (it == points_.end() || !(*it == pt))
        throw std::invalid_argument("curve: point is not on the curve");
    return (int)(it - points_.begin());
}

std::vector<Monomial> HermitianCurve::monomial_basis(long long r) const {
    if (r < 0 || r >= (long long)q_ * q_ * q_)
        throw std::invalid_argument("curve: r out of range");
    std::vector<Monomial> basis;
    for (long long j = 0; j <= q_ - 1; ++j) {
        long long rem = r - j * (q_ + 1);
        if (rem < 0) continue;
        for (long long i = 0; i * q_ <= rem; ++i) basis.push_back({i, j});
    }
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
        long long pa = pole_order(a), pb = pole_order(b);
        return pa != pb ? pa < pb : a.j < b.j;
    });
    return basis;
}

long long HermitianCurve::riemann_roch_dim(long long r) const {
    return (long long)monomial_basis(r).size();
}

std::uint16_t HermitianCurve::eval_monomial(const Monomial& m, const CurvePoint& pt) const {
    return field_->mul(field_->pow(pt.x, (unsigned long long)m.i),
                       field_->pow(pt.y, (unsigned long long)m.j));
}

CurvePtr curve_create(int q) { return std::make_shared<HermitianCurve>(q); }

} // namespace hermfold
