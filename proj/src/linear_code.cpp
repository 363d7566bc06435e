#include "hermfold/linear_code.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hermfold {

using boost::multiprecision::cpp_int;

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > cap / base) return cap;
        r *= base;
        if (r >= cap) return cap;
    }
    return r;
}

LinearCode::LinearCode(FieldPtr field, Matrix generators, std::string label)
    : field_(std::move(field)), gen_(std::move(generators)), label_(std::move(label)) {
    if (!field_->same(*gen_.field()))
        throw std::invalid_argument("code: field mismatch");
    gen_.rref(&pivots_);
}

LinearCode LinearCode::evaluation_code(const CurvePtr& curve, long long r) {
    return evaluation_code(curve, r, curve->points());
}

LinearCode LinearCode::evaluation_code(const CurvePtr& curve, long long r,
                                       const std::vector<CurvePoint>& point_order) {
    long long n = curve->num_points();
    if ((long long)point_order.size() != n)
        throw std::invalid_argument("code: point_order is not a permutation of the affine points");
    std::vector<int> idx(point_order.size());
    std::vector<bool> seen(point_order.size(), false);
    for (std::size_t t = 0; t < point_order.size(); ++t) {
        idx[t] = curve->point_index(point_order[t]);
        if (seen[(std::size_t)idx[t]])
            throw std::invalid_argument("code: point_order is not a permutation of the affine points");
        seen[(std::size_t)idx[t]] = true;
    }

    auto basis = curve->monomial_basis(r);
    Matrix gen(curve->field(), basis.size(), point_order.size());
    for (std::size_t row = 0; row < basis.size(); ++row)
        for (std::size_t col = 0; col < point_order.size(); ++col)
            gen.set(row, col, curve->eval_monomial(basis[row], point_order[col]));

    LinearCode code(curve->field(), std::move(gen),
                    "C(D," + std::to_string(r) + "P_inf)");
    if ((long long)code.dim() != (long long)basis.size())
        throw std::logic_error("code: evaluation matrix rank != Riemann-Roch dimension");
    code.designed_ = n - r;
    code.curve_ = curve;
    code.eval_degree_ = r;
    code.point_idx_ = std::move(idx);
    return code;
}

LinearCode LinearCode::dual() const {
    Matrix ker = gen_.kernel();
    // kernel() can return a 0 x n matrix; keep the column count.
    LinearCode d(field_, std::move(ker));
    if (curve_ && eval_degree_) {
        long long alpha = herm_dual_degree(curve_->q(), *eval_degree_);
        if (alpha >= 0 && alpha < curve_->num_points()) {
            d.curve_ = curve_;
            d.eval_degree_ = alpha;
            d.designed_ = curve_->num_points() - alpha;
            d.point_idx_ = point_idx_;
            d.label_ = "C(D," + std::to_string(alpha) + "P_inf)";
        }
    }
    return d;
}

bool LinearCode::contains(const LinearCode& inner) const {
    if (!field_->same(*inner.field_) || length() != inner.length())
        throw std::invalid_argument("code: field or length mismatch");
    for (std::size_t r = 0; r < inner.dim(); ++r) {
        std::vector<std::uint16_t> row(inner.gen_.row(r), inner.gen_.row(r) + length());
        if (!member(row)) return false;
    }
    return true;
}

bool LinearCode::operator==(const LinearCode& o) const {
    return field_->same(*o.field_) && gen_ == o.gen_;
}

std::vector<std::uint16_t> LinearCode::reduce(std::vector<std::uint16_t> word) const {
    if (word.size() != length()) throw std::invalid_argument("code: word length mismatch");
    const Field& f = *field_;
    for (std::size_t i = 0; i < dim(); ++i) {
        std::uint16_t c = word[pivots_[i]];
        if (c == 0) continue;
        const std::uint16_t* row = gen_.row(i);
        std::uint16_t nc = f.neg(c);
        for (std::size_t j = 0; j < word.size(); ++j)
            word[j] = f.add(word[j], f.mul(nc, row[j]));
    }
    return word;
}

bool LinearCode::member(const std::vector<std::uint16_t>& word) const {
    auto res = reduce(word);
    return std::all_of(res.begin(), res.end(), [](std::uint16_t v) { return v == 0; });
}

namespace {

cpp_int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    cpp_int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// Coefficient of x^(n-w) y^w in (x + (Q-1)y)^(n-j) (x - y)^j.
cpp_int krawtchouk(long long w, long long j, long long n, long long Q) {
    cpp_int sum = 0;
    for (long long i = 0; i <= std::min(j, w); ++i) {
        if (w - i > n - j) continue;
        cpp_int term = binomial(j, i) * binomial(n - j, w - i);
        cpp_int qpow = 1;
        for (long long t = 0; t < w - i; ++t) qpow *= (Q - 1);
        term *= qpow;
        if (i % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

} // namespace

DistanceResult LinearCode::min_distance(std::uint64_t budget) const {
    std::size_t n = length(), k = dim();
    if (k == 0) throw std::runtime_error("code: distance undefined for the zero code");
    std::uint64_t Q = field_->order();
    std::uint64_t direct = pow_capped(Q, k, UINT64_MAX);
    std::uint64_t dual_side = pow_capped(Q, n - k, UINT64_MAX);

    if (direct <= budget && (direct <= dual_side || dual_side > budget)) {
        long long best = (long long)n + 1;
        for_each_codeword([&](const std::vector<std::uint16_t>& w) {
            long long wt = hamming_weight(w);
            if (wt > 0 && wt < best) best = wt;
            return true;
        });
        return {best, true};
    }

    if (dual_side <= budget) {
        // Enumerate the dual's weight distribution and push it through the
        // MacWilliams identity.  Only the leading coefficients are needed:
        // the first w >= 1 with a positive codeword count is the distance,
        // and w never exceeds n - k + 1 (Singleton), so the transform stays
        // cheap even for long codes.
        LinearCode d(field_, gen_.kernel());
        std::map<long long, cpp_int> dual_weights;
        d.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
            dual_weights[hamming_weight(w)] += 1;
            return true;
        });
        cpp_int dual_size = 1;
        for (std::size_t i = 0; i < n - k; ++i) dual_size *= Q;

        // Sanity check at w = 0: the transform must count exactly one zero
        // word.
        {
            cpp_int a0 = 0;
            for (const auto& [j, bj] : dual_weights)
                a0 += bj * krawtchouk(0, j, (long long)n, (long long)Q);
            if (a0 != dual_size)
                throw std::logic_error("code: MacWilliams transform failed the A_0 check");
        }
        for (long long w = 1; w <= (long long)n; ++w) {
            cpp_int aw = 0;
            for (const auto& [j, bj] : dual_weights)
                aw += bj * krawtchouk(w, j, (long long)n, (long long)Q);
            if (aw % dual_size != 0)
                throw std::logic_error("code: MacWilliams transform produced a fraction");
            if (aw > 0) return {w, true};
            if (aw < 0)
                throw std::logic_error("code: MacWilliams transform produced a negative count");
        }
        throw std::logic_error("code: MacWilliams transform found no nonzero weight");
    }

    if (designed_) return {*designed_, false};
    throw std::runtime_error("code: distance unavailable (enumeration over budget, no designed bound)");
}

void LinearCode::export_matrix(std::ostream& out) const {
    out << field_->header() << "\n";
    out << length() << " " << dim() << "\n";
    for (std::size_t r = 0; r < dim(); ++r) {
        const std::uint16_t* row = gen_.row(r);
        for (std::size_t c = 0; c < length(); ++c) {
            if (c) out << " ";
            out << row[c];
        }
        out << "\n";
    }
}

LinearCode LinearCode::with_permuted_columns(const std::vector<int>& perm) const {
    LinearCode c(field_, gen_.permuted_columns(perm), label_);
    c.designed_ = designed_;
    c.curve_ = curve_;
    c.eval_degree_ = eval_degree_;
    if (!point_idx_.empty()) {
        c.point_idx_.resize(perm.size());
        for (std::size_t t = 0; t < perm.size(); ++t)
            c.point_idx_[t] = point_idx_[(std::size_t)perm[t]];
    }
    return c;
}

long long herm_dual_degree(int q, long long r) {
    return (long long)q * q * q + (long long)q * q - q - 2 - r;
}

std::uint64_t weight_of_set_difference(const LinearCode& a, const LinearCode& b,
                                       std::uint64_t budget) {
    if (!a.contains(b))
        throw std::invalid_argument("code: set difference requires B to be a subcode of A");
    std::uint64_t count = pow_capped(a.field()->order(), a.dim(), UINT64_MAX);
    if (count > budget)
        throw std::runtime_error("code: set difference enumeration over budget");
    long long best = (long long)a.length() + 1;
    a.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        long long wt = hamming_weight(w);
        if (wt < best && wt > 0 && !b.member(w)) best = wt;
        return true;
    });
    if (best > (long long)a.length())
        throw std::runtime_error("code: set difference is empty");
    return (std::uint64_t)best;
}

} // namespace hermfold
