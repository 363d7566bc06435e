#include "hermfold/folding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hermfold {

HermitianAutomorphism::HermitianAutomorphism(CurvePtr curve, std::uint16_t delta,
                                             std::uint16_t mu)
    : curve_(std::move(curve)), delta_(delta), mu_(mu) {
    const Field& f = *curve_->field();
    f.check_code(delta_);
    f.check_code(mu_);
    std::uint32_t q = (std::uint32_t)curve_->q();
    if (f.trace_to(mu_, q) != f.norm_to(delta_, q))
        throw std::invalid_argument(
            "automorphism: mu^q + mu != delta^(q+1)");

    // The map must permute the affine points; walk every point once both to
    // confirm that and to find the permutation order.
    const auto& pts = curve_->points();
    std::vector<int> next(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CurvePoint img = apply(pts[i]);
        if (!curve_->on_curve(img))
            throw std::logic_error("automorphism: image left the curve");
        next[i] = curve_->point_index(img);
    }
    std::vector<bool> seen(pts.size(), false);
    long long ord = 1;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        std::size_t j = i;
        do {
            seen[j] = true;
            j = (std::size_t)next[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, len);
    }
    order_ = ord;
    if (!is_identity() && ord == 1)
        throw std::logic_error("automorphism: nonidentity map fixed every point");
}

CurvePoint HermitianAutomorphism::apply(const CurvePoint& pt) const {
    const Field& f = *curve_->field();
    std::uint32_t q = (std::uint32_t)curve_->q();
    std::uint16_t nx = f.add(pt.x, delta_);
    std::uint16_t shear = f.mul(f.pow(delta_, q), pt.x);
    std::uint16_t ny = f.add(f.add(pt.y, shear), mu_);
    return {nx, ny};
}

long long HermitianAutomorphism::order() const { return order_; }

HermitianAutomorphism default_automorphism(const CurvePtr& curve, long long m) {
    const Field& f = *curve->field();
    std::uint32_t q = (std::uint32_t)curve->q();
    long long n = curve->num_points();
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("folding: m does not divide q^3");
    if (m == 1) return HermitianAutomorphism(curve, 0, 0);

    // delta = 0 gives order p (mu in the trace kernel); a nonzero delta is
    // needed only when m calls for order p^2, which happens just in
    // characteristic 2 (m = 4).
    auto try_family = [&](std::uint16_t delta) -> std::optional<HermitianAutomorphism> {
        for (std::uint16_t mu : f.solve_mu_constraint(delta, q)) {
            if (delta == 0 && mu == 0) continue;
            HermitianAutomorphism sigma(curve, delta, mu);
            if (sigma.order() % m == 0) return sigma;
        }
        return std::nullopt;
    };

    if (auto sigma = try_family(0)) return *sigma;
    for (std::uint32_t delta = 1; delta < f.order(); ++delta)
        if (auto sigma = try_family((std::uint16_t)delta)) return *sigma;
    throw std::invalid_argument(
        "folding: no automorphism sigma_{delta,mu} has order divisible by m");
}

FoldChains FoldChains::orbit_chains(const HermitianAutomorphism& sigma, long long m) {
    const HermitianCurve& curve = *sigma.curve();
    long long n = curve.num_points();
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("folding: m does not divide q^3");
    if (sigma.order() % m != 0)
        throw std::invalid_argument("folding: m does not divide the automorphism order");
    if (!sigma.is_identity()) {
        // A nonidentity sigma_{delta,mu} acts freely on affine points, so all
        // orbits have full size ord(sigma) and cut evenly into chains of m.
        for (const auto& pt : curve.points())
            if (sigma.apply(pt) == pt)
                throw std::invalid_argument("folding: automorphism fixes an affine point");
    }

    std::vector<bool> visited((std::size_t)n, false);
    std::vector<std::vector<int>> chains;
    for (long long start = 0; start < n; ++start) {
        if (visited[(std::size_t)start]) continue;
        // Walk the whole orbit from its least unvisited index, cutting it
        // into consecutive chains.
        std::vector<int> orbit;
        int idx = (int)start;
        do {
            if (visited[(std::size_t)idx])
                throw std::logic_error("folding: chain collision");
            visited[(std::size_t)idx] = true;
            orbit.push_back(idx);
            idx = curve.point_index(sigma.apply(curve.points()[(std::size_t)idx]));
        } while (idx != (int)start);
        if ((long long)orbit.size() % m != 0)
            throw std::invalid_argument("folding: orbit size not divisible by m");
        for (std::size_t off = 0; off < orbit.size(); off += (std::size_t)m)
            chains.emplace_back(orbit.begin() + (std::ptrdiff_t)off,
                                orbit.begin() + (std::ptrdiff_t)(off + (std::size_t)m));
    }
    return FoldChains(m, std::move(chains));
}

FoldChains FoldChains::consecutive(long long n, long long m) {
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("folding: m does not divide the length");
    std::vector<std::vector<int>> chains;
    for (long long b = 0; b < n / m; ++b) {
        std::vector<int> chain;
        for (long long t = 0; t < m; ++t) chain.push_back((int)(b * m + t));
        chains.push_back(std::move(chain));
    }
    return FoldChains(m, std::move(chains));
}

std::vector<int> FoldChains::flattened() const {
    std::vector<int> flat;
    flat.reserve((std::size_t)n());
    for (const auto& c : chains_) flat.insert(flat.end(), c.begin(), c.end());
    return flat;
}

FoldedCode::FoldedCode(LinearCode code, FoldChains chains)
    : code_(std::move(code)), chains_(std::move(chains)) {
    if ((long long)code_.length() != chains_.n())
        throw std::invalid_argument("folding: chains do not cover the code length");
}

FoldedCode FoldedCode::fold(const LinearCode& code, const FoldChains& chains) {
    if ((long long)code.length() != chains.n())
        throw std::invalid_argument("folding: chains do not cover the code length");
    std::vector<int> flat = chains.flattened();

    if (code.point_indices().empty()) {
        // No evaluation metadata: accept only if no reordering is needed.
        for (std::size_t t = 0; t < flat.size(); ++t)
            if (flat[t] != (int)t)
                throw std::invalid_argument("folding: coordinate order mismatch");
        return FoldedCode(code, chains);
    }

    // Column t of the folded code evaluates at curve point flat[t]; find that
    // point in the code's current evaluation order.
    std::vector<int> where(code.point_indices().size(), -1);
    for (std::size_t col = 0; col < code.point_indices().size(); ++col)
        where[(std::size_t)code.point_indices()[col]] = (int)col;
    std::vector<int> perm(flat.size());
    for (std::size_t t = 0; t < flat.size(); ++t) {
        int w = where[(std::size_t)flat[t]];
        if (w < 0) throw std::invalid_argument("folding: coordinate order mismatch");
        perm[t] = w;
    }
    return FoldedCode(code.with_permuted_columns(perm), chains);
}

std::optional<long long> FoldedCode::designed_block_distance() const {
    auto d = code_.designed_distance();
    if (!d) return std::nullopt;
    return (*d + m() - 1) / m();
}

FoldedCode FoldedCode::dual() const {
    // Duality commutes with the coordinate permutation already applied, so
    // the kernel in chain order is exactly the fold of the dual.
    return FoldedCode(code_.dual(), chains_);
}

DistanceResult FoldedCode::min_block_distance(std::uint64_t budget) const {
    if (code_.dim() == 0)
        throw std::runtime_error("code: distance undefined for the zero code");
    std::uint64_t count = pow_capped(code_.field()->order(), code_.dim(), UINT64_MAX);
    if (count > budget) {
        if (auto d = designed_block_distance()) return {*d, false};
        throw std::runtime_error("folding: block distance enumeration over budget");
    }
    long long best = length() + 1;
    long long mm = m();
    code_.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        long long bw = folded_weight(w, mm);
        if (bw > 0 && bw < best) best = bw;
        return true;
    });
    return {best, true};
}

std::string FoldedCode::triple_string() const {
    std::string d = designed_block_distance()
                        ? std::to_string(*designed_block_distance())
                        : std::string("?");
    return "[" + std::to_string(length()) + ", " + dim().str() + ", >=" + d + "]";
}

long long folded_weight(const std::vector<std::uint16_t>& v, long long m) {
    if (m < 1 || v.size() % (std::size_t)m != 0)
        throw std::invalid_argument("folding: m does not divide the length");
    long long w = 0;
    for (std::size_t b = 0; b < v.size(); b += (std::size_t)m) {
        for (std::size_t t = 0; t < (std::size_t)m; ++t) {
            if (v[b + t] != 0) {
                ++w;
                break;
            }
        }
    }
    return w;
}

bool blockwise_orthogonal(const FoldedCode& a, const FoldedCode& b) {
    if (a.length() != b.length() || a.m() != b.m() ||
        !a.unfolded().field()->same(*b.unfolded().field()))
        throw std::invalid_argument("folding: chain mismatch");
    const Field& f = *a.unfolded().field();
    long long m = a.m();
    const Matrix& ga = a.unfolded().generator();
    const Matrix& gb = b.unfolded().generator();
    for (std::size_t i = 0; i < ga.rows(); ++i) {
        for (std::size_t j = 0; j < gb.rows(); ++j) {
            std::uint16_t total = 0;
            for (long long blk = 0; blk < a.length(); ++blk) {
                std::uint16_t dot = 0;
                for (long long t = 0; t < m; ++t) {
                    std::size_t col = (std::size_t)(blk * m + t);
                    dot = f.add(dot, f.mul(ga.get(i, col), gb.get(j, col)));
                }
                total = f.add(total, dot);
            }
            if (total != 0) return false;
        }
    }
    return true;
}

FoldedCode fold_reed_solomon(int q, long long k, long long m) {
    // Same alphabet GF(q^2) as the Hermitian construction with this q.
    int p = 0, s = 0;
    {
        int v = q;
        if (v < 2) throw std::invalid_argument("folding: q must be a prime power");
        for (int d = 2; d <= v; ++d)
            if (v % d == 0) { p = d; break; }
        int e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (v != 1) throw std::invalid_argument("folding: q must be a prime power");
        s = e;
    }
    FieldPtr f = Field::create(p, 2 * s);
    long long n = (long long)f->order() - 1;
    if (k < 1 || k > n)
        throw std::invalid_argument("folding: RS dimension out of range");
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("folding: m does not divide q^2 - 1");

    // Evaluate at successive powers of the least primitive element; the map
    // x -> gamma x cycles through these points, so consecutive runs of m are
    // its orbit chains.
    std::uint16_t gamma = f->least_primitive();
    std::vector<std::uint16_t> points((std::size_t)n);
    std::uint16_t cur = 1;
    for (long long i = 0; i < n; ++i) {
        points[(std::size_t)i] = cur;
        cur = f->mul(cur, gamma);
    }

    Matrix gen(f, (std::size_t)k, (std::size_t)n);
    for (long long row = 0; row < k; ++row)
        for (long long col = 0; col < n; ++col)
            gen.set((std::size_t)row, (std::size_t)col,
                    f->pow(points[(std::size_t)col], (unsigned long long)row));

    LinearCode code(f, std::move(gen),
                    "RS[" + std::to_string(n) + "," + std::to_string(k) + "]");
    code.set_designed_distance(n - k + 1); // MDS, so this is the true distance
    return FoldedCode(std::move(code), FoldChains::consecutive(n, m));
}

} // namespace hermfold
