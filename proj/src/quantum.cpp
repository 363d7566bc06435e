#include "hermfold/quantum.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermfold {

namespace {

struct SetDiffWeights {
    long long unfolded;
    long long folded;
};

// Minimum Hamming weight and minimum block weight over A \ B (B a subcode
// of A).  The two minima may be attained by different codewords, so both are
// tracked in one enumeration pass.
SetDiffWeights set_difference_weights(const LinearCode& a, const LinearCode& b,
                                      long long m, std::uint64_t budget) {
    if (!a.contains(b))
        throw std::invalid_argument("code: set difference requires B to be a subcode of A");
    std::uint64_t count = pow_capped(a.field()->order(), a.dim(), UINT64_MAX);
    if (count > budget)
        throw std::runtime_error("code: set difference enumeration over budget");
    long long n = (long long)a.length();
    long long best_u = n + 1, best_f = n + 1;
    a.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        long long wu = hamming_weight(w);
        if (wu == 0) return true;
        long long wf = folded_weight(w, m);
        if (wu >= best_u && wf >= best_f) return true;
        if (b.member(w)) return true;
        best_u = std::min(best_u, wu);
        best_f = std::min(best_f, wf);
        return true;
    });
    if (best_u > n) throw std::runtime_error("code: set difference is empty");
    return {best_u, best_f};
}

} // namespace

CssCode::CssCode(FoldedCode c1, FoldedCode c2, std::uint64_t budget)
    : c1_(std::move(c1)),
      c2_(std::move(c2)),
      c1_dual_(c1_.dual()),
      c2_dual_(c2_.dual()) {
    if (!(c1_.chains() == c2_.chains()) ||
        !c1_.unfolded().field()->same(*c2_.unfolded().field()))
        throw std::invalid_argument("css: chain mismatch");
    if (!c1_.unfolded().contains(c2_dual_.unfolded()))
        throw std::invalid_argument("css: containment violated: dual(C2) is not contained in C1");

    long long n = (long long)c1_.unfolded().length();
    long long k1 = (long long)c1_.unfolded().dim();
    long long k2 = (long long)c2_.unfolded().dim();
    dim_ = Rational(k1 + k2 - n, m());
    rate_ = Rational(k1 + k2 - n, n);

    auto d1 = c1_.unfolded().designed_distance();
    auto d2 = c2_.unfolded().designed_distance();
    if (d1 && d2) {
        long long dmin = std::min(*d1, *d2);
        dist_.designed_folded = (dmin + m() - 1) / m();
    }

    std::uint64_t Q = c1_.unfolded().field()->order();
    if (k1 + k2 > n && pow_capped(Q, (std::uint64_t)k1, UINT64_MAX) <= budget &&
        pow_capped(Q, (std::uint64_t)k2, UINT64_MAX) <= budget) {
        auto s1 = set_difference_weights(c1_.unfolded(), c2_dual_.unfolded(), m(), budget);
        auto s2 = set_difference_weights(c2_.unfolded(), c1_dual_.unfolded(), m(), budget);
        dist_.exact_unfolded = std::min(s1.unfolded, s2.unfolded);
        dist_.exact_folded = std::min(s1.folded, s2.folded);
    }
}

std::string CssCode::param_string() const {
    auto d = dist_.reported();
    std::string ds = d ? std::to_string(*d) : std::string("?");
    return "[[" + std::to_string(length()) + ", " + dim_.str() + ", >=" + ds + "]]";
}

CssCode css_params(const FoldedCode& c1, const FoldedCode& c2, std::uint64_t budget) {
    return CssCode(c1, c2, budget);
}

CssCode css_params(const LinearCode& c1, const LinearCode& c2, std::uint64_t budget) {
    FoldChains chains = FoldChains::consecutive((long long)c1.length(), 1);
    return CssCode(FoldedCode(c1, chains), FoldedCode(c2, chains), budget);
}

std::pair<CssCode, FqhcParams> fqhc_construct(
    int q, long long r1, long long r2, long long m,
    const std::optional<HermitianAutomorphism>& sigma_in, std::uint64_t budget) {
    CurvePtr curve;
    if (sigma_in) {
        curve = sigma_in->curve();
        if (curve->q() != q)
            throw std::invalid_argument("fqhc: automorphism belongs to a different curve");
    } else {
        curve = curve_create(q);
    }
    long long n = curve->num_points();
    long long alpha = herm_dual_degree(q, r2);
    if (alpha > r1)
        throw std::invalid_argument(
            "fqhc: containment precondition violated: herm_dual_degree(q, r2) > r1");

    HermitianAutomorphism sigma =
        sigma_in ? *sigma_in : default_automorphism(curve, m);
    FoldChains chains = FoldChains::orbit_chains(sigma, m);

    LinearCode code1 = LinearCode::evaluation_code(curve, r1);
    LinearCode code2 = LinearCode::evaluation_code(curve, r2);
    FoldedCode f1 = FoldedCode::fold(code1, chains);
    FoldedCode f2 = FoldedCode::fold(code2, chains);

    CssCode css(f1, f2, budget);

    // Fold/dual commutation on actual matrices: dualizing then permuting
    // into chain order must agree with permuting then dualizing, and the
    // result must be blockwise orthogonal to the folded code.
    FoldedCode dual_then_fold = FoldedCode::fold(code2.dual(), chains);
    FoldedCode fold_then_dual = f2.dual();
    if (dual_then_fold.unfolded() != fold_then_dual.unfolded())
        throw std::logic_error("fqhc: fold-dual commutation violated");
    if (!blockwise_orthogonal(f2, fold_then_dual))
        throw std::logic_error("fqhc: folded dual is not blockwise orthogonal");

    FqhcParams params;
    params.q = q;
    params.r1 = r1;
    params.r2 = r2;
    params.m = m;
    params.alpha = alpha;
    params.n = n;
    params.folded_length = n / m;
    params.sigma_delta = sigma.delta();
    params.sigma_mu = sigma.mu();
    params.dim = Rational(curve->riemann_roch_dim(r1) - curve->riemann_roch_dim(alpha), m);
    params.designed_folded = (std::min(n - r1, n - r2) + m - 1) / m;

    if (params.dim != css.dim())
        throw std::logic_error("fqhc: folded CSS dimension disagrees with the degree formula");

    return {std::move(css), params};
}

RateRadius fqhc_rate_radius(const Rational& r1, const Rational& r2,
                            const Rational& eps) {
    Rational zero(0), one(1);
    if (r1 < zero || r1 > one || r2 < zero || r2 > one)
        throw std::invalid_argument("fqhc: rates must lie in [0, 1]");
    if (r1 + r2 < one)
        throw std::invalid_argument("fqhc: rates must satisfy R1 + R2 >= 1");
    if (eps < zero)
        throw std::invalid_argument("fqhc: eps must be nonnegative");

    RateRadius out;
    out.r1 = r1;
    out.r2 = r2;
    out.eps = eps;
    out.quantum_rate = r1 + r2 - one;
    out.tau = min(one - r1, one - r2) - eps;
    out.guaranteed = out.tau > zero;
    out.balanced_rate = (one + out.quantum_rate) / Rational(2);
    out.balanced_tau = (one - out.quantum_rate) / Rational(2) - eps;
    return out;
}

std::string Table1Row::classical_string() const {
    return "[" + std::to_string(folded_length) + ", " + classical_dim.str() +
           ", >=" + std::to_string(classical_designed) + "]";
}

std::string Table1Row::quantum_string() const {
    return "[[" + std::to_string(folded_length) + ", " + quantum_dim.str() +
           ", >=" + std::to_string(quantum_designed) + "]]";
}

std::string Table1Row::record() const {
    return std::to_string(q) + " " + std::to_string(m) + " " +
           std::to_string(folded_length) + " " + std::to_string(classical_dim.num()) +
           " " + std::to_string(classical_dim.den()) + " " +
           std::to_string(classical_designed) + " " + std::to_string(folded_length) +
           " " + std::to_string(quantum_dim.num()) + " " +
           std::to_string(quantum_dim.den()) + " " + std::to_string(quantum_designed);
}

Table1Row table1(int q, long long m) {
    static const std::vector<std::pair<int, long long>> rows = {
        {4, 2}, {4, 4}, {5, 5}, {7, 7}, {8, 2}, {8, 4}, {16, 2}, {16, 4}};
    if (std::find(rows.begin(), rows.end(), std::make_pair(q, m)) == rows.end())
        throw std::invalid_argument("table1: unknown row");

    long long r;
    switch (q) {
        case 4: r = 48; break;
        case 5: r = 95; break;
        case 7: r = 245; break;
        case 8: r = 416; break;
        default: r = 3584; break; // q = 16
    }
    long long n = (long long)q * q * q;
    long long g = (long long)q * (q - 1) / 2;
    long long ell = r - g + 1; // r >= 2g - 1 in every row

    Table1Row row;
    row.q = q;
    row.m = m;
    row.r = r;
    row.folded_length = n / m;
    row.classical_dim = Rational(ell, m);
    row.classical_designed = (n - r + m - 1) / m;
    row.quantum_dim = Rational(2 * ell - n, m);
    row.quantum_designed = row.classical_designed;
    return row;
}

std::vector<Table1Row> table1_all() {
    std::vector<Table1Row> rows;
    for (auto [q, m] : std::vector<std::pair<int, long long>>{
             {4, 2}, {4, 4}, {5, 5}, {7, 7}, {8, 2}, {8, 4}, {16, 2}, {16, 4}})
        rows.push_back(table1(q, m));
    return rows;
}

EaParams ea_params(const FoldedCode& c1, const FoldedCode& c2, std::uint64_t budget) {
    if (!(c1.chains() == c2.chains()) ||
        !c1.unfolded().field()->same(*c2.unfolded().field()))
        throw std::invalid_argument("ea: chain mismatch");

    const LinearCode& a = c1.unfolded();
    const LinearCode& b = c2.unfolded();
    long long n = (long long)a.length();
    long long m = c1.m();
    long long k1 = (long long)a.dim();
    long long k2 = (long long)b.dim();

    LinearCode a_dual = a.dual();
    LinearCode b_dual = b.dual();

    // dim(C1 cap dual(C2)) via dim A + dim B - dim(A + B).
    long long stacked_rank =
        (long long)a.generator().vstack(b_dual.generator()).rank();
    long long inter = k1 + (n - k2) - stacked_rank;

    EaParams out;
    out.folded_length = c1.length();
    out.m = m;
    out.dim1 = c1.dim();
    out.dim2 = c2.dim();
    out.c = Rational(k1 - inter, m);
    out.k_ea = Rational(n - k1 - k2, m) + out.c;
    out.dual_contained = b.contains(a_dual);

    std::uint64_t Q = a.field()->order();
    auto fits = [&](long long dim) {
        return pow_capped(Q, (std::uint64_t)dim, UINT64_MAX) <= budget;
    };

    // Minimum block weight of a dual, or nothing for the zero code.
    auto dual_min = [&](const LinearCode& d) -> std::optional<long long> {
        if (d.dim() == 0) return std::nullopt;
        if (!fits((long long)d.dim()))
            throw std::runtime_error("ea: dual enumeration over budget");
        long long best = c1.length() + 1;
        d.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
            long long bw = folded_weight(w, m);
            if (bw > 0 && bw < best) best = bw;
            return true;
        });
        return best;
    };
    // Minimum block weight of dual \ (dual cap other), or nothing if that
    // set is empty.
    auto dual_diff_min = [&](const LinearCode& d,
                             const LinearCode& other) -> std::optional<long long> {
        if (d.dim() == 0) return std::nullopt;
        if (!fits((long long)d.dim()))
            throw std::runtime_error("ea: dual enumeration over budget");
        long long best = c1.length() + 1;
        bool found = false;
        d.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
            if (hamming_weight(w) == 0) return true;
            if (other.member(w)) return true;
            found = true;
            long long bw = folded_weight(w, m);
            if (bw < best) best = bw;
            return true;
        });
        if (!found) return std::nullopt;
        return best;
    };

    if (out.dual_contained) {
        out.d_case = "dual(C1) contained in C2: min{wt(dual(C1)), wt(dual(C2))}";
        auto w1 = dual_min(a_dual);
        auto w2 = dual_min(b_dual);
        if (w1 && w2) out.d_ea = std::min(*w1, *w2);
        else if (w1) out.d_ea = w1;
        else if (w2) out.d_ea = w2;
        else out.d_case += " (both duals trivial; no weight bound)";
    } else {
        out.d_case = "general: min{wt(dual(C1) \\ C2), wt(dual(C2) \\ C1)}";
        auto w1 = dual_diff_min(a_dual, b);
        auto w2 = dual_diff_min(b_dual, a);
        if (w1 && w2) out.d_ea = std::min(*w1, *w2);
        else if (w1) out.d_ea = w1;
        else if (w2) out.d_ea = w2;
        else out.d_case += " (both set differences empty)";
    }
    return out;
}

} // namespace hermfold
