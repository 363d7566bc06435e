#include "doctest.h"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermfold/curve.hpp"
#include "hermfold/folding.hpp"
#include "hermfold/linear_code.hpp"
#include "hermfold/matrix.hpp"
#include "hermfold/quantum.hpp"
#include "hermfold/rational.hpp"

using namespace hermfold;

namespace {

// Recompute every EA quantity from first principles: ranks for the
// intersection, exhaustive block-weight scans for the distance branch.
struct EaOracle {
    Rational c, k_ea;
    bool dual_contained = false;
    std::optional<long long> d_ea;
};

EaOracle ea_oracle(const FoldedCode& a, const FoldedCode& b) {
    const LinearCode& c1 = a.unfolded();
    const LinearCode& c2 = b.unfolded();
    long long n = (long long)c1.length(), m = a.m();
    long long k1 = (long long)c1.dim(), k2 = (long long)c2.dim();
    LinearCode c1d = c1.dual(), c2d = c2.dual();

    Matrix stacked = c1.generator().vstack(c2d.generator());
    long long inter = k1 + (long long)c2d.dim() - (long long)stacked.rank();

    EaOracle out;
    out.c = Rational(k1 - inter, m);
    out.k_ea = Rational(n - k1 - k2, m) + out.c;
    out.dual_contained = c2.contains(c1d);

    auto min_block = [m](const LinearCode& code,
                         const LinearCode* excluded) -> std::optional<long long> {
        long long best = -1;
        code.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
            if (hamming_weight(w) == 0) return true;
            if (excluded && excluded->member(w)) return true;
            long long fw = folded_weight(w, m);
            if (best < 0 || fw < best) best = fw;
            return true;
        });
        if (best < 0) return std::nullopt;
        return best;
    };
    std::optional<long long> w1, w2;
    if (out.dual_contained) {
        w1 = min_block(c1d, nullptr);
        w2 = min_block(c2d, nullptr);
    } else {
        w1 = min_block(c1d, &c2);
        w2 = min_block(c2d, &c1);
    }
    if (w1 && w2) out.d_ea = std::min(*w1, *w2);
    else if (w1) out.d_ea = w1;
    else out.d_ea = w2;
    return out;
}

} // namespace

TEST_CASE("parameter table rows match frozen records and the closed formulas") {
    const char* expected[] = {
        "4 2 32 43 2 8 32 11 1 8",      "4 4 16 43 4 4 16 11 2 4",
        "5 5 25 86 5 6 25 47 5 6",      "7 7 49 225 7 14 49 107 7 14",
        "8 2 256 389 2 48 256 133 1 48", "8 4 128 389 4 24 128 133 2 24",
        "16 2 2048 3465 2 256 2048 1417 1 256",
        "16 4 1024 3465 4 128 1024 1417 2 128"};
    auto rows = table1_all();
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].record() == expected[i]);
        CHECK(table1(rows[i].q, rows[i].m).record() == expected[i]);

        // Independent re-derivation from (q, m, r): the row's degree r is
        // recoverable from the classical dimension l(r) = r - g + 1.
        const Table1Row& row = rows[i];
        long long q = row.q, g = q * (q - 1) / 2, n = q * q * q;
        Rational ell = row.classical_dim * Rational(row.m);
        REQUIRE(ell.is_integer());
        long long r = ell.as_integer() + g - 1;
        CHECK(row.r == r);
        CHECK(row.folded_length == n / row.m);
        CHECK(row.classical_dim == Rational(r - g + 1, row.m));
        CHECK(row.classical_designed == (n - r + row.m - 1) / row.m);
        CHECK(row.quantum_dim == Rational(2 * (r - g + 1) - n, row.m));
        CHECK(row.quantum_designed == row.classical_designed);
    }

    // Dimensions compare by value, so unreduced fractions are fine.
    CHECK(table1(8, 4).quantum_dim == Rational(266, 4));
    CHECK(table1(16, 4).quantum_dim == Rational(2834, 4));
    CHECK(table1(4, 2).classical_string() == "[32, 43/2, >=8]");
    CHECK(table1(8, 2).quantum_string() == "[[256, 133, >=48]]");
    CHECK(table1(16, 4).quantum_string() == "[[1024, 1417/2, >=128]]");

    CHECK_THROWS_WITH_AS((void)table1(3, 2), "table1: unknown row",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)table1(4, 8), "table1: unknown row",
                         std::invalid_argument);
}

TEST_CASE("unfolded CSS parameters with exact set-difference distance") {
    CurvePtr curve = curve_create(2);
    LinearCode c4 = LinearCode::evaluation_code(curve, 4);
    LinearCode c6 = LinearCode::evaluation_code(curve, 6);

    CssCode css = css_params(c4, c6);
    CHECK(css.length() == 8);
    CHECK(css.m() == 1);
    CHECK(css.dim() == Rational(2));
    CHECK(css.rate() == Rational(1, 4));
    CHECK(css.rate() == css.dim() / Rational(css.length()));
    CHECK(css.param_string() == "[[8, 2, >=2]]");
    REQUIRE(css.distance().exact_unfolded.has_value());
    CHECK(*css.distance().exact_unfolded == 2);
    CHECK(*css.distance().exact_folded == 2); // m = 1: same metric
    CHECK(*css.distance().designed_folded == 2);
    CHECK(css.distance().reported_label() ==
          "exact set-difference weight (unfolded coordinates)");

    // Exhaustive oracle for the set-difference minimum.
    LinearCode c4d = c4.dual(), c6d = c6.dual();
    long long best = 99;
    auto scan = [&](const LinearCode& a, const LinearCode& excluded) {
        a.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
            long long wt = hamming_weight(w);
            if (wt > 0 && wt < best && !excluded.member(w)) best = wt;
            return true;
        });
    };
    scan(c4, c6d);
    scan(c6, c4d);
    CHECK(best == *css.distance().exact_unfolded);

    // Zero-dimension boundary: C(4) is self-dual, so the pair (C(4), C(4))
    // is a valid CSS code with no logical qudits and only a designed bound.
    CssCode boundary = css_params(c4, c4);
    CHECK(boundary.dim() == Rational(0));
    CHECK_FALSE(boundary.distance().exact_unfolded.has_value());
    CHECK(*boundary.distance().designed_folded == 4);
    CHECK(boundary.param_string() == "[[8, 0, >=4]]");
    CHECK(boundary.distance().reported_label() ==
          "designed bound ceil(min{d1,d2}/m)");

    LinearCode c2 = LinearCode::evaluation_code(curve, 2);
    CHECK_THROWS_WITH_AS(
        (void)css_params(c2, c2),
        "css: containment violated: dual(C2) is not contained in C1",
        std::invalid_argument);
}

TEST_CASE("folded construction: parameters, automorphism choice, guards") {
    auto [css, params] = fqhc_construct(2, 4, 6, 2);
    CHECK(css.param_string() == "[[4, 1, >=2]]");
    CHECK(css.length() == 4);
    CHECK(css.unfolded_length() == 8);
    CHECK(css.dim() == Rational(1));
    CHECK(css.rate() == Rational(1, 4));
    REQUIRE(css.distance().designed_folded.has_value());
    CHECK(*css.distance().designed_folded == 1);
    CHECK(*css.distance().exact_unfolded == 2);
    CHECK(*css.distance().exact_folded == 1);
    CHECK(css.distance().reported() == 2);

    CHECK(params.q == 2);
    CHECK(params.alpha == 2);
    CHECK(params.n == 8);
    CHECK(params.folded_length == 4);
    CHECK(params.dim == Rational(1));
    CHECK(params.designed_folded == 1);
    CHECK(params.sigma_delta == 0);
    CHECK(params.sigma_mu == 1);

    // A different folding automorphism leaves every quoted parameter alone.
    CurvePtr curve = curve_create(2);
    HermitianAutomorphism alt(curve, 1, 2);
    auto [css2, params2] = fqhc_construct(2, 4, 6, 2, alt);
    CHECK(params2.sigma_delta == 1);
    CHECK(params2.sigma_mu == 2);
    CHECK(css2.param_string() == css.param_string());
    CHECK(css2.dim() == css.dim());
    CHECK(*css2.distance().exact_unfolded == 2);

    CHECK_THROWS_WITH_AS(
        (void)fqhc_construct(2, 2, 2, 2),
        "fqhc: containment precondition violated: herm_dual_degree(q, r2) > r1",
        std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)fqhc_construct(3, 16, 16, 3, alt),
                         "fqhc: automorphism belongs to a different curve",
                         std::invalid_argument);

    // Chain mismatch guard on the CSS constructor itself.
    FoldChains paired = FoldChains::orbit_chains(HermitianAutomorphism(curve, 0, 1), 2);
    FoldChains spread = FoldChains::orbit_chains(alt, 2);
    FoldedCode f1 = FoldedCode::fold(LinearCode::evaluation_code(curve, 4), paired);
    FoldedCode f2 = FoldedCode::fold(LinearCode::evaluation_code(curve, 6), spread);
    CHECK_THROWS_WITH_AS((void)css_params(f1, f2), "css: chain mismatch",
                         std::invalid_argument);
}

TEST_CASE("list-decoding rate and radius bookkeeping") {
    Rational eps(1, 100);
    RateRadius rr = fqhc_rate_radius(Rational(43, 64), Rational(43, 64), eps);
    CHECK(rr.quantum_rate == Rational(11, 32));
    CHECK(rr.tau == Rational(21, 64) - eps);
    CHECK(rr.guaranteed);
    CHECK(rr.balanced_rate == Rational(43, 64));
    CHECK(rr.balanced_tau == rr.tau);

    // Any unbalanced split of the same quantum rate does strictly worse.
    RateRadius skew = fqhc_rate_radius(Rational(30, 64), Rational(56, 64), eps);
    CHECK(skew.quantum_rate == rr.quantum_rate);
    CHECK(skew.tau == Rational(8, 64) - eps);
    CHECK(skew.tau < skew.balanced_tau);
    CHECK(skew.balanced_tau == rr.balanced_tau);

    RateRadius zero_eps = fqhc_rate_radius(Rational(1, 2), Rational(1, 2), Rational(0));
    CHECK(zero_eps.quantum_rate == Rational(0));
    CHECK(zero_eps.tau == Rational(1, 2));
    CHECK(zero_eps.guaranteed);

    RateRadius full = fqhc_rate_radius(Rational(1), Rational(1), Rational(0));
    CHECK(full.quantum_rate == Rational(1));
    CHECK(full.tau == Rational(0));
    CHECK_FALSE(full.guaranteed);

    CHECK_THROWS_WITH_AS(
        (void)fqhc_rate_radius(Rational(-1, 2), Rational(1), Rational(0)),
        "fqhc: rates must lie in [0, 1]", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)fqhc_rate_radius(Rational(1, 4), Rational(1, 4), Rational(0)),
        "fqhc: rates must satisfy R1 + R2 >= 1", std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        (void)fqhc_rate_radius(Rational(1, 2), Rational(1, 2), Rational(-1, 10)),
        "fqhc: eps must be nonnegative", std::invalid_argument);
}

TEST_CASE("entanglement-assisted parameters against a rank oracle") {
    CurvePtr curve = curve_create(2);
    FoldChains paired = FoldChains::orbit_chains(HermitianAutomorphism(curve, 0, 1), 2);
    FoldedCode f2 = FoldedCode::fold(LinearCode::evaluation_code(curve, 2), paired);
    FoldedCode f4 = FoldedCode::fold(LinearCode::evaluation_code(curve, 4), paired);
    FoldedCode f6 = FoldedCode::fold(LinearCode::evaluation_code(curve, 6), paired);

    const FoldedCode* codes[] = {&f2, &f4, &f6};
    for (const FoldedCode* a : codes)
        for (const FoldedCode* b : codes) {
            EaParams got = ea_params(*a, *b);
            EaOracle want = ea_oracle(*a, *b);
            CHECK(got.folded_length == 4);
            CHECK(got.m == 2);
            CHECK(got.dim1 == a->dim());
            CHECK(got.dim2 == b->dim());
            CHECK(got.c == want.c);
            CHECK(got.k_ea == want.k_ea);
            CHECK(got.dual_contained == want.dual_contained);
            CHECK(got.d_ea == want.d_ea);
        }

    // Hand-checked corners: with dual(C1) inside C2 the bound reads off the
    // dual distances; otherwise it scans the set differences.
    EaParams in_branch = ea_params(f4, f6);
    CHECK(in_branch.dual_contained);
    CHECK(in_branch.c == Rational(1));
    CHECK(in_branch.k_ea == Rational(0));
    CHECK(in_branch.d_ea == 2);
    CHECK(in_branch.d_case ==
          "dual(C1) contained in C2: min{wt(dual(C1)), wt(dual(C2))}");

    EaParams out_branch = ea_params(f2, f2);
    CHECK_FALSE(out_branch.dual_contained);
    CHECK(out_branch.c == Rational(0));
    CHECK(out_branch.k_ea == Rational(2));
    CHECK(out_branch.d_ea == 1);
    CHECK(out_branch.d_case ==
          "general: min{wt(dual(C1) \\ C2), wt(dual(C2) \\ C1)}");

    EaParams thin = ea_params(f2, f4);
    CHECK(thin.c == Rational(0));
    CHECK(thin.k_ea == Rational(1));

    // Unfolded (m = 1) pair: every maximal generator is an ebit.
    FoldChains flat = FoldChains::consecutive(8, 1);
    FoldedCode u6(LinearCode::evaluation_code(curve, 6), flat);
    EaParams dense = ea_params(u6, u6);
    CHECK(dense.c == Rational(4));
    CHECK(dense.k_ea == Rational(0));

    FoldChains spread = FoldChains::orbit_chains(HermitianAutomorphism(curve, 1, 2), 2);
    FoldedCode other = FoldedCode::fold(LinearCode::evaluation_code(curve, 4), spread);
    CHECK_THROWS_WITH_AS((void)ea_params(f4, other), "ea: chain mismatch",
                         std::invalid_argument);
}

TEST_CASE("distance report preferences") {
    CssDistance d;
    CHECK_FALSE(d.reported().has_value());
    CHECK(d.reported_label() == "unavailable");
    d.designed_folded = 3;
    CHECK(d.reported() == 3);
    CHECK(d.reported_label() == "designed bound ceil(min{d1,d2}/m)");
    d.exact_unfolded = 5;
    d.exact_folded = 2;
    CHECK(d.reported() == 5);
    CHECK(d.reported_label() ==
          "exact set-difference weight (unfolded coordinates)");
}
