#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hermfold/curve.hpp"
#include "hermfold/folding.hpp"
#include "hermfold/linear_code.hpp"
#include "hermfold/matrix.hpp"

using namespace hermfold;

namespace {

// Rebuild the chain partition from first principles: walk each sigma-cycle
// from its least point index and cut it into runs of m.
std::vector<std::vector<int>> chain_oracle(const HermitianAutomorphism& sigma,
                                           long long m) {
    const HermitianCurve& c = *sigma.curve();
    long long n = c.num_points();
    std::vector<bool> visited((std::size_t)n, false);
    std::vector<std::vector<int>> chains;
    for (long long start = 0; start < n; ++start) {
        if (visited[(std::size_t)start]) continue;
        std::vector<int> orbit;
        int idx = (int)start;
        do {
            visited[(std::size_t)idx] = true;
            orbit.push_back(idx);
            idx = c.point_index(sigma.apply(c.points()[(std::size_t)idx]));
        } while (idx != (int)start);
        for (std::size_t off = 0; off < orbit.size(); off += (std::size_t)m)
            chains.emplace_back(orbit.begin() + (std::ptrdiff_t)off,
                                orbit.begin() + (std::ptrdiff_t)(off + (std::size_t)m));
    }
    return chains;
}

} // namespace

TEST_CASE("automorphism orders and the constraint guard") {
    CurvePtr c2 = curve_create(2);
    HermitianAutomorphism s01(c2, 0, 1);
    CHECK(s01.order() == 2);
    CHECK_FALSE(s01.is_identity());
    HermitianAutomorphism s12(c2, 1, 2);
    CHECK(s12.order() == 4);
    HermitianAutomorphism id(c2, 0, 0);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);

    CurvePtr c3 = curve_create(3);
    // With delta = 0 the order is the characteristic.
    bool found = false;
    for (std::uint32_t mu = 1; mu < 9 && !found; ++mu) {
        const Field& f = *c3->field();
        if (f.trace_to((std::uint16_t)mu, 3) == 0) {
            CHECK(HermitianAutomorphism(c3, 0, (std::uint16_t)mu).order() == 3);
            found = true;
        }
    }
    CHECK(found);

    // mu^q + mu must equal delta^(q+1).
    CHECK_THROWS_WITH_AS((void)HermitianAutomorphism(c2, 1, 0),
                         "automorphism: mu^q + mu != delta^(q+1)",
                         std::invalid_argument);

    // Applying sigma stays on the curve and acts freely when not identity.
    for (const auto& pt : c2->points()) {
        CHECK(c2->on_curve(s12.apply(pt)));
        CHECK(!(s12.apply(pt) == pt));
    }
}

TEST_CASE("default automorphism picks the smallest admissible parameters") {
    CurvePtr c2 = curve_create(2);
    HermitianAutomorphism a = default_automorphism(c2, 2);
    CHECK(a.delta() == 0);
    CHECK(a.mu() == 1);
    HermitianAutomorphism b = default_automorphism(c2, 4);
    CHECK(b.delta() == 1);
    CHECK(b.mu() == 2);
    CHECK(b.order() == 4);
    HermitianAutomorphism one = default_automorphism(c2, 1);
    CHECK(one.is_identity());

    CHECK_THROWS_WITH_AS((void)default_automorphism(c2, 3),
                         "folding: m does not divide q^3", std::invalid_argument);
    // Every sigma_{delta,mu} over q = 2 has order dividing 4.
    CHECK_THROWS_WITH_AS(
        (void)default_automorphism(c2, 8),
        "folding: no automorphism sigma_{delta,mu} has order divisible by m",
        std::invalid_argument);
}

TEST_CASE("orbit chains cut cycles from their least index") {
    CurvePtr c2 = curve_create(2);
    for (auto [delta, mu, m] : {std::array<int, 3>{0, 1, 2},
                                std::array<int, 3>{1, 2, 2},
                                std::array<int, 3>{1, 2, 4}}) {
        HermitianAutomorphism sigma(c2, (std::uint16_t)delta, (std::uint16_t)mu);
        FoldChains fc = FoldChains::orbit_chains(sigma, m);
        CHECK(fc.m() == m);
        CHECK(fc.count() == 8 / m);
        CHECK(fc.n() == 8);
        CHECK(fc.chains() == chain_oracle(sigma, m));

        // Links follow sigma, and the flattened order is a permutation.
        for (const auto& chain : fc.chains())
            for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
                CurvePoint img = sigma.apply(c2->points()[(std::size_t)chain[t]]);
                CHECK(c2->point_index(img) == chain[t + 1]);
            }
        std::vector<int> flat = fc.flattened();
        std::set<int> distinct(flat.begin(), flat.end());
        CHECK(distinct.size() == 8);

        // Each orbit's least element opens a chain.
        std::set<int> owned;
        for (const auto& chain : fc.chains()) {
            if (owned.count(chain[0])) continue;
            int idx = chain[0];
            std::vector<int> orbit;
            do {
                orbit.push_back(idx);
                idx = c2->point_index(sigma.apply(c2->points()[(std::size_t)idx]));
            } while (idx != chain[0]);
            CHECK(*std::min_element(orbit.begin(), orbit.end()) == chain[0]);
            owned.insert(orbit.begin(), orbit.end());
        }
    }

    // sigma_{0,1} pairs the two points over each x.
    FoldChains fc = FoldChains::orbit_chains(HermitianAutomorphism(c2, 0, 1), 2);
    for (const auto& chain : fc.chains()) {
        REQUIRE(chain.size() == 2);
        CHECK(c2->points()[(std::size_t)chain[0]].x ==
              c2->points()[(std::size_t)chain[1]].x);
    }

    HermitianAutomorphism s01(c2, 0, 1);
    CHECK_THROWS_WITH_AS((void)FoldChains::orbit_chains(s01, 3),
                         "folding: m does not divide q^3", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)FoldChains::orbit_chains(s01, 4),
                         "folding: m does not divide the automorphism order",
                         std::invalid_argument);
    HermitianAutomorphism id(c2, 0, 0);
    CHECK_THROWS_WITH_AS((void)FoldChains::orbit_chains(id, 2),
                         "folding: m does not divide the automorphism order",
                         std::invalid_argument);
}

TEST_CASE("consecutive chains") {
    FoldChains fc = FoldChains::consecutive(8, 2);
    CHECK(fc.chains() ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}, {4, 5}, {6, 7}});
    std::vector<int> flat = fc.flattened();
    for (int t = 0; t < 8; ++t) CHECK(flat[(std::size_t)t] == t);
    CHECK_THROWS_WITH_AS((void)FoldChains::consecutive(8, 3),
                         "folding: m does not divide the length",
                         std::invalid_argument);
}

TEST_CASE("folding a one-point code: dimensions, distance, duality") {
    CurvePtr c2 = curve_create(2);
    FoldChains fc = FoldChains::orbit_chains(HermitianAutomorphism(c2, 0, 1), 2);

    FoldedCode f4 = FoldedCode::fold(LinearCode::evaluation_code(c2, 4), fc);
    CHECK(f4.length() == 4);
    CHECK(f4.m() == 2);
    CHECK(f4.dim() == Rational(2));
    REQUIRE(f4.designed_block_distance().has_value());
    CHECK(*f4.designed_block_distance() == 2);
    CHECK(f4.triple_string() == "[4, 2, >=2]");
    DistanceResult d4 = f4.min_block_distance();
    CHECK(d4.exact);
    CHECK(d4.value == 2);

    // Degree 4 is the self-dual point over q = 2, so the blockwise complement
    // wraps the same subspace.
    FoldedCode f4d = f4.dual();
    CHECK(f4d.unfolded() == f4.unfolded());
    CHECK(f4d.chains() == f4.chains());
    CHECK(f4.dim() + f4d.dim() == Rational(f4.length()));
    CHECK(blockwise_orthogonal(f4, f4d));
    CHECK(blockwise_orthogonal(f4, f4));

    FoldedCode f2 = FoldedCode::fold(LinearCode::evaluation_code(c2, 2), fc);
    CHECK(f2.dim() == Rational(1));
    DistanceResult d2 = f2.min_block_distance();
    CHECK(d2.exact);
    CHECK(d2.value == 3);

    FoldedCode f6 = FoldedCode::fold(LinearCode::evaluation_code(c2, 6), fc);
    CHECK_FALSE(blockwise_orthogonal(f6, f6));
    CHECK(blockwise_orthogonal(f6.dual(), f6));
    CHECK(f6.dual().unfolded() == f2.unfolded());
    CHECK(f6.dual().dual().unfolded() == f6.unfolded());
}

TEST_CASE("fold alignment and zero-dimension guards") {
    CurvePtr c2 = curve_create(2);
    FoldChains paired = FoldChains::orbit_chains(HermitianAutomorphism(c2, 0, 1), 2);
    FoldChains spread = FoldChains::orbit_chains(HermitianAutomorphism(c2, 1, 2), 2);
    FieldPtr f = c2->field();

    // A code with no point bookkeeping folds only when the chains are already
    // the identity order.
    Matrix raw(f, 2, 8);
    raw.set(0, 0, 1);
    raw.set(1, 5, 1);
    LinearCode anon(f, raw);
    CHECK_NOTHROW((void)FoldedCode::fold(anon, FoldChains::consecutive(8, 2)));
    CHECK_THROWS_WITH_AS((void)FoldedCode::fold(anon, spread),
                         "folding: coordinate order mismatch",
                         std::invalid_argument);

    CHECK_THROWS_WITH_AS(
        (void)FoldedCode::fold(LinearCode::evaluation_code(c2, 4),
                               FoldChains::consecutive(4, 2)),
        "folding: chains do not cover the code length", std::invalid_argument);

    FoldedCode zero(LinearCode(f, Matrix(f, 0, 8)), paired);
    CHECK_THROWS_WITH_AS((void)zero.min_block_distance(),
                         "code: distance undefined for the zero code",
                         std::runtime_error);

    // Over budget with no designed bound: refuses rather than guessing.
    Matrix wide(f, 13, 26);
    for (std::size_t i = 0; i < 13; ++i) {
        wide.set(i, i, 1);
        wide.set(i, 13 + i, (std::uint16_t)(1 + (i % 3)));
    }
    FoldedCode big(LinearCode(f, wide), FoldChains::consecutive(26, 2));
    CHECK_THROWS_WITH_AS((void)big.min_block_distance(),
                         "folding: block distance enumeration over budget",
                         std::runtime_error);

    CHECK_THROWS_WITH_AS(
        (void)blockwise_orthogonal(
            FoldedCode::fold(LinearCode::evaluation_code(c2, 4), paired),
            fold_reed_solomon(2, 2, 1)),
        "folding: chain mismatch", std::invalid_argument);
}

TEST_CASE("folded weight bounds") {
    CHECK(folded_weight(std::vector<std::uint16_t>(8, 0), 2) == 0);
    CHECK(folded_weight(std::vector<std::uint16_t>(8, 1), 2) == 4);
    std::uint32_t s = 12345;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint16_t> v(12);
        for (auto& x : v) {
            s = s * 1664525u + 1013904223u;
            x = (std::uint16_t)((s >> 11) % 4);
        }
        long long w = hamming_weight(v);
        for (long long m : {1, 2, 3, 4, 6}) {
            long long fw = folded_weight(v, m);
            CHECK(fw >= (w + m - 1) / m);
            CHECK(fw <= std::min(w, (long long)(12 / m)));
            if (m == 1) CHECK(fw == w);
        }
    }
    CHECK_THROWS_WITH_AS((void)folded_weight(std::vector<std::uint16_t>(8, 0), 3),
                         "folding: m does not divide the length",
                         std::invalid_argument);
}

TEST_CASE("folded Reed-Solomon comparison point") {
    FoldedCode rs = fold_reed_solomon(4, 10, 3);
    CHECK(rs.length() == 5);
    CHECK(rs.m() == 3);
    CHECK(rs.dim() == Rational(10, 3));
    CHECK(rs.triple_string() == "[5, 10/3, >=2]");
    // 16^10 messages is over any sane budget, so the designed bound comes
    // back non-exact.
    DistanceResult d = rs.min_block_distance();
    CHECK_FALSE(d.exact);
    CHECK(d.value == 2);

    CHECK(fold_reed_solomon(4, 10, 5).triple_string() == "[3, 2, >=2]");
    FoldedCode flat = fold_reed_solomon(4, 10, 1);
    CHECK(flat.length() == 15);
    CHECK(flat.dim() == Rational(10));
    CHECK(*flat.designed_block_distance() == 6);

    // Small enough to certify: a [3, 2] MDS code has distance 2.
    FoldedCode tiny = fold_reed_solomon(2, 2, 1);
    DistanceResult td = tiny.min_block_distance();
    CHECK(td.exact);
    CHECK(td.value == 2);

    CHECK_THROWS_WITH_AS((void)fold_reed_solomon(6, 1, 1),
                         "folding: q must be a prime power", std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)fold_reed_solomon(2, 0, 1),
                         "folding: RS dimension out of range",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)fold_reed_solomon(2, 2, 2),
                         "folding: m does not divide q^2 - 1",
                         std::invalid_argument);
}
