#include "doctest.h"

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermfold/curve.hpp"
#include "hermfold/field.hpp"
#include "hermfold/linear_code.hpp"
#include "hermfold/matrix.hpp"

using namespace hermfold;

namespace {

// Exhaustive minimum-weight oracle, independent of min_distance's internal
// route selection (direct enumeration vs MacWilliams transform).
long long brute_min_weight(const LinearCode& c) {
    long long best = (long long)c.length() + 1;
    c.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        long long wt = hamming_weight(w);
        if (wt > 0 && wt < best) best = wt;
        return true;
    });
    return best;
}

std::vector<std::uint16_t> add_words(const Field& f,
                                     const std::vector<std::uint16_t>& a,
                                     const std::vector<std::uint16_t>& b) {
    std::vector<std::uint16_t> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

} // namespace

TEST_CASE("reduced generators are canonical per row space") {
    CurvePtr c = curve_create(2);
    LinearCode code = LinearCode::evaluation_code(c, 4);
    REQUIRE(code.dim() == 4);
    REQUIRE(code.length() == 8);

    // Pivot columns carry a lone 1 in reduced form.
    const Matrix& g = code.generator();
    REQUIRE(code.pivot_columns().size() == code.dim());
    for (std::size_t r = 0; r < code.dim(); ++r) {
        std::size_t pc = code.pivot_columns()[r];
        for (std::size_t rr = 0; rr < code.dim(); ++rr)
            CHECK(g.get(rr, pc) == (rr == r ? 1 : 0));
    }

    // Scrambling the generating set (row sums, scaled rows, duplicate rows)
    // must reduce back to the identical matrix, hence compare equal.
    const FieldPtr& f = code.field();
    Matrix scrambled(f, 0, code.length());
    std::vector<std::uint16_t> acc(code.length(), 0);
    for (std::size_t r = 0; r < code.dim(); ++r) {
        std::vector<std::uint16_t> row(g.row(r), g.row(r) + code.length());
        for (auto& v : row) v = f->mul(v, (std::uint16_t)(r % 3 == 1 ? 2 : 3));
        acc = add_words(*f, acc, row);
        scrambled.append_row(acc);
        scrambled.append_row(row);
    }
    LinearCode clone(f, scrambled);
    CHECK(clone == code);
    CHECK(clone.generator() == code.generator());

    // A genuinely different subspace compares unequal.
    CHECK(code != LinearCode::evaluation_code(c, 3));
}

TEST_CASE("duality: orthogonality, dimensions, double dual, degree formula") {
    for (int q : {2, 3}) {
        CurvePtr c = curve_create(q);
        long long n = (long long)q * q * q;
        for (long long r = q; r <= 2 * q + 3; ++r) {
            LinearCode code = LinearCode::evaluation_code(c, r);
            LinearCode dual = code.dual();
            CHECK(dual.dim() + code.dim() == (std::size_t)n);
            CHECK(dual.dual() == code);
            // Every pair of rows across the two generators is orthogonal.
            const FieldPtr& f = code.field();
            for (std::size_t a = 0; a < code.dim(); ++a)
                for (std::size_t b = 0; b < dual.dim(); ++b) {
                    std::uint16_t dot = 0;
                    for (std::size_t j = 0; j < code.length(); ++j)
                        dot = f->add(dot, f->mul(code.generator().get(a, j),
                                                 dual.generator().get(b, j)));
                    CHECK(dot == 0);
                }
            // The dual is again a one-point code, at the complementary degree.
            long long alpha = herm_dual_degree(q, r);
            if (alpha >= 0 && alpha < n)
                CHECK(dual == LinearCode::evaluation_code(c, alpha));
        }
    }

    // Complementary degrees for the construction sizes used elsewhere.
    CHECK(herm_dual_degree(4, 48) == 26);
    CHECK(herm_dual_degree(5, 95) == 48);
    CHECK(herm_dual_degree(7, 245) == 138);
    CHECK(herm_dual_degree(8, 416) == 150);
    CHECK(herm_dual_degree(16, 3584) == 750);
    CHECK(herm_dual_degree(2, herm_dual_degree(2, 4)) == 4);
}

TEST_CASE("min_distance agrees with brute force on every route") {
    CurvePtr c = curve_create(2);

    // k <= n - k: the direct enumeration route.
    for (long long r : {2, 3, 4}) {
        LinearCode code = LinearCode::evaluation_code(c, r);
        DistanceResult d = code.min_distance();
        CHECK(d.exact);
        CHECK(d.value == brute_min_weight(code));
        REQUIRE(code.designed_distance().has_value());
        CHECK(*code.designed_distance() == 8 - r);
        CHECK(d.value >= *code.designed_distance());
    }

    // k > n - k: the MacWilliams route (dual side is smaller), checked
    // against direct enumeration of all 4^6 codewords.
    LinearCode big = LinearCode::evaluation_code(c, 6);
    REQUIRE(big.dim() == 6);
    DistanceResult d = big.min_distance();
    CHECK(d.exact);
    CHECK(d.value == 2);
    CHECK(d.value == brute_min_weight(big));

    // Budget too small for either route: falls back to the designed bound.
    DistanceResult fallback = big.min_distance(10);
    CHECK_FALSE(fallback.exact);
    CHECK(fallback.value == 2); // n - r = 8 - 6

    // No designed bound and over budget on both sides: refuses.
    FieldPtr f = field_create(2, 2);
    Matrix raw(f, 10, 20);
    for (std::size_t i = 0; i < 10; ++i) {
        raw.set(i, i, 1);
        raw.set(i, 10 + i, (std::uint16_t)(1 + (i % 3)));
    }
    LinearCode anon(f, raw);
    CHECK_THROWS_WITH_AS(
        (void)anon.min_distance(100),
        "code: distance unavailable (enumeration over budget, no designed bound)",
        std::runtime_error);

    // The zero code has no distance.
    LinearCode zero(f, Matrix(f, 0, 8));
    CHECK_THROWS_WITH_AS((void)zero.min_distance(),
                         "code: distance undefined for the zero code",
                         std::runtime_error);
}

TEST_CASE("weight of a set difference") {
    CurvePtr c = curve_create(2);
    LinearCode a = LinearCode::evaluation_code(c, 4);
    LinearCode b = LinearCode::evaluation_code(c, 2);
    REQUIRE(a.contains(b));
    CHECK_FALSE(b.contains(a));
    CHECK(weight_of_set_difference(a, b) == 4);

    // Against the zero code the minimum over the difference is the distance.
    LinearCode zero(a.field(), Matrix(a.field(), 0, a.length()));
    CHECK(weight_of_set_difference(a, zero) ==
          (std::uint64_t)brute_min_weight(a));

    CHECK_THROWS_WITH_AS((void)weight_of_set_difference(b, a),
                         "code: set difference requires B to be a subcode of A",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS((void)weight_of_set_difference(a, b, 10),
                         "code: set difference enumeration over budget",
                         std::runtime_error);
    CHECK_THROWS_WITH_AS((void)weight_of_set_difference(a, a),
                         "code: set difference is empty",
                         std::runtime_error);
}

TEST_CASE("matrix export format") {
    CurvePtr c = curve_create(2);
    LinearCode code = LinearCode::evaluation_code(c, 4);
    std::ostringstream out;
    code.export_matrix(out);
    std::istringstream in(out.str());
    std::string header;
    REQUIRE(std::getline(in, header));
    CHECK(header == "GF 2 2 1 1 1");
    std::size_t n = 0, k = 0;
    REQUIRE((in >> n >> k));
    CHECK(n == 8);
    CHECK(k == 4);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            int v = -1;
            REQUIRE((in >> v));
            CHECK(v == code.generator().get(r, j));
        }
    int extra;
    CHECK_FALSE((in >> extra));
}

TEST_CASE("coset reduction and membership") {
    CurvePtr c = curve_create(2);
    LinearCode code = LinearCode::evaluation_code(c, 4);
    const FieldPtr& f = code.field();
    std::size_t n = code.length();

    // Codewords reduce to zero; arbitrary words reduce into the same coset.
    code.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        CHECK(code.member(w));
        CHECK(hamming_weight(code.reduce(w)) == 0);
        return true;
    });

    std::vector<std::vector<std::uint16_t>> probes;
    for (std::uint32_t seed = 1; seed <= 40; ++seed) {
        std::vector<std::uint16_t> w(n);
        std::uint32_t s = seed * 2654435761u;
        for (std::size_t j = 0; j < n; ++j) {
            s = s * 1664525u + 1013904223u;
            w[j] = (std::uint16_t)((s >> 13) & 3u);
        }
        probes.push_back(std::move(w));
    }
    for (const auto& w : probes) {
        auto rep = code.reduce(w);
        // Idempotent, zero on pivot columns, and w - rep is a codeword.
        CHECK(code.reduce(rep) == rep);
        for (std::size_t pc : code.pivot_columns()) CHECK(rep[pc] == 0);
        std::vector<std::uint16_t> diff(n);
        for (std::size_t j = 0; j < n; ++j) diff[j] = f->sub(w[j], rep[j]);
        CHECK(code.member(diff));
        CHECK(code.member(w) == (hamming_weight(rep) == 0));
        // Translating by a codeword does not move the coset representative.
        std::vector<std::uint16_t> shifted(
            code.generator().row(0), code.generator().row(0) + n);
        CHECK(code.reduce(add_words(*f, w, shifted)) == rep);
    }

    CHECK_THROWS_WITH_AS((void)code.reduce(std::vector<std::uint16_t>(3, 0)),
                         "code: word length mismatch", std::invalid_argument);
}

TEST_CASE("codeword enumeration: count, order, early stop") {
    CurvePtr c = curve_create(2);
    LinearCode code = LinearCode::evaluation_code(c, 3);
    std::set<std::vector<std::uint16_t>> seen;
    bool zero_first = false;
    bool complete = code.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        if (seen.empty()) zero_first = hamming_weight(w) == 0;
        seen.insert(w);
        return true;
    });
    CHECK(complete);
    CHECK(zero_first);
    CHECK(seen.size() == 64); // 4^3 distinct codewords
    for (const auto& w : seen) CHECK(code.member(w));

    int visited = 0;
    bool finished = code.for_each_codeword([&](const std::vector<std::uint16_t>&) {
        return ++visited < 5;
    });
    CHECK_FALSE(finished);
    CHECK(visited == 5);
}

TEST_CASE("column permutations preserve code metrics") {
    CurvePtr c = curve_create(2);
    LinearCode code = LinearCode::evaluation_code(c, 4);
    std::vector<int> perm = {3, 1, 4, 0, 5, 7, 2, 6};
    LinearCode shuffled = code.with_permuted_columns(perm);
    CHECK(shuffled.length() == code.length());
    CHECK(shuffled.dim() == code.dim());
    CHECK(shuffled.designed_distance() == code.designed_distance());
    CHECK(shuffled.min_distance().value == code.min_distance().value);

    std::vector<int> inverse(perm.size());
    for (std::size_t t = 0; t < perm.size(); ++t) inverse[(std::size_t)perm[t]] = (int)t;
    CHECK(shuffled.with_permuted_columns(inverse) == code);

    // Building the evaluation code over reordered points is the same as
    // permuting the columns of the standard one.
    std::vector<CurvePoint> pts = c->points();
    std::vector<CurvePoint> reordered;
    for (int t : perm) reordered.push_back(pts[(std::size_t)t]);
    CHECK(LinearCode::evaluation_code(c, 4, reordered) == shuffled);
    // Point bookkeeping follows the reorder.
    LinearCode direct = LinearCode::evaluation_code(c, 4, reordered);
    REQUIRE(direct.point_indices().size() == 8);
    for (std::size_t t = 0; t < 8; ++t)
        CHECK(direct.point_indices()[t] == perm[t]);

    std::vector<CurvePoint> dup(8, pts[0]);
    CHECK_THROWS_WITH_AS(
        (void)LinearCode::evaluation_code(c, 4, dup),
        "code: point_order is not a permutation of the affine points",
        std::invalid_argument);
}

TEST_CASE("constructor guards and saturating powers") {
    FieldPtr f4 = field_create(2, 2);
    FieldPtr f9 = field_create(3, 2);
    Matrix m(f4, 1, 4);
    m.set(0, 0, 1);
    CHECK_THROWS_WITH_AS((void)LinearCode(f9, m), "code: field mismatch",
                         std::invalid_argument);

    CHECK(pow_capped(2, 70, 1000) == 1000);
    CHECK(pow_capped(3, 4, 1000) == 81);
    CHECK(pow_capped(10, 0, 5) == 1);
    CHECK(pow_capped(1, 1000000, 5) == 1);
    CHECK(pow_capped(4, 12, 1ull << 24) == 1ull << 24);
}
