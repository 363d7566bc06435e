#include "hermfold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "hermfold/decode.hpp"
#include "hermfold/quantum.hpp"

namespace hermfold {

namespace {

// Wall-clock limits, in seconds, that each criterion must stay under to
// pass.  These are part of the contract, not merely advisory.
constexpr double kLimitTable = 60.0;
constexpr double kLimitTableExtended = 600.0;
constexpr double kLimitDuality = 30.0;
constexpr double kLimitExample = 1.0;
constexpr double kLimitFoldDual = 120.0;
constexpr double kLimitRiemannRoch = 5.0;
constexpr double kLimitListProfile = 10.0;
constexpr double kLimitQuantumList = 60.0;
constexpr double kLimitRateRadius = 5.0;
constexpr double kLimitEa = 10.0;

constexpr const char* kGoldenProfileFile = "list_profile_q2_r4_m2.txt";

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

// Collects expectation failures; a criterion passes when none accumulated
// and its time limit held.
struct Tally {
    long long checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    bool pass() const { return failures.empty(); }

    std::string detail(const std::string& note) const {
        if (pass()) return note;
        std::string out = note.empty() ? "" : note + "; ";
        out += std::to_string(failures.size()) + " of " +
               std::to_string(checks) + " checks failed:";
        std::size_t shown = std::min<std::size_t>(failures.size(), 4);
        for (std::size_t i = 0; i < shown; ++i) out += " [" + failures[i] + "]";
        if (failures.size() > shown) out += " ...";
        return out;
    }
};

CriterionResult finish(int id, const std::string& name, Tally& tally,
                       const Timer& timer, double limit,
                       const std::string& note) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    res.seconds = timer.elapsed();
    if (res.seconds > limit)
        tally.failures.push_back("time limit exceeded: " +
                                 std::to_string(res.seconds) + " s > " +
                                 std::to_string(limit) + " s");
    res.pass = tally.pass();
    res.detail = tally.detail(note);
    return res;
}

CriterionResult failed_with(int id, const std::string& name, const Timer& timer,
                            const std::string& why) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    res.seconds = timer.elapsed();
    res.pass = false;
    res.detail = why;
    return res;
}

// One constructed folded-CSS instance, kept for reuse by later criteria.
struct Instance {
    std::string tag;
    CssCode css;
    FqhcParams params;
};

// Pinned parameter-table expectations.  The quantum dimension is stored as
// an unreduced numerator/denominator pair exactly as quoted, and compared
// by rational value.
struct RowExpect {
    int q;
    long long m, r;
    long long folded_length;
    long long kc_num, kc_den, dc;
    long long kq_num, kq_den, dq;
    bool matrix_level;
};

constexpr RowExpect kRows[] = {
    {4, 2, 48, 32, 43, 2, 8, 11, 1, 8, true},
    {4, 4, 48, 16, 43, 4, 4, 11, 2, 4, true},
    {5, 5, 95, 25, 86, 5, 6, 47, 5, 6, true},
    {7, 7, 245, 49, 225, 7, 14, 107, 7, 14, true},
    {8, 2, 416, 256, 389, 2, 48, 133, 1, 48, true},
    {8, 4, 416, 128, 389, 4, 24, 266, 4, 24, true},
    {16, 2, 3584, 2048, 3465, 2, 256, 1417, 1, 256, false},
    {16, 4, 3584, 1024, 3465, 4, 128, 2834, 4, 128, false},
};

std::string bracket(long long n, const Rational& k, long long d) {
    return "[" + std::to_string(n) + ", " + k.str() + ", >=" + std::to_string(d) +
           "]";
}

void check_row_values(Tally& t, const std::string& tag, const RowExpect& e,
                      const Table1Row& row) {
    t.expect(row.folded_length == e.folded_length, tag + ": folded length");
    t.expect(row.classical_dim == Rational(e.kc_num, e.kc_den),
             tag + ": classical dimension");
    t.expect(row.classical_designed == e.dc, tag + ": classical distance bound");
    t.expect(row.quantum_dim == Rational(e.kq_num, e.kq_den),
             tag + ": quantum dimension");
    t.expect(row.quantum_designed == e.dq, tag + ": quantum distance bound");
    t.expect(row.classical_string() ==
                 bracket(e.folded_length, row.classical_dim, e.dc),
             tag + ": classical triple string");
}

// Criterion 1.  Reproduce the parameter table: the six small rows from
// actual evaluation matrices, the two q=16 rows from the closed formulas,
// and (under the extended budget) the q=16 evaluation-matrix rank.
CriterionResult criterion_table(std::vector<Instance>& instances, bool extended,
                                std::ostream* progress) {
    Timer timer;
    Tally t;
    std::string note;
    try {
        for (const auto& e : kRows) {
            std::string tag =
                "q=" + std::to_string(e.q) + " m=" + std::to_string(e.m);
            Table1Row row = table1(e.q, e.m);
            check_row_values(t, tag + " (formula)", e, row);
            if (!e.matrix_level) continue;

            if (progress) *progress << "  building " << tag << "\n" << std::flush;
            auto [css, params] = fqhc_construct(e.q, e.r, e.r, e.m);

            t.expect(css.length() == e.folded_length, tag + ": matrix folded length");
            t.expect(css.c1().dim() == Rational(e.kc_num, e.kc_den),
                     tag + ": matrix classical dimension");
            t.expect(css.c1().designed_block_distance() ==
                         std::optional<long long>(e.dc),
                     tag + ": matrix classical distance bound");
            t.expect(css.c1().triple_string() ==
                         bracket(e.folded_length, css.c1().dim(), e.dc),
                     tag + ": matrix classical triple");
            t.expect(css.dim() == Rational(e.kq_num, e.kq_den),
                     tag + ": matrix quantum dimension");
            t.expect(css.distance().designed_folded ==
                         std::optional<long long>(e.dq),
                     tag + ": matrix quantum distance bound");
            t.expect(css.param_string() ==
                         "[" + bracket(e.folded_length, css.dim(), e.dq) + "]",
                     tag + ": matrix quantum triple");
            t.expect(params.dim == css.dim() &&
                         params.designed_folded == e.dq &&
                         params.folded_length == e.folded_length,
                     tag + ": formula/matrix agreement");

            instances.push_back({tag, std::move(css), params});
        }
        note = "6 matrix-level and 2 formula-level rows match the pinned values";

        if (extended) {
            if (progress)
                *progress << "  extended: q=16 evaluation matrix rank\n"
                          << std::flush;
            Timer ext;
            CurvePtr curve = curve_create(16);
            auto basis = curve->monomial_basis(3584);
            Matrix eval(curve->field(), basis.size(), curve->points().size());
            for (std::size_t r = 0; r < basis.size(); ++r)
                for (std::size_t c = 0; c < curve->points().size(); ++c)
                    eval.set(r, c, curve->eval_monomial(basis[r], curve->points()[c]));
            std::size_t rank = eval.rank();
            double ext_secs = ext.elapsed();
            t.expect(rank == 3465, "q=16: evaluation matrix rank " +
                                       std::to_string(rank) + " != 3465");
            t.expect(ext_secs <= kLimitTableExtended,
                     "q=16 rank check exceeded the extended time limit");
            char buf[96];
            std::snprintf(buf, sizeof buf,
                          "; extended: rank(3465x4096 over GF(256)) = %zu in %.1f s",
                          rank, ext_secs);
            note += buf;
            // The core-rows limit applies to everything except the extended
            // rank confirmation.
            double core = timer.elapsed() - ext_secs;
            t.expect(core <= kLimitTable, "core rows exceeded the time limit");
            CriterionResult res;
            res.id = 1;
            res.name = "parameter table reproduction";
            res.seconds = timer.elapsed();
            res.pass = t.pass();
            res.detail = t.detail(note);
            return res;
        }
        note += "; extended rank check skipped";
    } catch (const std::exception& ex) {
        return failed_with(1, "parameter table reproduction", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(1, "parameter table reproduction", t, timer, kLimitTable, note);
}

// Criterion 2.  Hermitian duality sweep: wherever both r and its
// complementary degree are nondegenerate, the kernel dual of C(D, r P_inf)
// must equal C(D, (q^3+q^2-q-2-r) P_inf) as canonical matrices.
CriterionResult criterion_duality() {
    Timer timer;
    Tally t;
    long long pairs = 0;
    try {
        for (int q : {2, 3, 4}) {
            CurvePtr curve = curve_create(q);
            long long n = curve->num_points();
            long long s = n + (long long)q * q - q - 2;
            long long lo = 2LL * curve->genus() - 2;
            for (long long r = 1; r < n; ++r) {
                long long alpha = s - r;
                if (!(r > lo && alpha > lo && alpha < n)) continue;
                LinearCode dual = LinearCode::evaluation_code(curve, r).dual();
                LinearCode expected = LinearCode::evaluation_code(curve, alpha);
                t.expect(dual == expected,
                         "q=" + std::to_string(q) + " r=" + std::to_string(r));
                ++pairs;
            }
        }
        t.expect(pairs == 82, "expected 82 degree pairs, swept " +
                                  std::to_string(pairs));
    } catch (const std::exception& ex) {
        return failed_with(2, "one-point duality sweep", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(2, "one-point duality sweep", t, timer, kLimitDuality,
                  std::to_string(pairs) +
                      " degree pairs across q=2,3,4 give identical canonical matrices");
}

// Criterion 3.  The q=2 worked example end to end: construction picks
// sigma_{0,1}, the folded CSS parameters read [[4, 1, >=2]], and the exact
// set-difference distance is 2.
CriterionResult criterion_example(std::vector<Instance>& instances) {
    Timer timer;
    Tally t;
    try {
        auto [css, params] = fqhc_construct(2, 4, 6, 2);
        CurvePtr curve = css.c1().unfolded().curve();

        t.expect(params.sigma_delta == 0 && params.sigma_mu == 1,
                 "default automorphism is not sigma_{0,1}");
        t.expect(css.param_string() == "[[4, 1, >=2]]",
                 "parameter string " + css.param_string());
        t.expect(css.length() == 4 && css.dim() == Rational(1), "length/dimension");
        t.expect(css.distance().exact_unfolded == std::optional<long long>(2),
                 "exact coordinate-level distance");
        t.expect(*css.distance().exact_unfolded >= 2, "distance bound >= 2");
        t.expect(css.distance().exact_folded == std::optional<long long>(1),
                 "exact block-level distance");
        t.expect(css.distance().designed_folded == std::optional<long long>(1),
                 "designed block bound");

        auto b1 = curve->monomial_basis(4);
        std::vector<Monomial> expect1 = {{0, 0}, {1, 0}, {0, 1}, {2, 0}};
        t.expect(b1 == expect1, "basis of L(4 P_inf) is not {1, x, y, x^2}");
        auto b2 = curve->monomial_basis(2);
        std::vector<Monomial> expect2 = {{0, 0}, {1, 0}};
        t.expect(b2 == expect2, "basis of L(2 P_inf) is not {1, x}");

        // dual(C2) must be the degree-2 evaluation code, folded on the same
        // chains.
        LinearCode c2perp = LinearCode::evaluation_code(curve, 2);
        t.expect(FoldedCode::fold(c2perp, css.c1().chains()).unfolded() ==
                     css.c2_dual().unfolded(),
                 "dual(C2) != C(D, 2 P_inf)");

        // Chains pair the two points over each x.
        const auto& chains = css.c1().chains().chains();
        t.expect((long long)chains.size() == 4, "chain count");
        for (const auto& ch : chains) {
            bool ok = ch.size() == 2 &&
                      curve->points()[(std::size_t)ch[0]].x ==
                          curve->points()[(std::size_t)ch[1]].x &&
                      curve->points()[(std::size_t)ch[0]].y !=
                          curve->points()[(std::size_t)ch[1]].y;
            t.expect(ok, "chain does not pair the two points over one x");
        }

        instances.push_back({"q=2 m=2 (worked example)", std::move(css), params});
    } catch (const std::exception& ex) {
        return failed_with(3, "q=2 worked example end-to-end", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(3, "q=2 worked example end-to-end", t, timer, kLimitExample,
                  "[[4, 1, >=2]] via sigma_{0,1}; exact distance 2 "
                  "(coordinate level), 1 (block level)");
}

// Criterion 4.  On every constructed instance, folding commutes with
// duality: fold(dual(C_i)) equals the blockwise-orthogonal complement of
// fold(C_i), generator pairs are orthogonal, and dimensions add up to N.
CriterionResult criterion_fold_dual(const std::vector<Instance>& instances) {
    Timer timer;
    Tally t;
    try {
        for (const auto& inst : instances) {
            CurvePtr curve = inst.css.c1().unfolded().curve();
            const FoldChains& chains = inst.css.c1().chains();
            Rational N((long long)inst.css.length());
            struct Side {
                long long r;
                const FoldedCode* folded;
                const FoldedCode* folded_dual;
            };
            Side sides[2] = {
                {inst.params.r1, &inst.css.c1(), &inst.css.c1_dual()},
                {inst.params.r2, &inst.css.c2(), &inst.css.c2_dual()},
            };
            for (const Side& side : sides) {
                std::string tag = inst.tag + " r=" + std::to_string(side.r);
                LinearCode plain = LinearCode::evaluation_code(curve, side.r);
                FoldedCode dual_then_fold = FoldedCode::fold(plain.dual(), chains);
                t.expect(dual_then_fold.unfolded() == side.folded_dual->unfolded(),
                         tag + ": fold(dual) != dual(fold)");
                t.expect(blockwise_orthogonal(*side.folded, *side.folded_dual),
                         tag + ": generator pairs not orthogonal");
                t.expect(side.folded->dim() + side.folded_dual->dim() == N,
                         tag + ": dimensions do not sum to N");
            }
        }
        t.expect(!instances.empty(), "no instances were constructed");
    } catch (const std::exception& ex) {
        return failed_with(4, "fold-dual commutation", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(4, "fold-dual commutation", t, timer, kLimitFoldDual,
                  std::to_string(instances.size()) +
                      " instances, both constituent codes each: folded dual = "
                      "dual folded, orthogonal, dimensions sum to N");
}

// Criterion 5.  Riemann-Roch dimensions against an independent numerical
// semigroup sieve: l(r) counts pole orders <= r, equals r - g + 1 once
// r >= 2g - 1, and below that the deficit is the number of gaps <= r.
CriterionResult criterion_riemann_roch() {
    Timer timer;
    Tally t;
    long long degrees = 0;
    try {
        for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
            CurvePtr curve = curve_create(q);
            long long g = curve->genus();
            long long n = curve->num_points();
            // Independent sieve for the semigroup generated by q and q+1.
            std::vector<char> reach((std::size_t)n, 0);
            reach[0] = 1;
            for (long long v = 1; v < n; ++v)
                reach[(std::size_t)v] =
                    (v >= q && reach[(std::size_t)(v - q)]) ||
                    (v >= q + 1 && reach[(std::size_t)(v - q - 1)]);
            long long gaps_total = 0, max_gap = -1;
            std::vector<long long> prefix((std::size_t)n, 0);
            long long acc = 0;
            for (long long v = 0; v < n; ++v) {
                if (reach[(std::size_t)v]) ++acc;
                else {
                    ++gaps_total;
                    max_gap = v;
                }
                prefix[(std::size_t)v] = acc;
            }
            t.expect(gaps_total == g,
                     "q=" + std::to_string(q) + ": gap count != genus");
            t.expect(max_gap < 2 * g,
                     "q=" + std::to_string(q) + ": gap at or beyond 2g");

            for (long long r = 0; r < n; ++r) {
                long long ell = (long long)curve->monomial_basis(r).size();
                bool ok = ell == prefix[(std::size_t)r];
                if (r >= 2 * g - 1) ok = ok && ell == r - g + 1;
                else ok = ok && (r + 1) - ell == (r + 1) - prefix[(std::size_t)r];
                if (!ok)
                    t.expect(false,
                             "q=" + std::to_string(q) + " r=" + std::to_string(r));
                ++degrees;
            }
        }
    } catch (const std::exception& ex) {
        return failed_with(5, "Riemann-Roch dimension consistency", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(5, "Riemann-Roch dimension consistency", t, timer,
                  kLimitRiemannRoch,
                  std::to_string(degrees) +
                      " degrees across 10 fields agree with the semigroup sieve");
}

const Instance* find_example(const std::vector<Instance>& instances) {
    for (const auto& inst : instances)
        if (inst.params.q == 2) return &inst;
    return nullptr;
}

// Criterion 6.  Worst-case list sizes of the folded [4, 2] code over every
// received word (via coset representatives): 1 at the unique-decoding
// radius, monotone in the radius, the whole space at radius N, and equal to
// the frozen profile.
CriterionResult criterion_list_profile(const std::vector<Instance>& instances,
                                       const AcceptanceOptions& opts) {
    Timer timer;
    Tally t;
    std::string note;
    try {
        const Instance* ex = find_example(instances);
        if (!ex)
            return failed_with(6, "folded list-decodability profile", timer,
                               "worked example unavailable");
        const FoldedCode& code = ex->css.c1();
        long long N = code.length();

        std::vector<std::uint64_t> profile;
        for (long long radius = 0; radius <= N; ++radius) {
            ListDecodability ld =
                verify_list_decodable(code, radius, ListMode::Exhaustive);
            t.expect(ld.certified, "radius " + std::to_string(radius) +
                                       ": not certified exhaustive");
            profile.push_back(ld.max_list);
        }

        DistanceResult dfold = code.min_block_distance();
        t.expect(dfold.exact, "block distance not exact");
        long long unique_radius = (dfold.value - 1) / 2;
        t.expect(profile[(std::size_t)unique_radius] == 1,
                 "L != 1 at the unique-decoding radius");
        t.expect(profile[0] == 1, "L(0) != 1");
        for (std::size_t i = 1; i < profile.size(); ++i)
            t.expect(profile[i - 1] <= profile[i], "profile not monotone");
        t.expect(profile.back() == 256, "L(N) != codeword count 256");

        std::ostringstream ps;
        for (std::size_t i = 0; i < profile.size(); ++i)
            ps << (i ? " " : "") << profile[i];
        note = "L(0.." + std::to_string(N) + ") = " + ps.str() +
               "; block distance " + std::to_string(dfold.value);

        if (opts.golden_dir.empty()) {
            note += "; no golden directory given";
        } else {
            std::string path = opts.golden_dir + "/" + kGoldenProfileFile;
            if (opts.write_golden) {
                std::ofstream out(path);
                out << "# worst-case list size by block radius for the folded\n"
                       "# [4, 2] code over GF(4) (q=2, r=4, m=2), certified by\n"
                       "# exhausting all received words\n";
                for (std::size_t i = 0; i < profile.size(); ++i)
                    out << i << " " << profile[i] << "\n";
                t.expect(out.good(), "failed to write " + path);
                note += "; golden file rewritten";
            } else {
                std::ifstream in(path);
                t.expect(in.good(), "missing golden file " + path);
                std::vector<std::uint64_t> frozen(profile.size(), 0);
                std::vector<char> seen(profile.size(), 0);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    std::istringstream ls(line);
                    long long radius;
                    std::uint64_t L;
                    if (!(ls >> radius >> L) || radius < 0 ||
                        radius >= (long long)profile.size()) {
                        t.expect(false, "malformed golden line: " + line);
                        continue;
                    }
                    frozen[(std::size_t)radius] = L;
                    seen[(std::size_t)radius] = 1;
                }
                for (std::size_t i = 0; i < profile.size(); ++i) {
                    t.expect(seen[i], "golden file lacks radius " +
                                          std::to_string(i));
                    t.expect(frozen[i] == profile[i],
                             "radius " + std::to_string(i) + ": golden " +
                                 std::to_string(frozen[i]) + " != computed " +
                                 std::to_string(profile[i]));
                }
                note += "; matches the golden file";
            }
        }
    } catch (const std::exception& ex) {
        return failed_with(6, "folded list-decodability profile", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(6, "folded list-decodability profile", t, timer,
                  kLimitListProfile, note);
}

// Criterion 7.  Quantum list sizes of the q=2 folded CSS code: over every
// syndrome pair and radius in {0, 1, 2} the decoder's list stays within the
// square of the worst classical list size, the product structure is spot
// checked against the public decoder, and every planted error of block
// weight <= 1 is recovered.
CriterionResult criterion_quantum_list(const std::vector<Instance>& instances) {
    Timer timer;
    Tally t;
    std::string note;
    try {
        const Instance* ex = find_example(instances);
        if (!ex)
            return failed_with(7, "quantum list size bound", timer,
                               "worked example unavailable");
        const CssCode& css = ex->css;
        const LinearCode& h1 = css.c1_dual().unfolded();
        const LinearCode& h2 = css.c2_dual().unfolded();
        std::uint32_t Q = css.c1().unfolded().field()->order();

        std::uint64_t worst_quantum = 0, worst_square = 0;
        for (long long radius = 0; radius <= 2; ++radius) {
            std::uint64_t L1 =
                verify_list_decodable(css.c1(), radius, ListMode::Exhaustive)
                    .max_list;
            std::uint64_t L2 =
                verify_list_decodable(css.c2(), radius, ListMode::Exhaustive)
                    .max_list;
            std::uint64_t L = std::max(L1, L2);

            SyndromeClassCounts counts = all_syndrome_class_counts(css, radius);
            std::uint64_t mx = 0, mz = 0;
            for (std::uint64_t v : counts.x_class_counts) mx = std::max(mx, v);
            for (std::uint64_t v : counts.z_class_counts) mz = std::max(mz, v);
            for (std::uint64_t v : counts.x_class_counts)
                t.expect(v <= L1, "radius " + std::to_string(radius) +
                                      ": X classes exceed the classical list");
            for (std::uint64_t v : counts.z_class_counts)
                t.expect(v <= L2, "radius " + std::to_string(radius) +
                                      ": Z classes exceed the classical list");
            t.expect(mx * mz <= L * L,
                     "radius " + std::to_string(radius) + ": worst pair " +
                         std::to_string(mx * mz) + " exceeds L^2 = " +
                         std::to_string(L * L));
            worst_quantum = std::max(worst_quantum, mx * mz);
            worst_square = std::max(worst_square, L * L);

            // The sweep relies on the decoder's product structure; confirm it
            // on a deterministic sample of syndrome pairs.
            std::uint64_t nx = counts.x_class_counts.size();
            std::uint64_t nz = counts.z_class_counts.size();
            for (std::uint64_t i : {std::uint64_t(0), nx / 3, nx - 1}) {
                for (std::uint64_t j : {std::uint64_t(0), nz / 2, nz - 1}) {
                    auto list = quantum_list_decode(
                        css, syndrome_from_rank(i, h1.dim(), Q),
                        syndrome_from_rank(j, h2.dim(), Q), radius);
                    t.expect((std::uint64_t)list.size() ==
                                 counts.x_class_counts[i] *
                                     counts.z_class_counts[j],
                             "radius " + std::to_string(radius) +
                                 ": decoder size != product of class counts");
                }
            }
        }

        // Zero error at radius 0: exactly the identity class.
        {
            auto list = quantum_list_decode(
                css, std::vector<std::uint16_t>(h1.dim(), 0),
                std::vector<std::uint16_t>(h2.dim(), 0), 0);
            bool ok = list.size() == 1 &&
                      hamming_weight(list[0].x_class) == 0 &&
                      hamming_weight(list[0].z_class) == 0;
            t.expect(ok, "zero syndrome at radius 0 is not the identity class");
        }

        // Every Pauli error on one block is recovered at radius 1.
        long long m = css.m();
        std::size_t n = css.c1().unfolded().length();
        std::uint64_t combos = 1;
        for (long long i = 0; i < 2 * m; ++i) combos *= Q;
        long long planted = 1;
        for (long long b = 0; b < css.length(); ++b) {
            for (std::uint64_t cde = 1; cde < combos; ++cde) {
                std::vector<std::uint16_t> ex_(n, 0), ez_(n, 0);
                std::uint64_t rem = cde;
                for (long long i = 0; i < m; ++i) {
                    ex_[(std::size_t)(b * m + i)] = (std::uint16_t)(rem % Q);
                    rem /= Q;
                }
                for (long long i = 0; i < m; ++i) {
                    ez_[(std::size_t)(b * m + i)] = (std::uint16_t)(rem % Q);
                    rem /= Q;
                }
                auto list = quantum_list_decode(
                    css, h1.generator().mul_vector(ex_),
                    h2.generator().mul_vector(ez_), 1);
                auto xkey = h2.reduce(ex_);
                auto zkey = h1.reduce(ez_);
                bool found = false;
                for (const auto& cand : list)
                    if (cand.x_class == xkey && cand.z_class == zkey) {
                        found = true;
                        break;
                    }
                t.expect(found, "weight-1 error not recovered (block " +
                                    std::to_string(b) + ", pattern " +
                                    std::to_string(cde) + ")");
                ++planted;
            }
        }

        note = "radii 0..2: worst quantum list " + std::to_string(worst_quantum) +
               " <= L^2 = " + std::to_string(worst_square) + "; " +
               std::to_string(planted) + " planted errors recovered";
    } catch (const std::exception& ex) {
        return failed_with(7, "quantum list size bound", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(7, "quantum list size bound", t, timer, kLimitQuantumList,
                  note);
}

// Criterion 8.  Rate/radius bookkeeping: the balanced split reproduces
// tau = (1 - R)/2 - eps exactly, and over every admissible split with
// denominator <= 64 the balanced point is the unique maximizer.
CriterionResult criterion_rate_radius() {
    Timer timer;
    Tally t;
    long long grid_points = 0;
    try {
        const Rational eps(1, 100);
        const Rational one(1);
        const Rational targets[] = {
            Rational(0),        Rational(11, 32),   Rational(47, 125),
            Rational(107, 343), Rational(133, 256), Rational(1417, 2048),
        };
        // All reduced fractions in [0, 1] with denominator <= 64.
        std::vector<Rational> grid;
        for (long long b = 1; b <= 64; ++b)
            for (long long a = 0; a <= b; ++a)
                if (std::gcd(a, b) == 1) grid.push_back(Rational(a, b));

        for (const Rational& R : targets) {
            Rational balanced = (one + R) / Rational(2);
            RateRadius base = fqhc_rate_radius(balanced, balanced, eps);
            t.expect(base.quantum_rate == R, "R=" + R.str() + ": rate identity");
            t.expect(base.tau == (one - R) / Rational(2) - eps,
                     "R=" + R.str() + ": balanced radius formula");
            t.expect(base.tau == base.balanced_tau,
                     "R=" + R.str() + ": balanced point not fixed");

            for (const Rational& r1 : grid) {
                Rational r2 = one + R - r1;
                if (r2 < Rational(0) || r2 > one) continue;
                RateRadius rr = fqhc_rate_radius(r1, r2, eps);
                t.expect(rr.quantum_rate == R, "R=" + R.str() + " R1=" + r1.str() +
                                                   ": rate sum drifted");
                bool ok = r1 == balanced ? rr.tau == base.tau : rr.tau < base.tau;
                t.expect(ok, "R=" + R.str() + " R1=" + r1.str() +
                                 ": split not dominated by the balanced choice");
                ++grid_points;
            }
        }
    } catch (const std::exception& ex) {
        return failed_with(8, "rate-radius tradeoff", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(8, "rate-radius tradeoff", t, timer, kLimitRateRadius,
                  "6 rate targets, " + std::to_string(grid_points) +
                      " grid splits: balanced choice uniquely maximal");
}

// Criterion 9.  Entanglement-assisted parameters: the three worked examples
// recomputed from matrices, plus the distance-bound case split exercised on
// both branches with the bound cross-checked by direct enumeration.
CriterionResult criterion_ea() {
    Timer timer;
    Tally t;
    try {
        CurvePtr curve = curve_create(2);
        HermitianAutomorphism sigma(curve, 0, 1);
        FoldChains chains = FoldChains::orbit_chains(sigma, 2);
        auto folded = [&](long long r) {
            return FoldedCode::fold(LinearCode::evaluation_code(curve, r), chains);
        };

        // Independent oracle: minimum block weight over A \ B by direct
        // enumeration (B = nullptr compares against the zero code).
        auto oracle = [&](const LinearCode& a, const LinearCode* b) {
            long long best = 1LL << 40;
            a.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
                if (hamming_weight(w) == 0) return true;
                if (b && b->member(w)) return true;
                best = std::min(best, folded_weight(w, 2));
                return true;
            });
            return best;
        };

        FoldedCode f2 = folded(2);
        EaParams ea1 = ea_params(f2, f2);
        t.expect(ea1.c == Rational(0) && ea1.k_ea == Rational(2),
                 "C(2)/C(2): expected c=0, k=2, got c=" + ea1.c.str() +
                     ", k=" + ea1.k_ea.str());
        t.expect(ea1.folded_length == 4, "C(2)/C(2): folded length");

        // Full space: its dual is trivial, so every dimension of C1 costs an
        // ebit and nothing is left for logical qudits.
        Matrix id(curve->field(), 8, 8);
        for (std::size_t i = 0; i < 8; ++i) id.set(i, i, 1);
        FoldedCode ffull(LinearCode(curve->field(), std::move(id)), chains);
        EaParams ea2 = ea_params(ffull, ffull);
        t.expect(ea2.c == Rational(4) && ea2.k_ea == Rational(0),
                 "full/full: expected c=4, k=0, got c=" + ea2.c.str() +
                     ", k=" + ea2.k_ea.str());

        FoldedCode f3 = folded(3);
        EaParams ea3 = ea_params(f3, f3);
        t.expect(ea3.c == Rational(0) && ea3.k_ea == Rational(1),
                 "C(3)/C(3): expected c=0, k=1, got c=" + ea3.c.str() +
                     ", k=" + ea3.k_ea.str());
        t.expect(ea3.dim1 == Rational(3, 2) && ea3.dim2 == Rational(3, 2),
                 "C(3)/C(3): constituent dimensions");

        // Branch with dual(C1) inside C2 (the worked-example pair): bound is
        // the smaller of the two dual block weights.
        FoldedCode f4 = folded(4), f6 = folded(6);
        EaParams ea_in = ea_params(f4, f6);
        t.expect(ea_in.dual_contained, "C(4)/C(6): containment branch not taken");
        long long w_in = std::min(
            oracle(f4.dual().unfolded(), nullptr),
            oracle(f6.dual().unfolded(), nullptr));
        t.expect(ea_in.d_ea == std::optional<long long>(w_in),
                 "C(4)/C(6): bound disagrees with enumeration");
        t.expect(ea_in.d_ea == std::optional<long long>(2),
                 "C(4)/C(6): expected bound 2");

        // Branch without containment: set-difference weights on both sides.
        t.expect(!ea1.dual_contained, "C(2)/C(2): containment branch taken");
        LinearCode c2dual = f2.dual().unfolded();
        long long w_out = oracle(c2dual, &f2.unfolded());
        t.expect(ea1.d_ea == std::optional<long long>(w_out),
                 "C(2)/C(2): bound disagrees with enumeration");
        t.expect(ea1.d_ea == std::optional<long long>(1),
                 "C(2)/C(2): expected bound 1");
    } catch (const std::exception& ex) {
        return failed_with(9, "entanglement-assisted parameters", timer,
                           std::string("exception: ") + ex.what());
    }
    return finish(9, "entanglement-assisted parameters", t, timer, kLimitEa,
                  "three worked parameter sets and both distance branches "
                  "match direct enumeration");
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
    std::vector<CriterionResult> results;
    std::vector<Instance> instances;
    auto step = [&](const char* label) {
        if (opts.progress) *opts.progress << label << "\n" << std::flush;
    };

    step("criterion 1: parameter table reproduction");
    results.push_back(
        criterion_table(instances, opts.include_extended, opts.progress));
    step("criterion 2: one-point duality sweep");
    results.push_back(criterion_duality());
    step("criterion 3: q=2 worked example end-to-end");
    results.push_back(criterion_example(instances));
    step("criterion 4: fold-dual commutation");
    results.push_back(criterion_fold_dual(instances));
    step("criterion 5: Riemann-Roch dimension consistency");
    results.push_back(criterion_riemann_roch());
    step("criterion 6: folded list-decodability profile");
    results.push_back(criterion_list_profile(instances, opts));
    step("criterion 7: quantum list size bound");
    results.push_back(criterion_quantum_list(instances));
    step("criterion 8: rate-radius tradeoff");
    results.push_back(criterion_rate_radius());
    step("criterion 9: entanglement-assisted parameters");
    results.push_back(criterion_ea());
    return results;
}

bool report_acceptance(const std::vector<CriterionResult>& results,
                       std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        char head[64];
        std::snprintf(head, sizeof head, "%s  criterion %d: ",
                      r.pass ? "PASS" : "FAIL", r.id);
        char tail[32];
        std::snprintf(tail, sizeof tail, " [%.1f s]", r.seconds);
        out << head << r.name << tail;
        if (!r.detail.empty()) out << " -- " << r.detail;
        out << "\n";
        all = all && r.pass;
    }
    out << (all ? "acceptance: all criteria passed"
                : "acceptance: FAILURES present")
        << "\n";
    return all;
}

} // namespace hermfold
