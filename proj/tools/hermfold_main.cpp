// Command-line front end.  One subcommand per module operation; `--format
// records` switches the stable machine-readable line formats on where they
// differ from the human output.  Usage problems exit 2, verification
// failures exit 1.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hermfold/decode.hpp"
#include "hermfold/quantum.hpp"
#include "hermfold/verify.hpp"

namespace {

using namespace hermfold;

// "a" or "a/b" as an exact rational.
Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)),
                    std::stoll(s.substr(slash + 1)));
}

void export_matrix_to(const LinearCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    code.export_matrix(out);
}

std::string distance_string(const DistanceResult& d) {
    return (d.exact ? "" : ">=") + std::to_string(d.value);
}

// sigma_{delta,mu} from flag strings; "auto" defers to the default choice
// for m, and "auto" for mu alone scans the admissible values for the given
// delta until the chains work out.
HermitianAutomorphism resolve_sigma(const CurvePtr& curve, long long m,
                                    const std::string& delta_s,
                                    const std::string& mu_s) {
    if (delta_s == "auto" && mu_s == "auto")
        return default_automorphism(curve, m);
    std::uint32_t q = (std::uint32_t)curve->q();
    if (mu_s == "auto") {
        std::uint16_t delta = (std::uint16_t)std::stoul(delta_s);
        for (std::uint16_t mu : curve->field()->solve_mu_constraint(delta, q)) {
            if (delta == 0 && mu == 0) continue;
            HermitianAutomorphism sigma(curve, delta, mu);
            if (sigma.order() % m == 0) return sigma;
        }
        throw std::invalid_argument("no admissible mu for this delta and m");
    }
    std::uint16_t delta =
        delta_s == "auto" ? 0 : (std::uint16_t)std::stoul(delta_s);
    return HermitianAutomorphism(curve, delta, (std::uint16_t)std::stoul(mu_s));
}

int run_points(int q, const std::string&) {
    CurvePtr curve = curve_create(q);
    std::cout << curve->field()->header() << "\n";
    for (const auto& pt : curve->points())
        std::cout << pt.x << " " << pt.y << "\n";
    return 0;
}

int run_code(int q, long long r, std::uint64_t budget,
             const std::string& format, const std::string& export_path) {
    CurvePtr curve = curve_create(q);
    LinearCode code = LinearCode::evaluation_code(curve, r);
    DistanceResult d = code.min_distance(budget);
    if (format == "records") {
        std::cout << q << " " << r << " " << code.length() << " " << code.dim()
                  << " " << d.value << " " << (d.exact ? 1 : 0) << "\n";
    } else {
        std::cout << "C(D, " << r << " P_inf) over GF(" << curve->field()->order()
                  << "): [" << code.length() << ", " << code.dim() << ", "
                  << distance_string(d) << "]"
                  << (d.exact ? " (distance exact)" : " (designed bound)")
                  << "\n";
    }
    if (!export_path.empty()) export_matrix_to(code, export_path);
    return 0;
}

int run_dual_check(int q, std::optional<long long> r_only,
                   const std::string& format) {
    CurvePtr curve = curve_create(q);
    long long n = curve->num_points();
    long long s = n + (long long)q * q - q - 2;
    long long lo = 2LL * curve->genus() - 2;
    if (!r_only && q > 4)
        throw std::invalid_argument(
            "full duality sweep is desk scale only for q <= 4; pass --r");

    long long failures = 0, checked = 0;
    for (long long r = 1; r < n; ++r) {
        if (r_only && r != *r_only) continue;
        long long alpha = s - r;
        if (!(r > lo && alpha > lo && alpha < n)) {
            if (r_only)
                throw std::invalid_argument(
                    "degree pair leaves the nondegenerate range");
            continue;
        }
        bool ok = LinearCode::evaluation_code(curve, r).dual() ==
                  LinearCode::evaluation_code(curve, alpha);
        ++checked;
        if (!ok) ++failures;
        if (format == "records")
            std::cout << q << " " << r << " " << alpha << " " << (ok ? 1 : 0)
                      << "\n";
        else
            std::cout << "r=" << r << " dual degree " << alpha << ": "
                      << (ok ? "ok" : "MISMATCH") << "\n";
    }
    if (format != "records")
        std::cout << checked << " degree pairs, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

int run_fold(int q, long long r, long long m, const std::string& delta_s,
             const std::string& mu_s, const std::string& format,
             const std::string& export_path) {
    CurvePtr curve = curve_create(q);
    HermitianAutomorphism sigma = resolve_sigma(curve, m, delta_s, mu_s);
    FoldChains chains = FoldChains::orbit_chains(sigma, m);
    FoldedCode folded =
        FoldedCode::fold(LinearCode::evaluation_code(curve, r), chains);

    if (format == "records") {
        for (const auto& ch : chains.chains()) {
            std::cout << "chain";
            for (int idx : ch) std::cout << " " << idx;
            std::cout << "\n";
        }
        std::cout << "folded " << folded.length() << " " << folded.dim().num()
                  << " " << folded.dim().den() << " "
                  << folded.designed_block_distance().value_or(-1) << "\n";
    } else {
        std::cout << "sigma: delta=" << sigma.delta() << " mu=" << sigma.mu()
                  << " (order " << sigma.order() << ")\n";
        for (const auto& ch : chains.chains()) {
            std::cout << "chain:";
            for (int idx : ch) {
                const CurvePoint& pt = curve->points()[(std::size_t)idx];
                std::cout << " (" << pt.x << "," << pt.y << ")";
            }
            std::cout << "\n";
        }
        std::cout << "folded code " << folded.triple_string() << "\n";
    }
    if (!export_path.empty()) export_matrix_to(folded.unfolded(), export_path);
    return 0;
}

int run_fqhc(int q, long long r1, long long r2, long long m,
             std::uint64_t budget, const std::string& format) {
    auto [css, params] = fqhc_construct(q, r1, r2, m, std::nullopt, budget);
    auto d = css.distance().reported();
    if (format == "records") {
        std::cout << q << " " << r1 << " " << r2 << " " << m << " "
                  << css.length() << " " << css.dim().num() << " "
                  << css.dim().den() << " " << d.value_or(-1) << " "
                  << (css.distance().exact_unfolded ? "exact" : "designed")
                  << "\n";
        return 0;
    }
    std::cout << "sigma: delta=" << params.sigma_delta
              << " mu=" << params.sigma_mu << "\n";
    std::cout << "dual degree of r2: " << params.alpha << "\n";
    std::cout << "C1 folded: " << css.c1().triple_string() << "\n";
    std::cout << "C2 folded: " << css.c2().triple_string() << "\n";
    std::cout << "quantum:   " << css.param_string() << "  (distance figure: "
              << css.distance().reported_label() << ")\n";
    if (css.distance().exact_folded)
        std::cout << "exact block-level distance: "
                  << *css.distance().exact_folded << "\n";
    return 0;
}

int run_table1(std::optional<int> q, std::optional<long long> m,
               const std::string& format) {
    std::vector<Table1Row> rows;
    if (q && m) rows.push_back(table1(*q, *m));
    else if (q || m)
        throw std::invalid_argument("give both --q and --m, or neither");
    else rows = table1_all();

    if (format == "records") {
        for (const auto& row : rows) std::cout << row.record() << "\n";
        return 0;
    }
    std::cout << "  q   m   folded code          quantum code\n";
    for (const auto& row : rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%3d %3lld   %-20s %s\n", row.q,
                      (long long)row.m, row.classical_string().c_str(),
                      row.quantum_string().c_str());
        std::cout << line;
    }
    return 0;
}

int run_ea(int q, long long r1, long long r2, long long m,
           std::uint64_t budget, const std::string& format) {
    CurvePtr curve = curve_create(q);
    HermitianAutomorphism sigma = default_automorphism(curve, m);
    FoldChains chains = FoldChains::orbit_chains(sigma, m);
    FoldedCode f1 =
        FoldedCode::fold(LinearCode::evaluation_code(curve, r1), chains);
    FoldedCode f2 =
        FoldedCode::fold(LinearCode::evaluation_code(curve, r2), chains);
    EaParams ea = ea_params(f1, f2, budget);
    if (format == "records") {
        std::cout << q << " " << r1 << " " << r2 << " " << m << " "
                  << ea.folded_length << " " << ea.c.num() << " " << ea.c.den()
                  << " " << ea.k_ea.num() << " " << ea.k_ea.den() << " "
                  << (ea.d_ea ? *ea.d_ea : -1) << "\n";
        return 0;
    }
    std::cout << "folded length " << ea.folded_length << ", dim C1 "
              << ea.dim1.str() << ", dim C2 " << ea.dim2.str() << "\n";
    std::cout << "ebits c = " << ea.c.str() << ", k_EA = " << ea.k_ea.str()
              << "\n";
    std::cout << "distance bound: "
              << (ea.d_ea ? ">=" + std::to_string(*ea.d_ea) : "unavailable")
              << "  [" << ea.d_case << "]\n";
    return 0;
}

int run_listdecode(int q, long long r, long long m,
                   std::optional<long long> radius_opt,
                   const std::string& tau_s, const std::string& mode,
                   std::uint64_t trials, std::uint64_t seed,
                   const std::string& format) {
    CurvePtr curve = curve_create(q);
    HermitianAutomorphism sigma = default_automorphism(curve, m);
    FoldChains chains = FoldChains::orbit_chains(sigma, m);
    FoldedCode folded =
        FoldedCode::fold(LinearCode::evaluation_code(curve, r), chains);

    long long radius;
    if (radius_opt && !tau_s.empty())
        throw std::invalid_argument("give --radius or --tau, not both");
    if (radius_opt) {
        radius = *radius_opt;
    } else if (!tau_s.empty()) {
        Rational tau = parse_rational(tau_s);
        // floor(tau * N), exactly.
        Rational scaled = tau * Rational(folded.length());
        radius = scaled.num() >= 0 ? scaled.num() / scaled.den()
                                   : -((-scaled.num() + scaled.den() - 1) /
                                       scaled.den());
    } else {
        throw std::invalid_argument("one of --radius or --tau is required");
    }

    ListMode lm = mode == "sampled" ? ListMode::Sampled : ListMode::Exhaustive;
    ListDecodability ld = verify_list_decodable(folded, radius, lm, trials, seed);
    if (format == "records") {
        std::cout << q << " " << r << " " << m << " " << radius << " "
                  << ld.max_list << " " << (ld.certified ? 1 : 0) << "\n";
    } else {
        std::cout << "folded code " << folded.triple_string() << ", radius "
                  << radius << ": "
                  << (ld.certified ? "worst-case list size "
                                   : "observed list size (lower bound on L) ")
                  << ld.max_list << "\n";
    }
    return 0;
}

int run_qdecode(int q, long long r1, long long r2, long long m,
                std::optional<long long> radius_opt, bool all_syndromes,
                std::optional<std::uint64_t> seed, long long weight,
                std::uint64_t trials, const std::string& format) {
    auto [css, params] = fqhc_construct(q, r1, r2, m);
    (void)params;
    if (all_syndromes == seed.has_value())
        throw std::invalid_argument("choose exactly one of --all-syndromes or --seed");

    if (all_syndromes) {
        if (!radius_opt)
            throw std::invalid_argument("--all-syndromes requires --radius");
        SyndromeClassCounts counts = all_syndrome_class_counts(css, *radius_opt);
        std::uint64_t mx = 0, mz = 0;
        for (auto v : counts.x_class_counts) mx = std::max(mx, v);
        for (auto v : counts.z_class_counts) mz = std::max(mz, v);
        if (format == "records") {
            std::cout << *radius_opt << " " << counts.x_class_counts.size()
                      << " " << counts.z_class_counts.size() << " " << mx << " "
                      << mz << " " << mx * mz << "\n";
        } else {
            std::cout << "radius " << *radius_opt << ": "
                      << counts.x_class_counts.size() << " X syndromes (worst "
                      << mx << " classes), " << counts.z_class_counts.size()
                      << " Z syndromes (worst " << mz << " classes)\n";
            std::cout << "worst quantum list size " << mx * mz << "\n";
        }
        return 0;
    }

    if (format != "records") std::cout << "seed weight listsize recovered\n";
    for (std::uint64_t tr = 0; tr < trials; ++tr) {
        std::optional<long long> radius = radius_opt;
        TrialRecord rec = pauli_channel_trial(css, weight, *seed + tr, radius);
        std::cout << rec.record() << "\n";
    }
    return 0;
}

int run_verify_all(bool skip_extended, const std::string& golden_dir,
                   bool write_golden) {
    AcceptanceOptions opts;
    opts.include_extended = !skip_extended;
    opts.golden_dir = golden_dir;
    opts.write_golden = write_golden;
    opts.progress = &std::cerr;
    auto results = run_acceptance(opts);
    return report_acceptance(results, std::cout) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"folded quantum Hermitian codes: construction and verification"};
    app.require_subcommand(1);

    int q = 2;
    long long r = 0, r1 = 0, r2 = 0, m = 1, weight = 1;
    std::optional<long long> radius_opt, r_only;
    std::optional<int> q_opt;
    std::optional<long long> m_opt;
    std::optional<std::uint64_t> seed_opt;
    std::uint64_t budget = kDefaultBudget, trials = 1;
    std::uint64_t sample_trials = 1000, sample_seed = 0;
    std::string format = "text", export_path, delta_s = "auto", mu_s = "auto";
    std::string tau_s, mode = "exhaustive", golden_dir;
    bool all_syndromes = false, skip_extended = false, write_golden = false;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "records"}));
    };

    auto* points = app.add_subcommand("points", "list the affine curve points");
    points->add_option("--q", q, "base field size q")->required();
    add_format(points);

    auto* code = app.add_subcommand("code", "one-point evaluation code");
    code->add_option("--q", q)->required();
    code->add_option("--r", r, "pole order bound")->required();
    code->add_option("--exact-distance-budget", budget);
    code->add_option("--export-matrix", export_path, "write the generator matrix");
    add_format(code);

    auto* dual = app.add_subcommand("dual-check", "dual = complementary degree");
    dual->add_option("--q", q)->required();
    dual->add_option("--r", r_only, "check a single degree");
    add_format(dual);

    auto* fold = app.add_subcommand("fold", "orbit chains and the folded code");
    fold->add_option("--q", q)->required();
    fold->add_option("--r", r)->required();
    fold->add_option("--m", m, "fold depth")->required();
    fold->add_option("--delta", delta_s, "automorphism delta (or auto)");
    fold->add_option("--mu", mu_s, "automorphism mu (or auto)");
    fold->add_option("--export-matrix", export_path);
    add_format(fold);

    auto* fqhc = app.add_subcommand("fqhc", "folded CSS code parameters");
    fqhc->add_option("--q", q)->required();
    fqhc->add_option("--r1", r1)->required();
    fqhc->add_option("--r2", r2)->required();
    fqhc->add_option("--m", m)->required();
    fqhc->add_option("--exact-distance-budget", budget);
    add_format(fqhc);

    auto* table = app.add_subcommand("table1", "parameter table rows");
    table->add_option("--q", q_opt);
    table->add_option("--m", m_opt);
    add_format(table);

    auto* ea = app.add_subcommand("ea", "entanglement-assisted parameters");
    ea->add_option("--q", q)->required();
    ea->add_option("--r1", r1)->required();
    ea->add_option("--r2", r2)->required();
    ea->add_option("--m", m)->required();
    ea->add_option("--exact-distance-budget", budget);
    add_format(ea);

    auto* ld = app.add_subcommand("listdecode", "worst-case folded list size");
    ld->add_option("--q", q)->required();
    ld->add_option("--r", r)->required();
    ld->add_option("--m", m)->required();
    ld->add_option("--radius", radius_opt, "block radius");
    ld->add_option("--tau", tau_s, "relative radius (rational), floor(tau*N)");
    ld->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}));
    ld->add_option("--trials", sample_trials, "sampled mode trials");
    ld->add_option("--seed", sample_seed, "sampled mode seed");
    add_format(ld);

    auto* qd = app.add_subcommand("qdecode", "quantum list decoding");
    qd->add_option("--q", q)->required();
    qd->add_option("--r1", r1)->required();
    qd->add_option("--r2", r2)->required();
    qd->add_option("--m", m)->required();
    qd->add_option("--radius", radius_opt);
    qd->add_flag("--all-syndromes", all_syndromes, "sweep every syndrome pair");
    qd->add_option("--seed", seed_opt, "plant-and-decode trial seed");
    qd->add_option("--weight", weight, "planted block weight");
    qd->add_option("--trials", trials, "consecutive seeds to run");
    add_format(qd);

    auto* verify = app.add_subcommand("verify-all", "full acceptance battery");
    verify->add_flag("--skip-extended", skip_extended);
    verify->add_option("--golden-dir", golden_dir);
    verify->add_flag("--write-golden", write_golden);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*points) return run_points(q, format);
        if (*code) return run_code(q, r, budget, format, export_path);
        if (*dual) return run_dual_check(q, r_only, format);
        if (*fold) return run_fold(q, r, m, delta_s, mu_s, format, export_path);
        if (*fqhc) return run_fqhc(q, r1, r2, m, budget, format);
        if (*table) return run_table1(q_opt, m_opt, format);
        if (*ea) return run_ea(q, r1, r2, m, budget, format);
        if (*ld)
            return run_listdecode(q, r, m, radius_opt, tau_s, mode,
                                  sample_trials, sample_seed, format);
        if (*qd)
            return run_qdecode(q, r1, r2, m, radius_opt, all_syndromes, seed_opt,
                               weight, trials, format);
        if (*verify) return run_verify_all(skip_extended, golden_dir, write_golden);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
