#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hermfold/folding.hpp"
#include "hermfold/linear_code.hpp"
#include "hermfold/rational.hpp"

namespace hermfold {

// The distance figures attached to a (folded) CSS code.  Three quantities
// coexist:
//  - designed_folded: ceil(min{n-r1, n-r2} / m), from the designed distances
//    of the two classical codes;
//  - exact_unfolded: exact minimum Hamming weight over both CSS set
//    differences, in unfolded coordinates (matches the usual statement of
//    CSS distance before folding);
//  - exact_folded: the same minimum measured in folded block weight, which
//    is what a block-error channel sees.
// Folding can merge the support of a minimum-weight coset leader into fewer
// blocks, so exact_folded may be smaller than both other figures; parameter
// strings quote exact_unfolded when available and the designed bound
// otherwise, and all three are reported separately by the CLI.
struct CssDistance {
    std::optional<long long> designed_folded;
    std::optional<long long> exact_unfolded;
    std::optional<long long> exact_folded;

    std::optional<long long> reported() const {
        if (exact_unfolded) return exact_unfolded;
        return designed_folded;
    }
    std::string reported_label() const {
        if (exact_unfolded) return "exact set-difference weight (unfolded coordinates)";
        if (designed_folded) return "designed bound ceil(min{d1,d2}/m)";
        return "unavailable";
    }
};

// CSS code built from folded codes C1, C2 over the same chains with
// dual(C2) contained in C1.  Folded length N = n/m, dimension
// (k1 + k2 - n)/m, rate (k1 + k2 - n)/n.
class CssCode {
public:
    CssCode(FoldedCode c1, FoldedCode c2, std::uint64_t budget = kDefaultBudget);

    const FoldedCode& c1() const { return c1_; }
    const FoldedCode& c2() const { return c2_; }
    const FoldedCode& c1_dual() const { return c1_dual_; }
    const FoldedCode& c2_dual() const { return c2_dual_; }

    long long m() const { return c1_.m(); }
    long long length() const { return c1_.length(); }          // N, folded
    long long unfolded_length() const { return (long long)c1_.unfolded().length(); }
    Rational dim() const { return dim_; }
    Rational rate() const { return rate_; }
    const CssDistance& distance() const { return dist_; }

    // "[[N, k, >=d]]".
    std::string param_string() const;

private:
    FoldedCode c1_;
    FoldedCode c2_;
    FoldedCode c1_dual_;
    FoldedCode c2_dual_;
    Rational dim_;
    Rational rate_;
    CssDistance dist_;
};

CssCode css_params(const FoldedCode& c1, const FoldedCode& c2,
                   std::uint64_t budget = kDefaultBudget);
// Unfolded CSS (m = 1).
CssCode css_params(const LinearCode& c1, const LinearCode& c2,
                   std::uint64_t budget = kDefaultBudget);

// Formula-level parameters of the folded quantum Hermitian construction.
struct FqhcParams {
    int q = 0;
    long long r1 = 0, r2 = 0, m = 1;
    long long alpha = 0;            // dual degree of r2
    long long n = 0;                // q^3
    long long folded_length = 0;    // q^3 / m
    Rational dim;                   // (l(r1) - l(alpha)) / m
    long long designed_folded = 0;  // ceil(min{n-r1, n-r2} / m)
    std::uint16_t sigma_delta = 0;  // automorphism actually used
    std::uint16_t sigma_mu = 0;
};

// Builds the folded quantum Hermitian code: C1 = C(D, r1 P_inf),
// C2 = C(D, r2 P_inf), folded along the orbit chains of sigma (the default
// automorphism for m when none is given).  Verifies the containment
// dual(C2) in C1 and the fold/dual commutation on actual matrices, and
// cross-checks the matrix-level dimension against the degree formula.
std::pair<CssCode, FqhcParams> fqhc_construct(
    int q, long long r1, long long r2, long long m,
    const std::optional<HermitianAutomorphism>& sigma = std::nullopt,
    std::uint64_t budget = kDefaultBudget);

// Rate/list-decoding-radius bookkeeping: classical folded codes of rates
// R1, R2 are list-decodable to 1 - R_i - eps, so the quantum decoder is
// guaranteed tau = min{1 - R1, 1 - R2} - eps.  For a fixed quantum rate
// R = R1 + R2 - 1 the optimum is the balanced split R1 = R2 = (1 + R)/2,
// giving tau = (1 - R)/2 - eps.
struct RateRadius {
    Rational r1, r2, eps;
    Rational quantum_rate;  // R1 + R2 - 1
    Rational tau;           // min{1 - R1, 1 - R2} - eps
    bool guaranteed;        // tau > 0
    Rational balanced_rate; // (1 + quantum_rate)/2
    Rational balanced_tau;  // (1 - quantum_rate)/2 - eps
};

RateRadius fqhc_rate_radius(const Rational& r1, const Rational& r2,
                            const Rational& eps);

// One row of the parameter table: classical folded code and quantum code
// parameters derived from the closed formulas (no matrices involved).
struct Table1Row {
    int q = 0;
    long long m = 1;
    long long r = 0;
    long long folded_length = 0;
    Rational classical_dim;
    long long classical_designed = 0;
    Rational quantum_dim;
    long long quantum_designed = 0;

    std::string classical_string() const;
    std::string quantum_string() const;
    // "q m N kc_num kc_den dc N kq_num kq_den dq"
    std::string record() const;
};

Table1Row table1(int q, long long m);
std::vector<Table1Row> table1_all();

// Entanglement-assisted parameters for an arbitrary folded pair over the
// same chains (no containment requirement).  c counts ebits.  d_ea is the
// relevant branch of the weight bound, computed by enumeration when the
// duals fit the budget; it is unset when every weight in the branch ranges
// over an empty set (trivial duals).
struct EaParams {
    long long folded_length = 0;
    long long m = 1;
    Rational dim1, dim2;
    Rational c;
    Rational k_ea;
    bool dual_contained = false; // dual(C1) contained in C2
    std::optional<long long> d_ea;
    std::string d_case;
};

EaParams ea_params(const FoldedCode& c1, const FoldedCode& c2,
                   std::uint64_t budget = kDefaultBudget);

} // namespace hermfold
