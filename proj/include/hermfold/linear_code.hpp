#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hermfold/curve.hpp"
#include "hermfold/field.hpp"
#include "hermfold/matrix.hpp"

namespace hermfold {

// Cap on how many codewords an exhaustive routine may enumerate before it
// refuses or falls back to a bound.
constexpr std::uint64_t kDefaultBudget = 1ull << 24;

struct DistanceResult {
    long long value = 0;
    bool exact = false;
};

// A linear code over GF(Q), held as a reduced-row-echelon generator matrix.
// The reduced form is canonical per row space, so two codes are equal as
// subspaces iff their generator matrices are identical.
//
// One-point evaluation codes C(D, r P_inf) on a Hermitian curve carry their
// construction data (curve, degree r, evaluation order) so that duals and
// folded variants can preserve the designed distance bookkeeping.
class LinearCode {
public:
    LinearCode(FieldPtr field, Matrix generators, std::string label = "");

    // C(D, r P_inf): rows are the monomial basis of L(r P_inf) evaluated at
    // all q^3 affine points (in curve order, or in an explicitly given
    // order).
    static LinearCode evaluation_code(const CurvePtr& curve, long long r);
    static LinearCode evaluation_code(const CurvePtr& curve, long long r,
                                      const std::vector<CurvePoint>& point_order);

    const FieldPtr& field() const { return field_; }
    std::size_t length() const { return gen_.cols(); }
    std::size_t dim() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    const std::string& label() const { return label_; }

    // n - r for evaluation codes (and their duals via the degree formula);
    // n - k + 1 for Reed-Solomon codes; otherwise unset.
    std::optional<long long> designed_distance() const { return designed_; }
    void set_designed_distance(long long d) { designed_ = d; }
    const CurvePtr& curve() const { return curve_; }
    std::optional<long long> eval_degree() const { return eval_degree_; }
    // Curve point index of each coordinate (empty for non-evaluation codes).
    const std::vector<int>& point_indices() const { return point_idx_; }

    // Dual code as the kernel of the generator matrix.  For a Hermitian
    // one-point code the dual is tagged as the evaluation code of the
    // complementary degree (verified computationally elsewhere).
    LinearCode dual() const;

    bool contains(const LinearCode& inner) const;
    bool operator==(const LinearCode& o) const;
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

    // Exact minimum distance when either the code or its dual is small
    // enough to enumerate within the budget (the dual route goes through the
    // MacWilliams identity); otherwise the designed bound with exact=false.
    DistanceResult min_distance(std::uint64_t budget = kDefaultBudget) const;

    // Canonical coset representative of word + C (zero at every pivot
    // column of the generator).
    std::vector<std::uint16_t> reduce(std::vector<std::uint16_t> word) const;
    bool member(const std::vector<std::uint16_t>& word) const;

    // Field header line, then "n k", then the k generator rows as element
    // codes.
    void export_matrix(std::ostream& out) const;

    LinearCode with_permuted_columns(const std::vector<int>& perm) const;

    // Visits all Q^k codewords (zero word first, then odometer order over
    // message digits).  fn receives the codeword and returns false to stop;
    // the function returns false iff stopped early.
    template <class F>
    bool for_each_codeword(F&& fn) const {
        const Field& f = *field_;
        std::size_t k = dim(), n = length();
        std::vector<std::uint16_t> digits(k, 0);
        std::vector<std::uint16_t> word(n, 0);
        if (!fn(static_cast<const std::vector<std::uint16_t>&>(word))) return false;
        if (k == 0) return true;
        while (true) {
            std::size_t pos = 0;
            while (pos < k) {
                std::uint16_t old = digits[pos];
                const std::uint16_t* row = gen_.row(pos);
                if (old + 1u == f.order()) {
                    digits[pos] = 0;
                    std::uint16_t delta = f.neg(old);
                    for (std::size_t j = 0; j < n; ++j)
                        word[j] = f.add(word[j], f.mul(delta, row[j]));
                    ++pos;
                } else {
                    digits[pos] = (std::uint16_t)(old + 1);
                    std::uint16_t delta = f.sub(digits[pos], old);
                    for (std::size_t j = 0; j < n; ++j)
                        word[j] = f.add(word[j], f.mul(delta, row[j]));
                    break;
                }
            }
            if (pos == k) return true; // odometer wrapped to zero
            if (!fn(static_cast<const std::vector<std::uint16_t>&>(word))) return false;
        }
    }

private:
    FieldPtr field_;
    Matrix gen_;
    std::vector<std::size_t> pivots_;
    std::string label_;
    std::optional<long long> designed_;
    CurvePtr curve_;
    std::optional<long long> eval_degree_;
    std::vector<int> point_idx_;
};

// Complementary degree in the Hermitian one-point duality:
// C(D, r P_inf)^dual = C(D, (q^3 + q^2 - q - 2 - r) P_inf).
long long herm_dual_degree(int q, long long r);

// min { wt(c) : c in A, c not in B } for B a subcode of A, by exhaustive
// enumeration of A.
std::uint64_t weight_of_set_difference(const LinearCode& a, const LinearCode& b,
                                       std::uint64_t budget = kDefaultBudget);

// min(base^e, cap), saturating.
std::uint64_t pow_capped(std::uint64_t base, std::uint64_t e, std::uint64_t cap);

// Hamming weight helper.
inline long long hamming_weight(const std::vector<std::uint16_t>& v) {
    long long w = 0;
    for (std::uint16_t x : v)
        if (x != 0) ++w;
    return w;
}

} // namespace hermfold
