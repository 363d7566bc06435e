#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermfold/curve.hpp"
#include "hermfold/linear_code.hpp"
#include "hermfold/rational.hpp"

namespace hermfold {

// Affine automorphism sigma_{delta,mu} of the Hermitian curve:
// (x, y) -> (x + delta, y + delta^q x + mu), subject to
// mu^q + mu = delta^(q+1).  These maps permute the affine points and fix the
// place at infinity.
class HermitianAutomorphism {
public:
    HermitianAutomorphism(CurvePtr curve, std::uint16_t delta, std::uint16_t mu);

    CurvePoint apply(const CurvePoint& pt) const;
    std::uint16_t delta() const { return delta_; }
    std::uint16_t mu() const { return mu_; }
    bool is_identity() const { return delta_ == 0 && mu_ == 0; }
    const CurvePtr& curve() const { return curve_; }

    // Order as a permutation of the affine points (lcm of cycle lengths;
    // the cycles all have the same length since a nonidentity sigma_{delta,mu}
    // fixes no affine point).
    long long order() const;

private:
    CurvePtr curve_;
    std::uint16_t delta_;
    std::uint16_t mu_;
    long long order_;
};

// Smallest-parameter automorphism whose order is a multiple of m:
// delta = 0 with the least nonzero admissible mu when order p suffices,
// otherwise the least nonzero delta with its least admissible mu.
HermitianAutomorphism default_automorphism(const CurvePtr& curve, long long m);

// A partition of coordinate indices into chains of length m.  For curve
// folding, each chain is a run (P, sigma P, ..., sigma^(m-1) P) and every
// sigma-orbit (all of size ord(sigma)) is cut into consecutive chains
// starting from its least point index.
class FoldChains {
public:
    static FoldChains orbit_chains(const HermitianAutomorphism& sigma, long long m);
    static FoldChains consecutive(long long n, long long m);

    long long m() const { return m_; }
    long long count() const { return (long long)chains_.size(); }
    long long n() const { return m_ * count(); }
    const std::vector<std::vector<int>>& chains() const { return chains_; }

    // Chain contents in order: the coordinate permutation that folding
    // applies.
    std::vector<int> flattened() const;

    bool operator==(const FoldChains& o) const {
        return m_ == o.m_ && chains_ == o.chains_;
    }

private:
    FoldChains(long long m, std::vector<std::vector<int>> chains)
        : m_(m), chains_(std::move(chains)) {}
    long long m_;
    std::vector<std::vector<int>> chains_;
};

// A code together with a grouping of its coordinates into blocks of m.
// The underlying code is stored with its coordinates already permuted into
// chain order, so block b occupies positions [b*m, (b+1)*m).  Dimension is
// exact rational k/m; the designed block distance is ceil(designed/m).
class FoldedCode {
public:
    // Wraps a code whose coordinates are already in chain order.
    FoldedCode(LinearCode code, FoldChains chains);

    // Permutes the code's coordinates into chain order first (matching chain
    // point indices against the code's evaluation order), then wraps it.
    static FoldedCode fold(const LinearCode& code, const FoldChains& chains);

    const LinearCode& unfolded() const { return code_; }
    const FoldChains& chains() const { return chains_; }
    long long m() const { return chains_.m(); }
    long long length() const { return chains_.count(); }
    Rational dim() const { return Rational((long long)code_.dim(), m()); }
    std::optional<long long> designed_block_distance() const;

    // Blockwise-orthogonal complement: folding commutes with duality, so
    // this is the fold of the dual over the same chains.
    FoldedCode dual() const;

    // Exact minimum block weight over nonzero codewords, by enumeration.
    DistanceResult min_block_distance(std::uint64_t budget = kDefaultBudget) const;

    // "[N, k, >=d]" with k in lowest terms.
    std::string triple_string() const;

private:
    LinearCode code_;
    FoldChains chains_;
};

// Number of blocks of v (grouped in runs of m) that are not identically
// zero.
long long folded_weight(const std::vector<std::uint16_t>& v, long long m);

// True iff every pair of generator rows of a and b has vanishing sum of
// blockwise inner products (which is the full inner product, summed block by
// block).
bool blockwise_orthogonal(const FoldedCode& a, const FoldedCode& b);

// Folded Reed-Solomon comparison point: the [q^2-1, k] Reed-Solomon code
// over GF(q^2) evaluated at powers of the least primitive element, folded in
// consecutive runs of m (the orbit structure of x -> gamma x).
FoldedCode fold_reed_solomon(int q, long long k, long long m);

} // namespace hermfold
