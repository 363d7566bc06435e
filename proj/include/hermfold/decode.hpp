#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hermfold/folding.hpp"
#include "hermfold/quantum.hpp"

namespace hermfold {

// A word over the folded alphabet, stored as its unfolded coordinates in
// chain order; block b is coords[b*m .. (b+1)*m).
struct FoldedWord {
    long long m = 1;
    std::vector<std::uint16_t> coords;

    long long blocks() const { return (long long)coords.size() / m; }
};

// Number of blocks where the two words differ.
long long folded_hamming_distance(const FoldedWord& a, const FoldedWord& b);

// All codewords within folded distance radius of the received word, by full
// enumeration of the code.
std::vector<std::vector<std::uint16_t>> list_decode_exhaustive(
    const FoldedCode& code, const FoldedWord& received, long long radius,
    std::uint64_t budget = kDefaultBudget);

enum class ListMode { Exhaustive, Sampled };

struct ListDecodability {
    std::uint64_t max_list = 0;
    bool certified = false; // true when every received word was covered
};

// Worst-case list size at the given radius.  Exhaustive mode covers every
// received word exactly: list sizes are invariant under translating the
// received word by a codeword, so one representative per coset of the code
// suffices, and the representatives are enumerated through the syndromes.
// Sampled mode draws uniform random received words and reports the observed
// maximum (a lower bound).
ListDecodability verify_list_decodable(const FoldedCode& code, long long radius,
                                       ListMode mode, std::uint64_t trials = 0,
                                       std::uint64_t seed = 0,
                                       std::uint64_t budget = kDefaultBudget);

// Syndrome of an error with respect to the parity checks of the code (the
// generator matrix of its dual): H * e.
std::vector<std::uint16_t> syndrome(const LinearCode& code,
                                    const std::vector<std::uint16_t>& error);

// One logically distinct decoder output: an X/Z error pair together with the
// canonical labels of their stabilizer classes (X errors mod dual(C2),
// Z errors mod dual(C1)).
struct PauliCandidate {
    std::vector<std::uint16_t> x_error;
    std::vector<std::uint16_t> z_error;
    std::vector<std::uint16_t> x_class;
    std::vector<std::uint16_t> z_class;
    long long weight = 0; // blocks where the pair acts nontrivially
};

// List decoder for the folded CSS code: solves the two classical syndrome
// systems (X candidates range over a coset of C1, Z candidates over a coset
// of C2), keeps the candidates within the folded-weight radius, groups them
// into stabilizer classes, and returns the product list.  An inconsistent
// pair of constraints yields an empty list.
std::vector<PauliCandidate> quantum_list_decode(
    const CssCode& css, const std::vector<std::uint16_t>& sx,
    const std::vector<std::uint16_t>& sz, long long radius,
    std::uint64_t budget = kDefaultBudget);

struct TrialRecord {
    std::uint64_t seed = 0;
    long long weight = 0;
    std::uint64_t list_size = 0;
    bool recovered = false;

    // "seed weight listsize recovered"
    std::string record() const;
};

// Stabilizer-class counts for every syndrome on each side of the decoder at
// one radius.  Entry i of x_class_counts covers the X syndrome whose digits
// are i written base Q (least significant digit first); likewise for Z.  The
// decoder's output for a syndrome pair is the product of the two class sets,
// so these counts give every pair's list size.
struct SyndromeClassCounts {
    std::vector<std::uint64_t> x_class_counts;
    std::vector<std::uint64_t> z_class_counts;
};

SyndromeClassCounts all_syndrome_class_counts(const CssCode& css, long long radius,
                                              std::uint64_t budget = kDefaultBudget);

// Syndrome vector of the given odometer rank (digits base Q, least
// significant first).
std::vector<std::uint16_t> syndrome_from_rank(std::uint64_t rank,
                                              std::size_t length,
                                              std::uint32_t Q);

// Plants a uniform random Pauli error on `weight` distinct blocks (each
// acting block drawing a nonzero X/Z pattern pair), measures its syndromes,
// list-decodes at the given radius (default: the planted weight), and checks
// whether the planted stabilizer class pair appears in the list.
TrialRecord pauli_channel_trial(const CssCode& css, long long weight,
                                std::uint64_t seed,
                                std::optional<long long> radius = std::nullopt,
                                std::uint64_t budget = kDefaultBudget);

// Deterministic uniform sampling used by every randomized routine here:
// mt19937_64 plus rejection, so results are identical across platforms.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t uniform_below(std::uint64_t bound) {
        std::uint64_t min = (0 - bound) % bound; // 2^64 mod bound
        std::uint64_t x;
        do {
            x = eng_();
        } while (x < min);
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace hermfold
