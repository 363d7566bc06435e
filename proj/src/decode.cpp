#include "hermfold/decode.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hermfold {

long long folded_hamming_distance(const FoldedWord& a, const FoldedWord& b) {
    if (a.m != b.m || a.coords.size() != b.coords.size())
        throw std::invalid_argument("decode: folded word shape mismatch");
    if (a.m < 1 || a.coords.size() % (std::size_t)a.m != 0)
        throw std::invalid_argument("decode: m does not divide the length");
    long long dist = 0;
    for (std::size_t b0 = 0; b0 < a.coords.size(); b0 += (std::size_t)a.m) {
        for (std::size_t t = 0; t < (std::size_t)a.m; ++t) {
            if (a.coords[b0 + t] != b.coords[b0 + t]) {
                ++dist;
                break;
            }
        }
    }
    return dist;
}

std::vector<std::vector<std::uint16_t>> list_decode_exhaustive(
    const FoldedCode& code, const FoldedWord& received, long long radius,
    std::uint64_t budget) {
    if (received.m != code.m() ||
        (long long)received.coords.size() != (long long)code.unfolded().length())
        throw std::invalid_argument("decode: folded word shape mismatch");
    std::uint64_t count =
        pow_capped(code.unfolded().field()->order(), code.unfolded().dim(), UINT64_MAX);
    if (count > budget)
        throw std::runtime_error("decode: list decoding enumeration over budget");

    const Field& f = *code.unfolded().field();
    long long m = code.m();
    std::vector<std::vector<std::uint16_t>> list;
    std::vector<std::uint16_t> diff(received.coords.size());
    code.unfolded().for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        for (std::size_t j = 0; j < w.size(); ++j)
            diff[j] = f.sub(w[j], received.coords[j]);
        if (folded_weight(diff, m) <= radius) list.push_back(w);
        return true;
    });
    return list;
}

namespace {

// Received-word representative with the given syndrome relative to the
// reduced parity-check matrix: syndrome values placed at the pivot columns.
std::vector<std::uint16_t> syndrome_representative(
    const LinearCode& parity, const std::vector<std::uint16_t>& s) {
    std::vector<std::uint16_t> y(parity.length(), 0);
    for (std::size_t i = 0; i < parity.dim(); ++i)
        y[parity.pivot_columns()[i]] = s[i];
    return y;
}

std::uint64_t list_size_at(const FoldedCode& code,
                           const std::vector<std::vector<std::uint16_t>>& words,
                           const std::vector<std::uint16_t>& received,
                           long long radius) {
    const Field& f = *code.unfolded().field();
    long long m = code.m();
    std::uint64_t count = 0;
    std::vector<std::uint16_t> diff(received.size());
    for (const auto& w : words) {
        for (std::size_t j = 0; j < w.size(); ++j)
            diff[j] = f.sub(w[j], received[j]);
        if (folded_weight(diff, m) <= radius) ++count;
    }
    return count;
}

std::vector<std::vector<std::uint16_t>> materialize_codewords(const LinearCode& code) {
    std::vector<std::vector<std::uint16_t>> words;
    code.for_each_codeword([&](const std::vector<std::uint16_t>& w) {
        words.push_back(w);
        return true;
    });
    return words;
}

} // namespace

ListDecodability verify_list_decodable(const FoldedCode& code, long long radius,
                                       ListMode mode, std::uint64_t trials,
                                       std::uint64_t seed, std::uint64_t budget) {
    const LinearCode& c = code.unfolded();
    std::uint64_t Q = c.field()->order();
    std::size_t n = c.length(), k = c.dim();
    std::uint64_t n_codewords = pow_capped(Q, k, UINT64_MAX);

    if (mode == ListMode::Exhaustive) {
        std::uint64_t n_cosets = pow_capped(Q, n - k, UINT64_MAX);
        if (n_codewords > budget || n_cosets > budget / n_codewords)
            throw std::runtime_error("decode: exhaustive verification over budget");
        auto words = materialize_codewords(c);
        LinearCode parity = c.dual();

        std::uint64_t worst = 0;
        std::vector<std::uint16_t> s(parity.dim(), 0);
        // Odometer over all syndromes; each names one coset of the code, and
        // its representative stands in for every received word in the coset.
        bool done = false;
        while (!done) {
            auto y = syndrome_representative(parity, s);
            worst = std::max(worst, list_size_at(code, words, y, radius));
            done = true;
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                if (s[pos] + 1u < Q) {
                    ++s[pos];
                    done = false;
                    break;
                }
                s[pos] = 0;
            }
            if (s.empty()) break;
        }
        return {worst, true};
    }

    if (n_codewords > budget)
        throw std::runtime_error("decode: codeword enumeration over budget");
    auto words = materialize_codewords(c);
    DetRng rng(seed);
    std::uint64_t worst = 0;
    std::vector<std::uint16_t> y(n);
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (std::size_t j = 0; j < n; ++j)
            y[j] = (std::uint16_t)rng.uniform_below(Q);
        worst = std::max(worst, list_size_at(code, words, y, radius));
    }
    return {worst, false};
}

std::vector<std::uint16_t> syndrome(const LinearCode& code,
                                    const std::vector<std::uint16_t>& error) {
    return code.dual().generator().mul_vector(error);
}

namespace {

struct ClassRep {
    std::vector<std::uint16_t> error;
    long long weight = 0;
};

// Enumerate { e0 + c : c in coset_code } with folded weight <= radius and
// keep, per stabilizer class (canonical residue mod class_code), the
// minimum-(weight, lex) representative.
std::map<std::vector<std::uint16_t>, ClassRep> collect_classes(
    const std::vector<std::uint16_t>& e0, const LinearCode& coset_code,
    const LinearCode& class_code, long long m, long long radius) {
    const Field& f = *coset_code.field();
    std::map<std::vector<std::uint16_t>, ClassRep> classes;
    std::vector<std::uint16_t> e(e0.size());
    coset_code.for_each_codeword([&](const std::vector<std::uint16_t>& c) {
        for (std::size_t j = 0; j < e.size(); ++j) e[j] = f.add(e0[j], c[j]);
        long long w = folded_weight(e, m);
        if (w > radius) return true;
        auto key = class_code.reduce(e);
        auto it = classes.find(key);
        if (it == classes.end()) {
            classes.emplace(std::move(key), ClassRep{e, w});
        } else if (w < it->second.weight ||
                   (w == it->second.weight && e < it->second.error)) {
            it->second = ClassRep{e, w};
        }
        return true;
    });
    return classes;
}

} // namespace

std::vector<PauliCandidate> quantum_list_decode(
    const CssCode& css, const std::vector<std::uint16_t>& sx,
    const std::vector<std::uint16_t>& sz, long long radius,
    std::uint64_t budget) {
    const LinearCode& c1 = css.c1().unfolded();
    const LinearCode& c2 = css.c2().unfolded();
    const LinearCode& h1 = css.c1_dual().unfolded(); // parity checks of C1
    const LinearCode& h2 = css.c2_dual().unfolded(); // parity checks of C2
    if (sx.size() != h1.dim() || sz.size() != h2.dim())
        throw std::invalid_argument("decode: syndrome length mismatch");

    std::uint64_t Q = c1.field()->order();
    std::uint64_t cost1 = pow_capped(Q, c1.dim(), UINT64_MAX);
    std::uint64_t cost2 = pow_capped(Q, c2.dim(), UINT64_MAX);
    if (cost1 > budget || cost2 > budget - cost1)
        throw std::runtime_error("decode: quantum list decoding over budget");

    long long m = css.m();
    // X errors: solutions of H1 e = sx form e0 + C1; classes mod dual(C2).
    auto x_classes = collect_classes(syndrome_representative(h1, sx), c1, h2, m, radius);
    // Z errors: solutions of H2 e = sz form e0 + C2; classes mod dual(C1).
    auto z_classes = collect_classes(syndrome_representative(h2, sz), c2, h1, m, radius);

    std::vector<PauliCandidate> list;
    for (const auto& [xkey, xrep] : x_classes) {
        for (const auto& [zkey, zrep] : z_classes) {
            PauliCandidate cand;
            cand.x_error = xrep.error;
            cand.z_error = zrep.error;
            cand.x_class = xkey;
            cand.z_class = zkey;
            long long w = 0;
            for (long long b = 0; b < css.length(); ++b) {
                bool acts = false;
                for (long long t = 0; t < m && !acts; ++t) {
                    std::size_t col = (std::size_t)(b * m + t);
                    acts = cand.x_error[col] != 0 || cand.z_error[col] != 0;
                }
                if (acts) ++w;
            }
            cand.weight = w;
            list.push_back(std::move(cand));
        }
    }
    return list;
}

std::vector<std::uint16_t> syndrome_from_rank(std::uint64_t rank,
                                              std::size_t length,
                                              std::uint32_t Q) {
    std::vector<std::uint16_t> s(length, 0);
    for (std::size_t i = 0; i < length; ++i) {
        s[i] = (std::uint16_t)(rank % Q);
        rank /= Q;
    }
    return s;
}

SyndromeClassCounts all_syndrome_class_counts(const CssCode& css, long long radius,
                                              std::uint64_t budget) {
    const LinearCode& c1 = css.c1().unfolded();
    const LinearCode& c2 = css.c2().unfolded();
    const LinearCode& h1 = css.c1_dual().unfolded();
    const LinearCode& h2 = css.c2_dual().unfolded();
    std::uint64_t Q = c1.field()->order();
    long long m = css.m();

    std::uint64_t nx = pow_capped(Q, h1.dim(), UINT64_MAX);
    std::uint64_t nz = pow_capped(Q, h2.dim(), UINT64_MAX);
    std::uint64_t cx = pow_capped(Q, c1.dim(), UINT64_MAX);
    std::uint64_t cz = pow_capped(Q, c2.dim(), UINT64_MAX);
    if (nx > budget || cx > budget / std::max<std::uint64_t>(nx, 1) ||
        nz > budget || cz > budget / std::max<std::uint64_t>(nz, 1))
        throw std::runtime_error("decode: syndrome sweep over budget");

    SyndromeClassCounts out;
    out.x_class_counts.resize(nx);
    for (std::uint64_t i = 0; i < nx; ++i) {
        auto s = syndrome_from_rank(i, h1.dim(), (std::uint32_t)Q);
        out.x_class_counts[i] =
            collect_classes(syndrome_representative(h1, s), c1, h2, m, radius).size();
    }
    out.z_class_counts.resize(nz);
    for (std::uint64_t i = 0; i < nz; ++i) {
        auto s = syndrome_from_rank(i, h2.dim(), (std::uint32_t)Q);
        out.z_class_counts[i] =
            collect_classes(syndrome_representative(h2, s), c2, h1, m, radius).size();
    }
    return out;
}

std::string TrialRecord::record() const {
    return std::to_string(seed) + " " + std::to_string(weight) + " " +
           std::to_string(list_size) + " " + (recovered ? "1" : "0");
}

TrialRecord pauli_channel_trial(const CssCode& css, long long weight,
                                std::uint64_t seed,
                                std::optional<long long> radius,
                                std::uint64_t budget) {
    long long N = css.length();
    long long m = css.m();
    if (weight < 0 || weight > N)
        throw std::invalid_argument("decode: planted weight out of range");
    const Field& f = *css.c1().unfolded().field();
    std::uint64_t Q = f.order();
    std::size_t n = css.c1().unfolded().length();

    DetRng rng(seed);

    // Partial Fisher-Yates for the acting blocks.
    std::vector<long long> blocks(N);
    for (long long b = 0; b < N; ++b) blocks[b] = b;
    for (long long i = 0; i < weight; ++i) {
        std::uint64_t j = i + rng.uniform_below((std::uint64_t)(N - i));
        std::swap(blocks[(std::size_t)i], blocks[(std::size_t)j]);
    }

    std::vector<std::uint16_t> ex(n, 0), ez(n, 0);
    for (long long i = 0; i < weight; ++i) {
        long long b = blocks[(std::size_t)i];
        // Nonzero (X pattern, Z pattern) pair on this block, uniform by
        // rejection.
        while (true) {
            bool nonzero = false;
            for (long long t = 0; t < m; ++t) {
                std::uint16_t xv = (std::uint16_t)rng.uniform_below(Q);
                std::uint16_t zv = (std::uint16_t)rng.uniform_below(Q);
                ex[(std::size_t)(b * m + t)] = xv;
                ez[(std::size_t)(b * m + t)] = zv;
                nonzero = nonzero || xv != 0 || zv != 0;
            }
            if (nonzero) break;
        }
    }

    const LinearCode& h1 = css.c1_dual().unfolded();
    const LinearCode& h2 = css.c2_dual().unfolded();
    auto sx = h1.generator().mul_vector(ex);
    auto sz = h2.generator().mul_vector(ez);

    long long rad = radius.value_or(weight);
    auto list = quantum_list_decode(css, sx, sz, rad, budget);

    auto xkey = h2.reduce(ex);
    auto zkey = h1.reduce(ez);
    bool recovered = false;
    for (const auto& cand : list) {
        if (cand.x_class == xkey && cand.z_class == zkey) {
            recovered = true;
            break;
        }
    }
    return {seed, weight, (std::uint64_t)list.size(), recovered};
}

} // namespace hermfold
