#pragma once

// The difference transform phi_l(x) = pref_|x|(x 0^l - 0^l x) over Z_q.
//
// An l-tandem duplication of x shows up in phi_l as the insertion of 0^l
// somewhere after the l-prefix, which turns decoding into run-length
// reduction of the zero runs.

#include <string>
#include <vector>

#include "tdcode/error.hpp"
#include "tdcode/word.hpp"

namespace tdcode {

namespace detail {
inline void require_length(const Word& w, std::size_t len, const char* what) {
    if (len == 0) throw error(errc::invalid_argument, std::string(what) + ": l must be >= 1");
    if (w.size() < len)
        throw error(errc::word_too_short, std::string(what) + ": word of length " + std::to_string(w.size()) +
                                              " is shorter than l=" + std::to_string(len));
}
}  // namespace detail

inline Word phi(const Word& x, std::size_t len, const Alphabet& a) {
    detail::require_length(x, len, "phi");
    const unsigned q = a.size();
    Word y = x;
    for (std::size_t i = len; i < x.size(); ++i)
        y[i] = static_cast<Letter>((x[i] + q - x[i - len]) % q);
    return y;
}

inline Word phi_inverse(const Word& y, std::size_t len, const Alphabet& a) {
    detail::require_length(y, len, "phi_inverse");
    const unsigned q = a.size();
    Word x = y;
    for (std::size_t i = len; i < y.size(); ++i) x[i] = static_cast<Letter>((y[i] + x[i - len]) % q);
    return x;
}

/// y = prefix 0^{m_1} z_1 0^{m_2} z_2 ... 0^{m_k} z_k 0^{m_{k+1}}, where
/// |prefix| = l, each z_i is a maximal zero-free block, and the two outer
/// runs may be empty. zero_runs has exactly blocks.size() + 1 entries.
struct ZeroRunDecomposition {
    Word prefix;
    std::vector<Word> blocks;
    std::vector<std::size_t> zero_runs;
};

inline ZeroRunDecomposition zero_run_decompose(const Word& y, std::size_t len) {
    detail::require_length(y, len, "zero_run_decompose");
    ZeroRunDecomposition d;
    d.prefix = y.slice(0, len);
    std::size_t i = len;
    while (true) {
        std::size_t run = 0;
        while (i < y.size() && y[i] == 0) ++run, ++i;
        d.zero_runs.push_back(run);
        if (i == y.size()) break;
        Word block;
        while (i < y.size() && y[i] != 0) block.push_back(y[i++]);
        d.blocks.push_back(std::move(block));
    }
    return d;
}

inline Word reassemble(const ZeroRunDecomposition& d) {
    Word y = d.prefix;
    for (std::size_t k = 0; k < d.zero_runs.size(); ++k) {
        for (std::size_t r = 0; r < d.zero_runs[k]; ++r) y.push_back(0);
        if (k < d.blocks.size()) y.append(d.blocks[k]);
    }
    return y;
}

/// Reassembles with every zero-run length taken mod l.
inline Word reduce_runs_mod(const ZeroRunDecomposition& d, std::size_t len) {
    if (len == 0) throw error(errc::invalid_argument, "reduce_runs_mod: l must be >= 1");
    ZeroRunDecomposition r = d;
    for (auto& m : r.zero_runs) m %= len;
    return reassemble(r);
}

/// Greedy left-to-right scan of phi_l(z) past its l-prefix: each first 0^l
/// window at [p, p+l-1] declares the square [p-l, p+l-1] of z, then the next
/// l positions are skipped. Spans come back ordered, pairwise disjoint, and
/// each is an l-square of z. At least ceil(t/2) are found when z is the
/// result of t l-duplications.
inline std::vector<FactorSpan> extract_disjoint_duplications(const Word& z, std::size_t len, const Alphabet& a) {
    const Word y = phi(z, len, a);
    std::vector<FactorSpan> spans;
    std::size_t run = 0;
    for (std::size_t i = len; i < y.size(); ++i) {  // 0-based index i is position i+1
        run = (y[i] == 0) ? run + 1 : 0;
        if (run == len) {
            const std::size_t p = i + 2 - len;  // 1-based start of the zero window
            spans.push_back({p - len, p + len - 1});
            i += len;  // skip the l positions after the window
            run = 0;
        }
    }
    return spans;
}

}  // namespace tdcode
