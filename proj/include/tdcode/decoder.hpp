#pragma once

// Decoders for duplication-free codes:
//  - decode_uniform: single known length l, linear time via phi_l run reduction;
//  - decode_equal_length: tries each l in L (at most one can succeed when L
//    is 2-separated), O(nN);
//  - decode_bruteforce: exhaustive ancestor search for the disjoint channels,
//    which have no structural decoder.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "tdcode/channel.hpp"
#include "tdcode/code.hpp"
#include "tdcode/error.hpp"
#include "tdcode/transform.hpp"
#include "tdcode/word.hpp"

namespace tdcode {

enum class DecodeStatus { unique, ambiguous, no_candidate };

inline const char* to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::unique: return "unique";
        case DecodeStatus::ambiguous: return "ambiguous";
        case DecodeStatus::no_candidate: return "no-candidate";
    }
    return "?";
}

struct DecodeResult {
    DecodeStatus status = DecodeStatus::no_candidate;
    Word codeword;                           // meaningful when unique
    std::optional<std::size_t> length_used;  // duplication length that decoded, if any
    std::vector<Word> candidates;            // sorted; more than one only when ambiguous
};

namespace detail {

inline DecodeResult from_candidates(std::set<Word> found, std::optional<std::size_t> length_used = std::nullopt) {
    DecodeResult r;
    r.candidates.assign(found.begin(), found.end());
    if (r.candidates.size() == 1) {
        r.status = DecodeStatus::unique;
        r.codeword = r.candidates.front();
        r.length_used = length_used;
    } else if (r.candidates.size() > 1) {
        r.status = DecodeStatus::ambiguous;
    }
    return r;
}

/// The run-reduction pipeline phi -> decompose -> mod l -> phi^{-1}. Words
/// shorter than l cannot carry an l-duplication and come back unchanged.
inline Word reduce_uniform(const Word& z, std::size_t len, const Alphabet& a) {
    if (z.size() < len) return z;
    return phi_inverse(reduce_runs_mod(zero_run_decompose(phi(z, len, a), len), len), len, a);
}

}  // namespace detail

inline DecodeResult decode_uniform(const Word& z, std::size_t len, std::size_t n, const Alphabet& a) {
    if (len == 0) throw error(errc::invalid_argument, "decode_uniform: l must be >= 1");
    Word x = detail::reduce_uniform(z, len, a);
    if (x.size() != n || !is_codeword(x, {len})) return {};
    return detail::from_candidates({std::move(x)}, len);
}

enum class DecodeMode {
    fast,    // stop at the first l that decodes
    verify,  // try every l and report ambiguity
};

inline DecodeResult decode_equal_length(const Word& z, const LengthSpec& spec, std::size_t n, const Alphabet& a,
                                        DecodeMode mode = DecodeMode::fast) {
    if (spec.construction != Construction::equal_length)
        throw error(errc::invalid_argument, "decode_equal_length needs an equal_length LengthSpec");
    check_separation(spec.lengths);
    if (z.size() < n) return {};

    std::set<Word> found;
    std::optional<std::size_t> first;
    bool tried = false;
    for (std::size_t len : spec.lengths) {
        if (len > n) break;
        tried = true;
        Word x = detail::reduce_uniform(z, len, a);
        if (x.size() != n || !is_codeword(x, spec.forbidden)) continue;
        found.insert(std::move(x));
        if (!first) first = len;
        if (mode == DecodeMode::fast) break;
    }
    // Every length exceeds n: nothing can have been duplicated.
    if (!tried && z.size() == n && is_codeword(z, spec.forbidden)) found.insert(z);
    return detail::from_candidates(std::move(found), first);
}

inline constexpr std::size_t default_search_budget = 2'000'000;

namespace detail {

// Squares that prepending `added` letters could create start at 0..added-1.
inline bool has_square_starting_before(const Word& w, std::size_t added, const LengthSet& forbidden) {
    for (std::size_t off = 0; off < added; ++off)
        for (std::size_t len : forbidden) {
            if (off + 2 * len > w.size()) break;
            if (is_square_at(w, off, len)) return true;
        }
    return false;
}

// Parses z left to right in the one-shot disjoint shape x_1 v_1 v_1 x_2 ...:
// each step either copies a letter or collapses a square vv (|v| in lens)
// starting at the current position. suffixes(pos, rem) is the set of
// forbidden-free ancestor suffixes of z[pos..] obtained by removing exactly
// rem letters; memoized on (pos, rem).
class AncestorSearch {
public:
    AncestorSearch(const Word& z, const std::vector<std::size_t>& lens, const LengthSet& forbidden,
                   std::size_t budget)
        : z_(z), lens_(lens), forbidden_(forbidden), budget_(budget) {}

    const std::vector<Word>& suffixes(std::size_t pos, std::size_t rem) {
        const std::uint64_t key = static_cast<std::uint64_t>(pos) * (z_.size() + 1) + rem;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::set<Word> out;
        if (pos == z_.size()) {
            if (rem == 0) out.insert(Word{});
        } else if (z_.size() - pos >= rem) {
            for (const Word& s : suffixes(pos + 1, rem)) {
                Word w{z_[pos]};
                w.append(s);
                if (!has_square_starting_before(w, 1, forbidden_)) out.insert(std::move(w));
            }
            for (std::size_t len : lens_) {
                if (len > rem || !is_square_at(z_, pos, len)) continue;
                for (const Word& s : suffixes(pos + 2 * len, rem - len)) {
                    Word w = z_.slice(pos, len);
                    w.append(s);
                    if (!has_square_starting_before(w, len, forbidden_)) out.insert(std::move(w));
                }
            }
        }
        stored_ += out.size();
        if (stored_ > budget_)
            throw error(errc::resource_limit, "ancestor search exceeded budget of " + std::to_string(budget_) +
                                                  " stored suffixes");
        return memo_.emplace(key, std::vector<Word>(out.begin(), out.end())).first->second;
    }

private:
    const Word& z_;
    std::vector<std::size_t> lens_;
    const LengthSet& forbidden_;
    std::size_t budget_;
    std::size_t stored_ = 0;
    std::unordered_map<std::uint64_t, std::vector<Word>> memo_;
};

}  // namespace detail

/// Collects every length-n member of C_F whose disjoint (or disjoint
/// equal-length) cone contains z. Uniqueness is what the constructions
/// guarantee, so an ambiguous result means the code property failed.
inline DecodeResult decode_bruteforce(const Word& z, const LengthSpec& spec, std::size_t n, Model model,
                                      std::size_t budget = default_search_budget) {
    if (!is_disjoint(model))
        throw error(errc::invalid_argument, "decode_bruteforce handles the disjoint models only");
    if (spec.lengths.empty()) throw error(errc::empty_length_set, "L must be nonempty");
    if (z.size() < n) return {};
    const std::size_t rem = z.size() - n;

    std::set<Word> found;
    auto run = [&](std::vector<std::size_t> lens) {
        detail::AncestorSearch search(z, lens, spec.forbidden, budget);
        for (const Word& x : search.suffixes(0, rem)) found.insert(x);
    };
    if (model == Model::disjoint) {
        run({spec.lengths.begin(), spec.lengths.end()});
    } else {
        for (std::size_t len : spec.lengths) run({len});
    }
    return detail::from_candidates(std::move(found));
}

}  // namespace tdcode
