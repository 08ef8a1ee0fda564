#pragma once

// Brute-force ground truth: bounded descendant cones under each channel
// model, confusability, exhaustive code verification and the mid-cover
// lemma checks.
//
// Cones are infinite, so every cone here is truncated at max_len (and
// optionally at a number of duplication events). Finding no collision in a
// truncated cone corroborates a code property; it does not prove it.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tdcode/channel.hpp"
#include "tdcode/code.hpp"
#include "tdcode/error.hpp"
#include "tdcode/word.hpp"

namespace tdcode {

struct ConeLimits {
    std::size_t max_len = 0;
    std::optional<std::size_t> max_events;  // duplications per descendant; unbounded if empty
    std::size_t cap = 5'000'000;            // members per cone
};

struct DescendantSet {
    Word root;
    Model model = Model::unrestricted;
    LengthSet lengths;
    std::size_t max_len = 0;
    std::vector<Word> members;  // ShortLex order

    bool contains(const Word& w) const {
        return std::binary_search(members.begin(), members.end(), w, ShortLex{});
    }
};

namespace detail {

using WordSet = std::unordered_set<Word, WordHash>;

inline void add_member(WordSet& set, Word w, std::size_t cap) {
    set.insert(std::move(w));
    if (set.size() > cap)
        throw error(errc::resource_limit, "descendant cone exceeds cap of " + std::to_string(cap) + " members");
}

// Breadth-first closure under T_{i,l}, l in lens. Every step lengthens the
// word, so the truncated closure is finite.
inline void sequential_closure(const Word& x, const std::vector<std::size_t>& lens, const ConeLimits& lim,
                               WordSet& out) {
    WordSet seen{x};
    std::vector<Word> frontier{x};
    for (std::size_t depth = 0; !frontier.empty(); ++depth) {
        if (lim.max_events && depth == *lim.max_events) break;
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (std::size_t l : lens) {
                if (w.size() + l > lim.max_len || w.size() < l) continue;
                for (std::size_t i = 0; i + l <= w.size(); ++i) {
                    Word z = apply_duplication(w, {i, l});
                    if (seen.insert(z).second) {
                        if (seen.size() > lim.cap)
                            throw error(errc::resource_limit,
                                        "descendant cone exceeds cap of " + std::to_string(lim.cap) + " members");
                        next.push_back(std::move(z));
                    }
                }
            }
        frontier = std::move(next);
    }
    for (const Word& w : seen) add_member(out, w, lim.cap);
}

// One simultaneous round of disjoint duplications: walk x left to right,
// either copying a letter or emitting a block twice.
inline void disjoint_closure(const Word& x, const std::vector<std::size_t>& lens, const ConeLimits& lim,
                             WordSet& out) {
    const std::size_t growth = lim.max_len - x.size();
    const std::size_t max_events = lim.max_events.value_or(x.size());
    Word z;
    z.reserve(lim.max_len);
    auto rec = [&](auto& self, std::size_t pos, std::size_t grown, std::size_t events) -> void {
        if (pos == x.size()) {
            add_member(out, z, lim.cap);
            return;
        }
        z.push_back(x[pos]);
        self(self, pos + 1, grown, events);
        z.pop_back();
        if (events == max_events) return;
        for (std::size_t l : lens) {
            if (pos + l > x.size() || grown + l > growth) continue;
            const auto block = x.letters().subspan(pos, l);
            z.append(block);
            z.append(block);
            self(self, pos + l, grown + l, events + 1);
            z.truncate(z.size() - 2 * l);
        }
    };
    rec(rec, 0, 0, 0);
}

}  // namespace detail

inline DescendantSet descendants(const Word& x, Model model, const LengthSet& lengths, const ConeLimits& lim) {
    if (lim.max_len < x.size())
        throw error(errc::invalid_argument, "max_len " + std::to_string(lim.max_len) + " below root length " +
                                                std::to_string(x.size()));
    if (lengths.empty()) throw error(errc::empty_length_set, "L must be nonempty");
    detail::WordSet set;
    const std::vector<std::size_t> all(lengths.begin(), lengths.end());
    switch (model) {
        case Model::unrestricted: detail::sequential_closure(x, all, lim, set); break;
        case Model::disjoint: detail::disjoint_closure(x, all, lim, set); break;
        case Model::equal_length:
            for (std::size_t l : all) detail::sequential_closure(x, {l}, lim, set);
            break;
        case Model::disjoint_equal_length:
            for (std::size_t l : all) detail::disjoint_closure(x, {l}, lim, set);
            break;
    }
    DescendantSet d{x, model, lengths, lim.max_len, {set.begin(), set.end()}};
    std::sort(d.members.begin(), d.members.end(), ShortLex{});
    return d;
}

inline DescendantSet descendants(const Word& x, Model model, const LengthSet& lengths, std::size_t max_len) {
    return descendants(x, model, lengths, ConeLimits{max_len, std::nullopt});
}

/// Shortest (then lexicographically least) common descendant of x and y
/// within the bound, if any.
inline std::optional<Word> confusable(const Word& x, const Word& y, Model model, const LengthSet& lengths,
                                      const ConeLimits& lim) {
    if (x.size() != y.size()) throw error(errc::invalid_argument, "confusability compares equal-length words");
    const auto cx = descendants(x, model, lengths, lim);
    const auto cy = descendants(y, model, lengths, lim);
    ShortLex less;
    auto a = cx.members.begin();
    auto b = cy.members.begin();
    while (a != cx.members.end() && b != cy.members.end()) {
        if (less(*a, *b))
            ++a;
        else if (less(*b, *a))
            ++b;
        else
            return *a;
    }
    return std::nullopt;
}

inline std::optional<Word> confusable(const Word& x, const Word& y, Model model, const LengthSet& lengths,
                                      std::size_t max_len) {
    return confusable(x, y, model, lengths, ConeLimits{max_len, std::nullopt});
}

// ---------------------------------------------------------------------------
// Verification

struct Collision {
    Word x;
    Word y;
    Word witness;
};

struct LemmaTally {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
};

struct VerificationReport {
    std::string label;  // "theorem-1", "theorem-2", "theorem-3", "negative-control"
    bool control = false;  // a control passes iff it finds collisions
    Model model = Model::disjoint;
    std::size_t n = 0;
    unsigned q = 2;
    LengthSet lengths;
    LengthSet forbidden;
    std::size_t max_len = 0;
    std::optional<std::size_t> max_events;
    std::uint64_t codewords = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t cone_members = 0;
    std::uint64_t collision_pairs = 0;
    std::vector<Collision> collisions;  // at most collision_sample_limit, ordered by (x, y)
    std::vector<LemmaTally> lemma_checks;
    double elapsed_ms = 0;
    std::uint64_t seed = 0;

    bool passed() const noexcept {
        const bool lemmas = std::all_of(lemma_checks.begin(), lemma_checks.end(),
                                        [](const LemmaTally& t) { return t.passed(); });
        return lemmas && (control ? collision_pairs > 0 : collision_pairs == 0);
    }
};

inline constexpr std::size_t collision_sample_limit = 32;

struct VerifyOptions {
    std::optional<std::size_t> max_events;
    std::size_t cone_cap = 5'000'000;
    std::size_t member_cap = default_member_cap;
    std::uint64_t seed = 0;
};

namespace detail {

// Indexes every cone member by the codewords that reach it. Two codewords
// collide iff some member has both as owners; this covers all unordered
// pairs without intersecting them one by one.
inline void check_code(const std::vector<Word>& code, VerificationReport& rep, const VerifyOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    const ConeLimits lim{rep.max_len, opt.max_events, opt.cone_cap};
    std::unordered_map<Word, std::vector<std::uint32_t>, WordHash> owners;
    for (std::uint32_t i = 0; i < code.size(); ++i) {
        const auto cone = descendants(code[i], rep.model, rep.lengths, lim);
        rep.cone_members += cone.members.size();
        for (const Word& w : cone.members) owners[w].push_back(i);
    }
    std::map<std::pair<std::uint32_t, std::uint32_t>, const Word*> witness;
    ShortLex less;
    for (const auto& [w, who] : owners) {
        if (who.size() < 2) continue;
        for (std::size_t a = 0; a < who.size(); ++a)
            for (std::size_t b = a + 1; b < who.size(); ++b) {
                auto [it, fresh] = witness.try_emplace({who[a], who[b]}, &w);
                if (!fresh && less(w, *it->second)) it->second = &w;
            }
    }
    rep.codewords = code.size();
    rep.pairs_checked = code.size() < 2 ? 0 : static_cast<std::uint64_t>(code.size()) * (code.size() - 1) / 2;
    rep.collision_pairs = witness.size();
    for (const auto& [pair, w] : witness) {
        if (rep.collisions.size() == collision_sample_limit) break;
        rep.collisions.push_back({code[pair.first], code[pair.second], *w});
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

/// Default cone bound: three rounds of the longest duplication.
inline std::size_t default_max_len(std::size_t n, const LengthSet& lengths) {
    return n + 2 * (lengths.empty() ? 0 : *lengths.rbegin()) * 3;
}

/// Builds C_F with the construction's F and checks every pair of distinct
/// codewords for a common descendant under the matching channel:
/// 1 = disjoint, 2 = equal-length, 3 = disjoint equal-length.
inline VerificationReport verify_theorem(int theorem, std::size_t n, unsigned q, const LengthSet& lengths,
                                         std::size_t max_len, const VerifyOptions& opt = {}) {
    Construction c;
    Model m;
    switch (theorem) {
        case 1: c = Construction::disjoint, m = Model::disjoint; break;
        case 2: c = Construction::equal_length, m = Model::equal_length; break;
        case 3: c = Construction::combined, m = Model::disjoint_equal_length; break;
        default: throw error(errc::invalid_argument, "theorem must be 1, 2 or 3");
    }
    const LengthSpec spec = make_length_spec(lengths, c);
    const Alphabet a(q);
    VerificationReport rep;
    rep.label = "theorem-" + std::to_string(theorem);
    rep.model = m;
    rep.n = n;
    rep.q = q;
    rep.lengths = spec.lengths;
    rep.forbidden = spec.forbidden;
    rep.max_len = max_len;
    rep.max_events = opt.max_events;
    rep.seed = opt.seed;
    const Code code = enumerate_code(n, a, spec.forbidden, opt.member_cap);
    detail::check_code(code.members, rep, opt);
    return rep;
}

/// The disjoint-channel check run on all of Sigma^n (F empty). The harness
/// is only trustworthy if this finds collisions.
inline VerificationReport negative_control(std::size_t n, unsigned q, const LengthSet& lengths, std::size_t max_len,
                                           const VerifyOptions& opt = {}) {
    if (lengths.empty()) throw error(errc::empty_length_set, "L must be nonempty");
    const Alphabet a(q);
    VerificationReport rep;
    rep.label = "negative-control";
    rep.control = true;
    rep.model = Model::disjoint;
    rep.n = n;
    rep.q = q;
    rep.lengths = lengths;
    rep.max_len = max_len;
    rep.max_events = opt.max_events;
    rep.seed = opt.seed;
    const Code code = enumerate_code(n, a, {}, opt.member_cap);
    detail::check_code(code.members, rep, opt);
    return rep;
}

// ---------------------------------------------------------------------------
// Mid-cover lemmas, checked over every word of length <= budget.

namespace detail {

template <class Check>
LemmaTally for_each_midcover_pair(std::string name, std::size_t budget, unsigned q, Check&& check) {
    LemmaTally tally;
    tally.name = std::move(name);
    const Alphabet a(q);
    LengthSet all;
    for (std::size_t l = 1; 2 * l <= budget; ++l) all.insert(l);
    for (std::size_t len = 2; len <= budget; ++len)
        for_each_codeword(len, a, {}, [&](const Word& z) {
            const auto sq = find_squares(z, all);
            for (const Square& s : sq)
                for (const Square& t : sq) {
                    if (!midcovers(s.span(), t.span()) || !midcovers(t.span(), s.span())) continue;
                    if (!check(z, s, t)) continue;
                    ++tally.cases;
                }
        });
    return tally;
}

}  // namespace detail

/// Equal-length squares that mid-cover each other de-duplicate to the same word.
inline LemmaTally check_lemma_eqmidcover(std::size_t budget, unsigned q = 3) {
    std::uint64_t failures = 0;
    std::string first;
    LemmaTally tally = detail::for_each_midcover_pair(
        "equal-length-midcover", budget, q, [&](const Word& z, const Square& s, const Square& t) {
            if (s.length != t.length || s.start > t.start) return false;
            if (remove_duplication(z, s.start, s.length) != remove_duplication(z, t.start, t.length)) {
                ++failures;
                if (first.empty())
                    first = format_word(z, Alphabet(q)) + " @" + std::to_string(s.start) + "," +
                            std::to_string(t.start) + " l=" + std::to_string(s.length);
            }
            return true;
        });
    tally.failures = failures;
    tally.first_failure = first;
    return tally;
}

/// For |v| > |v'| mutually mid-covering, removing one copy of v' leaves a
/// square of half-length |v| - |v'|.
inline LemmaTally check_lemma_neqmidcover(std::size_t budget, unsigned q = 3) {
    std::uint64_t failures = 0;
    std::string first;
    LemmaTally tally = detail::for_each_midcover_pair(
        "unequal-length-midcover", budget, q, [&](const Word& z, const Square& s, const Square& t) {
            if (s.length <= t.length) return false;
            const Word rest = remove_duplication(z, t.start, t.length);
            if (!has_square(rest, {s.length - t.length})) {
                ++failures;
                if (first.empty())
                    first = format_word(z, Alphabet(q)) + " v@" + std::to_string(s.start) + "/" +
                            std::to_string(s.length) + " v'@" + std::to_string(t.start) + "/" +
                            std::to_string(t.length);
            }
            return true;
        });
    tally.failures = failures;
    tally.first_failure = first;
    return tally;
}

// ---------------------------------------------------------------------------
// Report text: one key=value per line in a fixed order.

inline void write_report(std::ostream& os, const VerificationReport& r, bool include_timing = true) {
    const Alphabet a(r.q);
    os << "check=" << r.label << '\n';
    os << "model=" << to_string(r.model) << '\n';
    os << "n=" << r.n << '\n';
    os << "q=" << r.q << '\n';
    os << "L=" << format_lengths(r.lengths) << '\n';
    os << "F=" << format_lengths(r.forbidden) << '\n';
    os << "max_len=" << r.max_len << '\n';
    os << "max_events=" << (r.max_events ? std::to_string(*r.max_events) : std::string("unbounded")) << '\n';
    os << "codewords=" << r.codewords << '\n';
    os << "pairs_checked=" << r.pairs_checked << '\n';
    os << "cone_members=" << r.cone_members << '\n';
    os << "collision_pairs=" << r.collision_pairs << '\n';
    for (const Collision& c : r.collisions)
        os << "collision=" << format_word(c.x, a) << ' ' << format_word(c.y, a) << ' ' << format_word(c.witness, a)
           << '\n';
    for (const LemmaTally& t : r.lemma_checks)
        os << "lemma=" << t.name << " cases=" << t.cases << " failures=" << t.failures
           << (t.first_failure.empty() ? "" : " first=" + t.first_failure) << '\n';
    os << "seed=" << r.seed << '\n';
    os << "bound=cones truncated at max_len; no collision corroborates, a collision refutes\n";
    os << "result=" << (r.passed() ? "pass" : "fail") << '\n';
    if (include_timing) os << "elapsed_ms=" << r.elapsed_ms << '\n';
}

inline std::string report_text(const VerificationReport& r, bool include_timing = true) {
    std::ostringstream os;
    write_report(os, r, include_timing);
    return os.str();
}

}  // namespace tdcode
