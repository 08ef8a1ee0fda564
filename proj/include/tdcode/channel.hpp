#pragma once

// Tandem-duplication channels: sequential traces over T_L, the one-shot
// disjoint channel (z = x_1 v_1^2 x_2 ... x_t v_t^2 x_{t+1}), the
// equal-length channel and their combination, plus a seeded sampler.

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tdcode/error.hpp"
#include "tdcode/word.hpp"

namespace tdcode {

enum class Model {
    unrestricted,
    disjoint,
    equal_length,
    disjoint_equal_length,
};

inline const char* to_string(Model m) {
    switch (m) {
        case Model::unrestricted: return "unrestricted";
        case Model::disjoint: return "disjoint";
        case Model::equal_length: return "equal_length";
        case Model::disjoint_equal_length: return "disjoint_equal_length";
    }
    return "?";
}

inline Model parse_model(std::string_view s) {
    if (s == "unrestricted") return Model::unrestricted;
    if (s == "disjoint") return Model::disjoint;
    if (s == "equal_length") return Model::equal_length;
    if (s == "disjoint_equal_length") return Model::disjoint_equal_length;
    throw error(errc::parse_error, "unknown model \"" + std::string(s) + "\"");
}

constexpr bool is_disjoint(Model m) noexcept {
    return m == Model::disjoint || m == Model::disjoint_equal_length;
}
constexpr bool is_equal_length(Model m) noexcept {
    return m == Model::equal_length || m == Model::disjoint_equal_length;
}

struct CorruptionTrace {
    std::vector<DupEvent> events;  // in application order
    Model model = Model::unrestricted;
    LengthSet lengths;
};

/// Checks the model's structural invariants: lengths in L, one common length
/// for equal-length models, and for disjoint models events listed right to
/// left over non-overlapping blocks of the original word (so no application
/// shifts a later one).
inline void validate_trace(const CorruptionTrace& trace) {
    const auto& ev = trace.events;
    for (const DupEvent& e : ev)
        if (!trace.lengths.contains(e.dup_len))
            throw error(errc::model_violation, "duplication length " + std::to_string(e.dup_len) + " not in L={" +
                                                   format_lengths(trace.lengths) + "}");
    if (is_equal_length(trace.model))
        for (const DupEvent& e : ev)
            if (e.dup_len != ev.front().dup_len)
                throw error(errc::model_violation, "equal-length trace mixes lengths");
    if (is_disjoint(trace.model))
        for (std::size_t k = 1; k < ev.size(); ++k)
            if (ev[k].prefix_len + ev[k].dup_len > ev[k - 1].prefix_len)
                throw error(errc::model_violation,
                            "disjoint trace events must be right-to-left over non-overlapping blocks");
}

inline Word apply_trace(const Word& x, const CorruptionTrace& trace) {
    validate_trace(trace);
    Word z = x;
    for (const DupEvent& e : trace.events) z = apply_duplication(z, e);
    return z;
}

/// x = gaps[0] blocks[0] gaps[1] ... blocks[t-1] gaps[t].
struct DisjointPlan {
    std::vector<Word> gaps{Word{}};
    std::vector<Word> blocks;

    std::size_t size() const noexcept { return blocks.size(); }
};

inline Word plan_source(const DisjointPlan& plan) {
    Word x;
    for (std::size_t k = 0; k < plan.blocks.size(); ++k) {
        x.append(plan.gaps[k]);
        x.append(plan.blocks[k]);
    }
    x.append(plan.gaps.back());
    return x;
}

inline void validate_plan(const DisjointPlan& plan) {
    if (plan.gaps.size() != plan.blocks.size() + 1)
        throw error(errc::malformed_plan, "a plan with t blocks needs t+1 gaps");
    for (const Word& b : plan.blocks)
        if (b.empty()) throw error(errc::malformed_plan, "duplicated blocks must be nonempty");
}

inline Word apply_disjoint(const Word& x, const DisjointPlan& plan) {
    validate_plan(plan);
    if (plan_source(plan) != x) throw error(errc::malformed_plan, "gaps and blocks do not concatenate to x");
    Word z;
    for (std::size_t k = 0; k < plan.blocks.size(); ++k) {
        z.append(plan.gaps[k]);
        z.append(plan.blocks[k]);
        z.append(plan.blocks[k]);
    }
    z.append(plan.gaps.back());
    return z;
}

/// Builds a plan from ordered, non-overlapping (0-based offset, length)
/// blocks of x.
inline DisjointPlan make_plan(const Word& x, const std::vector<std::pair<std::size_t, std::size_t>>& blocks) {
    DisjointPlan plan;
    plan.gaps.clear();
    std::size_t pos = 0;
    for (auto [off, len] : blocks) {
        if (off < pos || len == 0 || off + len > x.size())
            throw error(errc::malformed_plan, "blocks must be nonempty, ordered and non-overlapping within x");
        plan.gaps.push_back(x.slice(pos, off - pos));
        plan.blocks.push_back(x.slice(off, len));
        pos = off + len;
    }
    plan.gaps.push_back(x.slice(pos, x.size() - pos));
    return plan;
}

/// The same corruption as a sequential trace, rightmost block first.
inline CorruptionTrace plan_to_trace(const DisjointPlan& plan, Model model, const LengthSet& lengths) {
    validate_plan(plan);
    CorruptionTrace trace{{}, model, lengths};
    std::size_t pos = 0;
    std::vector<DupEvent> ev;
    for (std::size_t k = 0; k < plan.blocks.size(); ++k) {
        pos += plan.gaps[k].size();
        ev.push_back({pos, plan.blocks[k].size()});
        pos += plan.blocks[k].size();
    }
    trace.events.assign(ev.rbegin(), ev.rend());
    return trace;
}

// ---------------------------------------------------------------------------
// Sampling

/// mt19937_64 (fully specified by the standard) with rejection-based bounded
/// draws, so streams are identical across standard libraries.
class Sampler {
public:
    static constexpr std::string_view generator_name = "mt19937_64-v1";

    explicit Sampler(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw error(errc::invalid_argument, "empty range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t v;
        do v = engine_();
        while (v >= limit);
        return v % bound;
    }

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

struct Corruption {
    Word word;
    CorruptionTrace trace;            // always reproduces `word` via apply_trace
    std::optional<DisjointPlan> plan;  // set for disjoint models
    std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<std::size_t> lengths_at_most(const LengthSet& lengths, std::size_t bound) {
    std::vector<std::size_t> out;
    for (std::size_t l : lengths)
        if (l <= bound) out.push_back(l);
    return out;
}

// Places blocks of the given lengths left to right, spreading the slack
// |x| - sum(lengths) over the t+1 gaps one gap at a time.
inline DisjointPlan place_blocks(const Word& x, const std::vector<std::size_t>& lens, Sampler& rng) {
    std::size_t total = 0;
    for (std::size_t l : lens) total += l;
    std::size_t slack = x.size() - total;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t pos = 0;
    for (std::size_t l : lens) {
        const std::size_t gap = rng.between(0, slack);
        slack -= gap;
        pos += gap;
        blocks.emplace_back(pos, l);
        pos += l;
    }
    return make_plan(x, blocks);
}

}  // namespace detail

inline constexpr int max_length_draws = 10'000;

/// Deterministic in (x, model, L, t, seed).
inline Corruption sample_corruption(const Word& x, Model model, const LengthSet& lengths, std::size_t t,
                                    std::uint64_t seed) {
    if (lengths.empty()) throw error(errc::empty_length_set, "L must be nonempty");
    Sampler rng(seed);
    Corruption out{x, {{}, model, lengths}, std::nullopt, seed};
    if (t == 0) {
        if (is_disjoint(model)) out.plan = make_plan(x, {});
        return out;
    }
    switch (model) {
        case Model::unrestricted: {
            Word z = x;
            for (std::size_t k = 0; k < t; ++k) {
                auto ok = detail::lengths_at_most(lengths, z.size());
                if (ok.empty())
                    throw error(errc::infeasible_plan, "no length in L fits a word of length " +
                                                           std::to_string(z.size()));
                const std::size_t l = rng.pick(ok);
                const DupEvent e{rng.between(0, z.size() - l), l};
                out.trace.events.push_back(e);
                z = apply_duplication(z, e);
            }
            out.word = std::move(z);
            return out;
        }
        case Model::equal_length: {
            auto ok = detail::lengths_at_most(lengths, x.size());
            if (ok.empty())
                throw error(errc::infeasible_plan, "no length in L fits a word of length " + std::to_string(x.size()));
            const std::size_t l = rng.pick(ok);
            Word z = x;
            for (std::size_t k = 0; k < t; ++k) {
                const DupEvent e{rng.between(0, z.size() - l), l};
                out.trace.events.push_back(e);
                z = apply_duplication(z, e);
            }
            out.word = std::move(z);
            return out;
        }
        case Model::disjoint:
        case Model::disjoint_equal_length: {
            std::vector<std::size_t> lens(t);
            if (model == Model::disjoint_equal_length) {
                std::vector<std::size_t> ok;
                for (std::size_t l : lengths)
                    if (l * t <= x.size()) ok.push_back(l);
                if (ok.empty())
                    throw error(errc::infeasible_plan, std::to_string(t) + " disjoint equal-length blocks do not fit in " +
                                                           std::to_string(x.size()) + " letters");
                std::fill(lens.begin(), lens.end(), rng.pick(ok));
            } else {
                if (*lengths.begin() * t > x.size())
                    throw error(errc::infeasible_plan, std::to_string(t) + " disjoint blocks do not fit in " +
                                                           std::to_string(x.size()) + " letters");
                const std::vector<std::size_t> all(lengths.begin(), lengths.end());
                for (int draw = 0;; ++draw) {
                    if (draw == max_length_draws)
                        throw error(errc::infeasible_plan, "no feasible block lengths after " +
                                                               std::to_string(max_length_draws) + " draws");
                    std::size_t total = 0;
                    for (auto& l : lens) total += (l = rng.pick(all));
                    if (total <= x.size()) break;
                }
            }
            DisjointPlan plan = detail::place_blocks(x, lens, rng);
            out.word = apply_disjoint(x, plan);
            out.trace = plan_to_trace(plan, model, lengths);
            out.plan = std::move(plan);
            return out;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trace file: "# model=<m> L=<list> seed=<s>", then "i,l" lines in
// application order. Plans follow as alternating "gap:<word>" / "dup:<word>"
// lines ending with the last gap.

inline void write_trace(std::ostream& os, const CorruptionTrace& trace, std::uint64_t seed, const Alphabet& a,
                        const DisjointPlan* plan = nullptr) {
    os << "# model=" << to_string(trace.model) << " L=" << format_lengths(trace.lengths) << " seed=" << seed << '\n';
    for (const DupEvent& e : trace.events) os << e.prefix_len << ',' << e.dup_len << '\n';
    if (plan) {
        for (std::size_t k = 0; k < plan->blocks.size(); ++k) {
            os << "gap:" << format_word(plan->gaps[k], a) << '\n';
            os << "dup:" << format_word(plan->blocks[k], a) << '\n';
        }
        os << "gap:" << format_word(plan->gaps.back(), a) << '\n';
    }
}

struct TraceRecord {
    CorruptionTrace trace;
    std::uint64_t seed = 0;
    std::optional<DisjointPlan> plan;
};

/// Reads one trace record; stops before the next "# model=" header.
inline TraceRecord read_trace(std::istream& is, const Alphabet& a) {
    std::string line;
    if (!std::getline(is, line)) throw error(errc::parse_error, "empty trace");
    TraceRecord rec;
    {
        std::istringstream hs(line);
        std::string hash, mf, lf, sf;
        hs >> hash >> mf >> lf >> sf;
        if (hash != "#" || mf.rfind("model=", 0) != 0 || lf.rfind("L=", 0) != 0 || sf.rfind("seed=", 0) != 0)
            throw error(errc::parse_error, "bad trace header \"" + line + "\"");
        rec.trace.model = parse_model(mf.substr(6));
        rec.trace.lengths = parse_lengths(lf.substr(2));
        try {
            rec.seed = std::stoull(sf.substr(5));
        } catch (const std::exception&) {
            throw error(errc::parse_error, "bad seed in \"" + line + "\"");
        }
    }
    std::vector<Word> pieces;
    bool expect_gap = true;
    while (is.peek() != std::char_traits<char>::eof() && is.peek() != '#') {
        std::getline(is, line);
        if (line.empty()) continue;
        if (line.rfind("gap:", 0) == 0 || line.rfind("dup:", 0) == 0) {
            const bool gap = line[0] == 'g';
            if (gap != expect_gap) throw error(errc::parse_error, "plan lines must alternate gap/dup");
            expect_gap = !expect_gap;
            pieces.push_back(parse_word(std::string_view(line).substr(4), a));
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw error(errc::parse_error, "bad trace line \"" + line + "\"");
        try {
            rec.trace.events.push_back({std::stoul(line.substr(0, comma)), std::stoul(line.substr(comma + 1))});
        } catch (const std::exception&) {
            throw error(errc::parse_error, "bad trace line \"" + line + "\"");
        }
    }
    if (!pieces.empty()) {
        if (expect_gap) throw error(errc::parse_error, "plan must end with a gap line");
        DisjointPlan plan;
        plan.gaps.clear();
        for (std::size_t k = 0; k < pieces.size(); ++k) (k % 2 ? plan.blocks : plan.gaps).push_back(pieces[k]);
        rec.plan = std::move(plan);
    }
    return rec;
}

}  // namespace tdcode
