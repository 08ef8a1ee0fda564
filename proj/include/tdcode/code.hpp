#pragma once

// Duplication-free codes C_F: forbidden-length sets for the three channel
// constructions, membership, enumeration, counting and rate.

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tdcode/error.hpp"
#include "tdcode/word.hpp"

namespace tdcode {

enum class Construction {
    disjoint,      // F = L u L^delta
    equal_length,  // F = L, requires l >= 2l' for l > l' in L
    combined,      // disjoint equal-length, F = L
};

inline const char* to_string(Construction c) {
    switch (c) {
        case Construction::disjoint: return "disjoint";
        case Construction::equal_length: return "equal_length";
        case Construction::combined: return "combined";
    }
    return "?";
}

struct LengthSpec {
    LengthSet lengths;  // L
    LengthSet delta;    // { |l - l'| : l != l' in L }
    LengthSet forbidden;  // F
    Construction construction = Construction::disjoint;
};

inline LengthSet difference_set(const LengthSet& lengths) {
    LengthSet d;
    for (auto a = lengths.begin(); a != lengths.end(); ++a)
        for (auto b = std::next(a); b != lengths.end(); ++b) d.insert(*b - *a);
    return d;
}

/// Throws separation_violation unless l >= 2l' for every l > l' in L.
inline void check_separation(const LengthSet& lengths) {
    for (auto a = lengths.begin(); a != lengths.end(); ++a)
        for (auto b = std::next(a); b != lengths.end(); ++b)
            if (*b < 2 * *a)
                throw error(errc::separation_violation,
                            std::to_string(*b) + " < 2*" + std::to_string(*a) + " in L={" +
                                format_lengths(lengths) + "}");
}

inline LengthSpec make_length_spec(const LengthSet& lengths, Construction c) {
    if (lengths.empty()) throw error(errc::empty_length_set, "L must be nonempty");
    if (*lengths.begin() == 0) throw error(errc::invalid_argument, "duplication lengths must be >= 1");
    if (c == Construction::equal_length) check_separation(lengths);
    LengthSpec spec{lengths, difference_set(lengths), lengths, c};
    if (c == Construction::disjoint) spec.forbidden.insert(spec.delta.begin(), spec.delta.end());
    return spec;
}

inline bool is_codeword(const Word& x, const LengthSet& forbidden) { return !has_square(x, forbidden); }

/// A fixed-length code with its members materialized in lexicographic order.
struct Code {
    std::size_t n = 0;
    Alphabet alphabet{2};
    LengthSet forbidden;
    std::vector<Word> members;
};

inline constexpr std::size_t default_member_cap = 10'000'000;

namespace detail {

// Depth-first over prefixes in lexicographic order. A prefix holding a
// forbidden square is abandoned, since every extension keeps it; extensions
// only need checking for squares ending at the new letter.
template <class Visit>
void for_each_codeword(std::size_t n, const Alphabet& a, const LengthSet& forbidden, Visit&& visit) {
    Word w;
    w.reserve(n);
    if (n == 0) {
        visit(w);
        return;
    }
    std::vector<unsigned> next(n + 1, 0);
    std::size_t depth = 0;  // == w.size()
    while (true) {
        if (next[depth] == a.size()) {
            if (depth == 0) return;
            w.pop_back();
            --depth;
            continue;
        }
        w.push_back(static_cast<Letter>(next[depth]++));
        if (has_suffix_square(w, forbidden)) {
            w.pop_back();
            continue;
        }
        if (w.size() == n) {
            visit(w);
            w.pop_back();
            continue;
        }
        ++depth;
        next[depth] = 0;
    }
}

}  // namespace detail

inline Code enumerate_code(std::size_t n, const Alphabet& a, const LengthSet& forbidden,
                           std::size_t cap = default_member_cap) {
    Code c{n, a, forbidden, {}};
    detail::for_each_codeword(n, a, forbidden, [&](const Word& w) {
        if (c.members.size() == cap)
            throw error(errc::resource_limit,
                        "code size exceeds member cap " + std::to_string(cap) + "; use counting mode");
        c.members.push_back(w);
    });
    return c;
}

inline std::uint64_t count_code(std::size_t n, const Alphabet& a, const LengthSet& forbidden) {
    std::uint64_t count = 0;
    detail::for_each_codeword(n, a, forbidden, [&](const Word&) { ++count; });
    return count;
}

/// (1/n) log_q |C|.
inline double rate(std::uint64_t code_size, std::size_t n, unsigned q) {
    if (code_size == 0) throw error(errc::empty_code, "rate of an empty code is undefined");
    if (n == 0) throw error(errc::invalid_argument, "rate needs n >= 1");
    if (q < 2) throw error(errc::invalid_argument, "rate needs q >= 2");
    return std::log(static_cast<double>(code_size)) / (static_cast<double>(n) * std::log(static_cast<double>(q)));
}

// ---------------------------------------------------------------------------
// Codeword file: "# n=<n> q=<q> F=<list>" then one word per line.

inline void write_code(std::ostream& os, const Code& c) {
    os << "# n=" << c.n << " q=" << c.alphabet.size() << " F=" << format_lengths(c.forbidden) << '\n';
    for (const Word& w : c.members) os << format_word(w, c.alphabet) << '\n';
}

inline Code read_code(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw error(errc::parse_error, "empty codeword file");
    std::size_t n = 0;
    unsigned q = 0;
    std::string f;
    {
        std::istringstream hs(line);
        std::string hash, nf, qf, ff;
        hs >> hash >> nf >> qf >> ff;
        if (hash != "#" || nf.rfind("n=", 0) != 0 || qf.rfind("q=", 0) != 0 || ff.rfind("F=", 0) != 0)
            throw error(errc::parse_error, "bad codeword file header \"" + line + "\"");
        try {
            n = std::stoul(nf.substr(2));
            q = static_cast<unsigned>(std::stoul(qf.substr(2)));
        } catch (const std::exception&) {
            throw error(errc::parse_error, "bad codeword file header \"" + line + "\"");
        }
        f = ff.substr(2);
    }
    Code c{n, Alphabet(q), parse_lengths(f), {}};
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        Word w = parse_word(line, c.alphabet);
        if (w.size() != n)
            throw error(errc::parse_error, "codeword \"" + line + "\" does not have length " + std::to_string(n));
        c.members.push_back(std::move(w));
    }
    return c;
}

/// Single-line record "n=.. q=.. F=.. count=.. rate=..". An empty code has
/// no rate and reports rate=none.
inline std::string count_record(std::size_t n, unsigned q, const LengthSet& forbidden, std::uint64_t count) {
    std::ostringstream os;
    os << "n=" << n << " q=" << q << " F=" << format_lengths(forbidden) << " count=" << count << " rate=";
    if (count == 0 || n == 0) {
        os << "none";
    } else {
        os.precision(10);
        os << rate(count, n, q);
    }
    return os.str();
}

}  // namespace tdcode
