#pragma once

// Words over Z_q, factor spans, tandem duplication and square detection.
//
// Index convention: Word::operator[] is 0-based like any container. Every
// position that crosses the API as a *position* (FactorSpan, Square::start,
// remove_duplication's span_start) is 1-based, so that pos(.) and midp(.)
// values read exactly as in the usual combinatorics-on-words notation.
// DupEvent::prefix_len is a length, not a position.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdcode/error.hpp"

namespace tdcode {

using Letter = std::uint8_t;
using LengthSet = std::set<std::size_t>;

class Alphabet {
public:
    static constexpr unsigned max_size = 256;

    explicit Alphabet(unsigned q) : q_(q) {
        if (q < 2 || q > max_size)
            throw error(errc::invalid_argument,
                        "alphabet size must lie in [2, 256], got " + std::to_string(q));
    }

    unsigned size() const noexcept { return q_; }
    bool contains(Letter a) const noexcept { return a < q_; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    unsigned q_;
};

class Word {
public:
    using value_type = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    template <class It>
    Word(It first, It last) : letters_(first, last) {}

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter& operator[](std::size_t i) { return letters_[i]; }

    const_iterator begin() const noexcept { return letters_.begin(); }
    const_iterator end() const noexcept { return letters_.end(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    const Letter* data() const noexcept { return letters_.data(); }

    void push_back(Letter a) { letters_.push_back(a); }
    void pop_back() { letters_.pop_back(); }
    void truncate(std::size_t n) { letters_.resize(std::min(n, letters_.size())); }
    void reserve(std::size_t n) { letters_.reserve(n); }
    void append(std::span<const Letter> s) { letters_.insert(letters_.end(), s.begin(), s.end()); }
    void append(const Word& w) { append(w.letters()); }

    /// Factor of `len` letters starting after `offset` letters (0-based offset).
    Word slice(std::size_t offset, std::size_t len) const {
        return Word(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                    letters_.begin() + static_cast<std::ptrdiff_t>(offset + len));
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

private:
    std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) {
    Word r;
    r.reserve(a.size() + b.size());
    r.append(a);
    r.append(b);
    return r;
}

/// Shorter words first, then lexicographic.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        return std::hash<std::string_view>{}(
            std::string_view(reinterpret_cast<const char*>(w.data()), w.size()));
    }
};

inline bool in_alphabet(const Word& w, const Alphabet& a) {
    return std::all_of(w.begin(), w.end(), [&](Letter c) { return a.contains(c); });
}

// ---------------------------------------------------------------------------
// Text format: decimal digits for q <= 10, comma-separated integers otherwise.

inline std::string format_word(const Word& w, const Alphabet& a) {
    std::string out;
    if (a.size() <= 10) {
        out.reserve(w.size());
        for (Letter c : w) out.push_back(static_cast<char>('0' + c));
        return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(w[i]);
    }
    return out;
}

inline Word parse_word(std::string_view text, const Alphabet& a) {
    Word w;
    auto check = [&](unsigned v) {
        if (v >= a.size())
            throw error(errc::invalid_letter, "letter " + std::to_string(v) +
                                                  " outside alphabet of size " +
                                                  std::to_string(a.size()));
        w.push_back(static_cast<Letter>(v));
    };
    if (a.size() <= 10) {
        for (char ch : text) {
            if (ch < '0' || ch > '9')
                throw error(errc::parse_error, "unexpected character '" + std::string(1, ch) +
                                                   "' in word \"" + std::string(text) + "\"");
            check(static_cast<unsigned>(ch - '0'));
        }
        return w;
    }
    if (text.empty()) return w;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            tok.size() > 3)
            throw error(errc::parse_error, "bad letter token \"" + std::string(tok) + "\"");
        check(static_cast<unsigned>(std::stoul(std::string(tok))));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return w;
}

inline std::string format_lengths(const LengthSet& s) {
    std::string out;
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out.push_back(',');
        out += std::to_string(*it);
    }
    return out;
}

/// Parses "2,5,7" (empty text gives the empty set). Members must be >= 1.
inline LengthSet parse_lengths(std::string_view text) {
    LengthSet s;
    if (text.empty()) return s;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        if (tok.empty() || tok.size() > 9 ||
            !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw error(errc::parse_error, "bad length token \"" + std::string(tok) + "\"");
        std::size_t v = std::stoul(std::string(tok));
        if (v == 0) throw error(errc::invalid_argument, "duplication lengths must be >= 1");
        s.insert(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Spans and events

/// Closed interval [start, end] of 1-based positions. The midpoint may be a
/// half-integer, so it is exposed doubled.
struct FactorSpan {
    std::size_t start = 1;
    std::size_t end = 1;

    constexpr std::size_t midpoint2() const noexcept { return start + end; }
    constexpr std::size_t length() const noexcept { return end - start + 1; }

    friend constexpr bool operator==(const FactorSpan&, const FactorSpan&) = default;
    friend constexpr auto operator<=>(const FactorSpan&, const FactorSpan&) = default;
};

inline FactorSpan make_span(std::size_t start, std::size_t end) {
    if (start < 1 || start > end)
        throw error(errc::invalid_argument,
                    "bad span [" + std::to_string(start) + "," + std::to_string(end) + "]");
    return {start, end};
}

/// A square vv with |v| = length whose left copy starts at 1-based `start`.
struct Square {
    std::size_t start = 1;
    std::size_t length = 1;

    FactorSpan span() const noexcept { return {start, start + 2 * length - 1}; }

    friend constexpr bool operator==(const Square&, const Square&) = default;
    friend constexpr auto operator<=>(const Square&, const Square&) = default;
};

/// T_{i,l}: duplicate the l letters that follow a prefix of length i.
struct DupEvent {
    std::size_t prefix_len = 0;
    std::size_t dup_len = 1;

    friend constexpr bool operator==(const DupEvent&, const DupEvent&) = default;
};

inline Word apply_duplication(const Word& x, DupEvent e) {
    if (e.dup_len == 0) throw error(errc::invalid_argument, "duplication length must be >= 1");
    if (x.size() < e.prefix_len + e.dup_len)
        throw error(errc::word_too_short,
                    "T_{" + std::to_string(e.prefix_len) + "," + std::to_string(e.dup_len) +
                        "} undefined on a word of length " + std::to_string(x.size()));
    const auto src = x.letters();
    const std::size_t cut = e.prefix_len + e.dup_len;
    Word z;
    z.reserve(x.size() + e.dup_len);
    z.append(src.first(cut));
    z.append(src.subspan(e.prefix_len, e.dup_len));
    z.append(src.subspan(cut));
    return z;
}

/// True iff z has a square of half-length len at 0-based offset off.
inline bool is_square_at(const Word& z, std::size_t off, std::size_t len) {
    if (len == 0 || off + 2 * len > z.size()) return false;
    return std::equal(z.begin() + static_cast<std::ptrdiff_t>(off),
                      z.begin() + static_cast<std::ptrdiff_t>(off + len),
                      z.begin() + static_cast<std::ptrdiff_t>(off + len));
}

/// De-duplication: replaces the square starting at 1-based span_start by a
/// single copy of its root.
inline Word remove_duplication(const Word& z, std::size_t span_start, std::size_t len) {
    if (span_start < 1 || len == 0 || span_start - 1 + 2 * len > z.size())
        throw error(errc::word_too_short, "no room for a square of length " + std::to_string(len) +
                                              " at position " + std::to_string(span_start));
    const std::size_t off = span_start - 1;
    if (!is_square_at(z, off, len))
        throw error(errc::not_a_square, "blocks at position " + std::to_string(span_start) +
                                            " of length " + std::to_string(len) + " differ");
    const auto src = z.letters();
    Word r;
    r.reserve(z.size() - len);
    r.append(src.first(off + len));
    r.append(src.subspan(off + 2 * len));
    return r;
}

/// All squares whose half-length is in `lengths`, ordered by (start, length).
/// Empty iff z is lengths-duplication-free.
inline std::vector<Square> find_squares(const Word& z, const LengthSet& lengths) {
    std::vector<Square> out;
    for (std::size_t off = 0; off < z.size(); ++off)
        for (std::size_t len : lengths) {
            if (off + 2 * len > z.size()) break;
            if (is_square_at(z, off, len)) out.push_back({off + 1, len});
        }
    return out;
}

inline bool has_square(const Word& z, const LengthSet& lengths) {
    for (std::size_t len : lengths)
        for (std::size_t off = 0; off + 2 * len <= z.size(); ++off)
            if (is_square_at(z, off, len)) return true;
    return false;
}

/// A square ending exactly at the last letter of z, for some length in F.
/// This is the only check needed when z was F-free before its last letter.
inline bool has_suffix_square(const Word& z, const LengthSet& lengths) {
    for (std::size_t len : lengths) {
        if (2 * len > z.size()) break;
        if (is_square_at(z, z.size() - 2 * len, len)) return true;
    }
    return false;
}

/// midp(inner) lies in pos(outer). Reflexive, not symmetric.
constexpr bool midcovers(FactorSpan outer, FactorSpan inner) noexcept {
    return 2 * outer.start <= inner.midpoint2() && inner.midpoint2() <= 2 * outer.end;
}

constexpr bool spans_disjoint(FactorSpan a, FactorSpan b) noexcept {
    return a.end < b.start || b.end < a.start;
}

}  // namespace tdcode
