#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "tdcode/code.hpp"

using namespace tdcode;
using oracle::W;

namespace {

std::vector<LengthSet> subsets_of_1_to_4() {
    std::vector<LengthSet> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        LengthSet s;
        for (std::size_t b = 0; b < 4; ++b)
            if (mask & (1u << b)) s.insert(b + 1);
        out.push_back(s);
    }
    return out;
}

TEST(LengthSpec, DisjointUsesDifferenceSet) {
    const auto spec = make_length_spec({2, 5, 7}, Construction::disjoint);
    EXPECT_EQ(spec.delta, (LengthSet{2, 3, 5}));
    EXPECT_EQ(spec.forbidden, (LengthSet{2, 3, 5, 7}));
    EXPECT_TRUE(std::includes(spec.forbidden.begin(), spec.forbidden.end(), spec.lengths.begin(), spec.lengths.end()));
    EXPECT_TRUE(std::includes(spec.forbidden.begin(), spec.forbidden.end(), spec.delta.begin(), spec.delta.end()));
}

TEST(LengthSpec, FirstSegmentOfNaturalsIsClosed) {
    for (std::size_t l = 1; l <= 9; ++l) {
        LengthSet L;
        for (std::size_t k = 1; k <= l; ++k) L.insert(k);
        EXPECT_EQ(make_length_spec(L, Construction::disjoint).forbidden, L);
    }
}

TEST(LengthSpec, EqualLengthSeparation) {
    EXPECT_EQ(make_length_spec({4}, Construction::equal_length).forbidden, (LengthSet{4}));
    EXPECT_NO_THROW(make_length_spec({1, 2, 4, 9}, Construction::equal_length));
    try {
        make_length_spec({2, 3}, Construction::equal_length);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::separation_violation);
    }
    // the combined construction carries no separation requirement
    EXPECT_EQ(make_length_spec({2, 3}, Construction::combined).forbidden, (LengthSet{2, 3}));
}

TEST(LengthSpec, RejectsEmptyL) {
    try {
        make_length_spec({}, Construction::disjoint);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::empty_length_set);
    }
}

TEST(IsCodeword, Examples) {
    EXPECT_TRUE(is_codeword(W("054213"), {2}));
    EXPECT_FALSE(is_codeword(W("05454213"), {2}));
    EXPECT_TRUE(is_codeword(W("0101"), {1}));
    EXPECT_FALSE(is_codeword(W("0010"), {1}));
}

TEST(EnumerateCode, SmallExamples) {
    const auto c = enumerate_code(3, Alphabet(2), {1});
    EXPECT_EQ(c.members, (std::vector<Word>{W("010"), W("101")}));
    EXPECT_TRUE(enumerate_code(4, Alphabet(2), {1, 2}).members.empty());
    EXPECT_EQ(enumerate_code(5, Alphabet(3), {1, 2}).members.size(), 30u);
    EXPECT_EQ(enumerate_code(0, Alphabet(3), {1}).members, std::vector<Word>{Word{}});
}

TEST(EnumerateCode, AlternatingCountLaw) {
    for (unsigned q : {2u, 3u, 4u})
        for (std::size_t n = 1; n <= 7; ++n)
            EXPECT_EQ(count_code(n, Alphabet(q), {1}), q * static_cast<std::uint64_t>(std::pow(q - 1, n - 1)));
}

TEST(EnumerateCode, CapRaisesResourceLimit) {
    try {
        enumerate_code(6, Alphabet(3), {1}, 10);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::resource_limit);
    }
    EXPECT_NO_THROW(enumerate_code(6, Alphabet(3), {1}, 96));
}

TEST(EnumerateCode, EqualsNaiveFilter) {
    for (unsigned q : {2u, 3u})
        for (std::size_t n = 0; n <= 8; ++n)
            for (const auto& F : subsets_of_1_to_4()) {
                const auto got = enumerate_code(n, Alphabet(q), F).members;
                ASSERT_EQ(got, oracle::naive_code(n, q, F)) << "n=" << n << " q=" << q << " F=" << format_lengths(F);
                ASSERT_EQ(count_code(n, Alphabet(q), F), got.size());
            }
}

TEST(EnumerateCode, LargerForbiddenSetsShrinkTheCode) {
    const auto subsets = subsets_of_1_to_4();
    for (unsigned q : {2u, 3u})
        for (std::size_t n = 1; n <= 8; ++n)
            for (const auto& F : subsets)
                for (const auto& G : subsets) {
                    if (!std::includes(G.begin(), G.end(), F.begin(), F.end())) continue;
                    const auto big = enumerate_code(n, Alphabet(q), F).members;
                    const auto small = enumerate_code(n, Alphabet(q), G).members;
                    ASSERT_TRUE(std::includes(big.begin(), big.end(), small.begin(), small.end()));
                }
}

TEST(EnumerateCode, ClosedUnderReversalAndLetterPermutation) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const LengthSet& F : {LengthSet{1}, LengthSet{2}, LengthSet{1, 3}, LengthSet{2, 3, 4}}) {
            const auto c = enumerate_code(n, Alphabet(3), F).members;
            std::vector<Letter> perm{0, 1, 2};
            do {
                std::vector<Word> mapped;
                for (const Word& w : c) {
                    Word m;
                    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) m.push_back(perm[*it]);
                    mapped.push_back(m);
                }
                std::sort(mapped.begin(), mapped.end());
                ASSERT_EQ(mapped, c);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
}

TEST(CountCode, Examples) {
    EXPECT_EQ(count_code(3, Alphabet(2), {1}), 2u);
    for (unsigned q : {2u, 3u, 7u}) EXPECT_EQ(count_code(1, Alphabet(q), {1, 2, 3}), q);
    EXPECT_EQ(count_code(6, Alphabet(3), {1, 2, 3}), 42u);
}

TEST(Rate, Values) {
    EXPECT_NEAR(rate(2, 3, 2), 1.0 / 3.0, 1e-12);
    for (unsigned q : {2u, 3u, 5u}) EXPECT_NEAR(rate(q, 1, q), 1.0, 1e-12);
    EXPECT_NEAR(rate(30, 5, 3), 0.6191806548578769, 1e-12);
    try {
        rate(0, 5, 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::empty_code);
    }
}

TEST(CodewordFile, WriteReadRoundTrip) {
    const auto c = enumerate_code(5, Alphabet(3), {1, 2});
    std::stringstream ss;
    write_code(ss, c);
    EXPECT_EQ(ss.str().substr(0, 18), "# n=5 q=3 F=1,2\n01");
    const Code back = read_code(ss);
    EXPECT_EQ(back.n, 5u);
    EXPECT_EQ(back.alphabet.size(), 3u);
    EXPECT_EQ(back.forbidden, (LengthSet{1, 2}));
    EXPECT_EQ(back.members, c.members);
}

TEST(CodewordFile, RejectsBadInput) {
    std::stringstream bad_header("n=5 q=3\n");
    EXPECT_THROW(read_code(bad_header), error);
    std::stringstream wrong_length("# n=3 q=2 F=1\n0101\n");
    EXPECT_THROW(read_code(wrong_length), error);
}

TEST(CountRecord, Format) {
    EXPECT_EQ(count_record(3, 2, {1}, 2), "n=3 q=2 F=1 count=2 rate=0.3333333333");
    EXPECT_EQ(count_record(4, 2, {1, 2}, 0), "n=4 q=2 F=1,2 count=0 rate=none");
}

}  // namespace
