#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "tdcode/channel.hpp"
#include "tdcode/oracle.hpp"

using namespace tdcode;
using oracle::W;

namespace {

TEST(ApplyTrace, WorkedChain) {
    const CorruptionTrace tr{{{1, 2}, {6, 2}, {2, 2}}, Model::equal_length, {2}};
    EXPECT_EQ(apply_trace(W("054213"), tr), W("054545421313"));
}

TEST(ApplyTrace, EmptyTraceIsIdentity) {
    for (Model m : {Model::unrestricted, Model::disjoint, Model::equal_length, Model::disjoint_equal_length})
        EXPECT_EQ(apply_trace(W("0121"), {{}, m, {1, 2}}), W("0121"));
    EXPECT_EQ(apply_trace(W("01"), {{{0, 1}}, Model::unrestricted, {1}}), W("001"));
}

TEST(ApplyTrace, RejectsModelViolations) {
    auto kind = [](const CorruptionTrace& tr) {
        try {
            apply_trace(W("012012"), tr);
        } catch (const error& e) {
            return e.kind();
        }
        return errc::invalid_argument;
    };
    EXPECT_EQ(kind({{{0, 3}}, Model::unrestricted, {1, 2}}), errc::model_violation);
    EXPECT_EQ(kind({{{0, 1}, {0, 2}}, Model::equal_length, {1, 2}}), errc::model_violation);
    // left-to-right order is not the one-shot disjoint form
    EXPECT_EQ(kind({{{0, 1}, {3, 1}}, Model::disjoint, {1}}), errc::model_violation);
    EXPECT_EQ(kind({{{3, 2}, {2, 2}}, Model::disjoint, {2}}), errc::model_violation);
    EXPECT_EQ(kind({{{7, 1}}, Model::unrestricted, {1}}), errc::word_too_short);
    EXPECT_NO_THROW(apply_trace(W("012012"), {{{4, 2}, {2, 2}, {0, 1}}, Model::disjoint, {1, 2}}));
}

TEST(ApplyDisjoint, Examples) {
    DisjointPlan p;
    p.gaps = {W("0"), W("")};
    p.blocks = {W("12")};
    EXPECT_EQ(apply_disjoint(W("012"), p), W("01212"));

    DisjointPlan q;
    q.gaps = {W("0"), W("2"), W("")};
    q.blocks = {W("54"), W("13")};
    EXPECT_EQ(apply_disjoint(W("054213"), q), W("0545421313"));
}

TEST(ApplyDisjoint, MalformedPlans) {
    DisjointPlan p;
    p.gaps = {W("0"), W("")};
    p.blocks = {W("13")};
    try {
        apply_disjoint(W("012"), p);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::malformed_plan);
    }
    p.blocks = {W("")};
    p.gaps = {W("012"), W("")};
    EXPECT_THROW(apply_disjoint(W("012"), p), error);
    p.gaps = {W("012")};
    EXPECT_THROW(apply_disjoint(W("012"), p), error);
}

// All plans with at most max_t blocks of lengths in L on x.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all_plans(std::size_t n, const LengthSet& L,
                                                                        std::size_t max_t) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out{{}};
    std::vector<std::pair<std::size_t, std::size_t>> cur;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        if (cur.size() == max_t) return;
        for (std::size_t s = from; s < n; ++s)
            for (std::size_t l : L)
                if (s + l <= n) {
                    cur.emplace_back(s, l);
                    out.push_back(cur);
                    go(s + l);
                    cur.pop_back();
                }
    };
    go(0);
    return out;
}

TEST(ApplyDisjoint, EqualsRightToLeftTrace) {
    const LengthSet L{1, 2, 3};
    for (std::size_t n = 1; n <= 8; ++n)
        for (const Word& x : oracle::all_words(n, 2))
            for (const auto& blocks : all_plans(n, L, 3)) {
                const DisjointPlan plan = make_plan(x, blocks);
                ASSERT_EQ(plan_source(plan), x);
                const Word z = apply_disjoint(x, plan);
                const CorruptionTrace tr = plan_to_trace(plan, Model::disjoint, L);
                ASSERT_EQ(apply_trace(x, tr), z);
                // produced squares occupy pairwise disjoint spans of z
                std::size_t shift = 0;
                std::vector<FactorSpan> spans;
                for (auto [off, len] : blocks) {
                    const FactorSpan s{off + shift + 1, off + shift + 2 * len};
                    ASSERT_TRUE(is_square_at(z, s.start - 1, len));
                    if (!spans.empty()) {
                        ASSERT_TRUE(spans_disjoint(spans.back(), s));
                    }
                    spans.push_back(s);
                    shift += len;
                }
            }
}

TEST(Sampler, BoundedDrawsAreInRangeAndReproducible) {
    Sampler a(42), b(42);
    for (int k = 0; k < 1000; ++k) {
        const auto v = a.between(3, 9);
        ASSERT_GE(v, 3u);
        ASSERT_LE(v, 9u);
        ASSERT_EQ(v, b.between(3, 9));
    }
    // first raw draw of mt19937_64 seeded 42, mapped to [0, 2^32)
    Sampler c(42);
    EXPECT_EQ(c.below(std::uint64_t{1} << 32), 13930160852258120406ull % (std::uint64_t{1} << 32));
}

TEST(SampleCorruption, ZeroEventsIsIdentity) {
    for (Model m : {Model::unrestricted, Model::disjoint, Model::equal_length, Model::disjoint_equal_length}) {
        const auto r = sample_corruption(W("012"), m, {1, 2}, 0, 99);
        EXPECT_EQ(r.word, W("012"));
        EXPECT_TRUE(r.trace.events.empty());
    }
}

TEST(SampleCorruption, InfeasibleDisjointPlans) {
    const Word x = W("0120120");
    try {
        sample_corruption(x, Model::disjoint, {2}, x.size() / 2 + 1, 1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.kind(), errc::infeasible_plan);
    }
    EXPECT_THROW(sample_corruption(x, Model::disjoint_equal_length, {4, 5}, 2, 1), error);
    EXPECT_THROW(sample_corruption(W("01"), Model::equal_length, {3}, 1, 1), error);
    EXPECT_NO_THROW(sample_corruption(x, Model::disjoint, {2}, x.size() / 2, 1));
}

TEST(SampleCorruption, EqualLengthExampleIsReproducible) {
    const auto a = sample_corruption(W("054213"), Model::equal_length, {2}, 3, 7);
    const auto b = sample_corruption(W("054213"), Model::equal_length, {2}, 3, 7);
    EXPECT_EQ(a.word.size(), 12u);
    EXPECT_EQ(a.word, b.word);
    EXPECT_EQ(a.trace.events, b.trace.events);
    EXPECT_EQ(a.trace.events.size(), 3u);
    EXPECT_EQ(apply_trace(W("054213"), a.trace), a.word);
}

TEST(SampleCorruption, OutputsLieInTheModelCone) {
    const std::vector<std::pair<Model, LengthSet>> cases = {{Model::unrestricted, {1, 2}},
                                                            {Model::disjoint, {1, 2}},
                                                            {Model::equal_length, {1, 2}},
                                                            {Model::disjoint_equal_length, {1, 2}}};
    std::uint64_t seed = 0;
    for (const auto& [model, L] : cases)
        for (std::size_t n = 3; n <= 6; ++n)
            for (const Word& x : oracle::all_words(n, 2))
                for (std::size_t t = 0; t <= 2; ++t) {
                    const Corruption r = sample_corruption(x, model, L, t, ++seed);
                    ASSERT_EQ(apply_trace(x, r.trace), r.word);
                    std::size_t added = 0;
                    for (auto e : r.trace.events) added += e.dup_len;
                    ASSERT_EQ(r.word.size(), x.size() + added);
                    if (r.plan) {
                        ASSERT_EQ(apply_disjoint(x, *r.plan), r.word);
                    }
                    ASSERT_TRUE(descendants(x, model, L, n + 4).contains(r.word)) << to_string(model);
                }
}

TEST(TraceFile, RoundTripWithPlan) {
    const Alphabet a(3);
    const auto r = sample_corruption(W("0120121"), Model::disjoint, {1, 2}, 2, 17);
    std::stringstream ss;
    write_trace(ss, r.trace, r.seed, a, &*r.plan);
    write_trace(ss, {{{0, 1}}, Model::unrestricted, {1}}, 5, a);
    const std::string text = ss.str();
    EXPECT_EQ(text.substr(0, 32), "# model=disjoint L=1,2 seed=17\n" + text.substr(31, 1));

    const TraceRecord first = read_trace(ss, a);
    EXPECT_EQ(first.trace.model, Model::disjoint);
    EXPECT_EQ(first.trace.lengths, (LengthSet{1, 2}));
    EXPECT_EQ(first.seed, 17u);
    EXPECT_EQ(first.trace.events, r.trace.events);
    ASSERT_TRUE(first.plan.has_value());
    EXPECT_EQ(apply_disjoint(W("0120121"), *first.plan), r.word);
    EXPECT_EQ(apply_trace(W("0120121"), first.trace), r.word);

    const TraceRecord second = read_trace(ss, a);
    EXPECT_EQ(second.seed, 5u);
    EXPECT_EQ(second.trace.events, (std::vector<DupEvent>{{0, 1}}));
    EXPECT_FALSE(second.plan.has_value());
}

TEST(TraceFile, RejectsGarbage) {
    std::stringstream ss("# model=bogus L=1 seed=0\n");
    EXPECT_THROW(read_trace(ss, Alphabet(2)), error);
    std::stringstream ss2("# model=disjoint L=1 seed=0\n0;1\n");
    EXPECT_THROW(read_trace(ss2, Alphabet(2)), error);
}

}  // namespace
