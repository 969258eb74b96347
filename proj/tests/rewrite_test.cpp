#include <gtest/gtest.h>

#include <random>

#include "nlie/basis.hpp"
#include "nlie/oracle.hpp"
#include "nlie/rewrite.hpp"
#include "test_support.hpp"

using namespace nlie;

namespace {

bool all_basic(const LinearCombination& lc, int n) {
    for (const auto& [t, c] : lc)
        if (!is_basic(t, n, EnumerationMode::FullRule3)) return false;
    return true;
}

}  // namespace

TEST(ExpandJacobi, ReproducesItsInputAfterCanonicalization) {
    const std::vector<int> root;
    EXPECT_EQ(format(expand_jacobi(parse("[[x2,x1],x2]", 2), root, 2)), "+1*[[x2,x1],x2]");
    EXPECT_EQ(format(expand_jacobi(parse("[[x3,x2,x1],x2,x1]", 3), root, 3)), "+1*[[x3,x2,x1],x2,x1]");
}

TEST(ExpandJacobi, IsCongruentToTheInput) {
    const std::vector<int> root;
    Term t = parse("[[x3,x2,x1],x3,x2]", 3);
    LinearCombination diff = LinearCombination::of(t) - expand_jacobi(t, root, 3);
    EXPECT_TRUE(membership(diff, 3, 3));

    Term nested = parse("[[[x3,x2,x1],x3,x2],x2,x1]", 3);
    const std::vector<int> inner{0};
    LinearCombination d2 = LinearCombination::of(nested) - expand_jacobi(nested, inner, 3);
    EXPECT_TRUE(membership(d2, 3, 3));
}

TEST(ExpandJacobi, RejectsBadNodes) {
    const std::vector<int> root;
    EXPECT_THROW(expand_jacobi(parse("[x3,x2,x1]", 3), root, 3), DomainError);
    const std::vector<int> bad{5};
    EXPECT_THROW(expand_jacobi(parse("[[x3,x2,x1],x2,x1]", 3), bad, 3), DomainError);
    EXPECT_THROW(expand_jacobi(parse("[[x2,x1],x1]", 2), root, 3), ArityError);
}

TEST(Collect, Examples) {
    auto a = collect(parse("[x1,x2,x3]", 3), 3);
    EXPECT_EQ(format(a.value), "-1*[x3,x2,x1]");
    EXPECT_FALSE(a.trace.capped);

    auto z = collect(parse("[x2,x1,x1]", 3), 3);
    EXPECT_TRUE(z.value.empty());
    ASSERT_FALSE(z.trace.steps.empty());
    EXPECT_EQ(z.trace.steps.back().rule, RewriteRule::Zero);

    auto c = collect(parse("[x1,[x3,x2,x1],x2]", 3), 3);
    EXPECT_EQ(format(c.value), "+1*[[x3,x2,x1],x2,x1]");
    EXPECT_EQ(c.trace.jacobi_steps(), 0u);
}

TEST(Collect, NeedsJacobiForNonBasicBracket) {
    // The first component ends in (x3,x2), which exceeds the outer tail (x2,x1).
    Term t = parse("[[[x3,x2,x1],x3,x2],x2,x1]", 3);
    auto r = collect(t, 3);
    EXPECT_FALSE(r.trace.capped);
    EXPECT_TRUE(all_basic(r.value, 3));
    EXPECT_TRUE(membership(LinearCombination::of(t) - r.value, 3, 3));
}

TEST(Collect, SoundOnEveryMonomialUpToWeightFour) {
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d) {
            Oracle o(n, d);
            Collector col(n);
            for (int w = 1; w <= 4; ++w)
                for (const Term& t : o.basis(w).monomials) {
                    RewriteTrace trace;
                    LinearCombination out = col.collect(t, trace);
                    EXPECT_FALSE(trace.capped) << format(t);
                    EXPECT_TRUE(all_basic(out, n)) << format(t);
                    for (const auto& [b, c] : out) EXPECT_EQ(b.weight(), w);
                    EXPECT_TRUE(o.contains(LinearCombination::of(t) - out)) << format(t);
                }
        }
}

TEST(Collect, SoundOnRandomTermsOfArityTwoAndThree) {
    std::mt19937 rng(2024);
    for (int n = 2; n <= 3; ++n) {
        Oracle o(n, 3);
        for (int i = 0; i < 150; ++i) {
            const int w = std::uniform_int_distribution<int>(1, n == 2 ? 6 : 5)(rng);
            Term t = ref::random_term(rng, n, 3, w);
            auto r = collect(t, n);
            EXPECT_FALSE(r.trace.capped);
            EXPECT_TRUE(all_basic(r.value, n)) << format(t);
            LinearCombination diff = r.value;
            diff *= -1;
            diff.add(t, 1);
            EXPECT_TRUE(o.contains(diff)) << format(t);
        }
    }
}

TEST(Collect, IdempotentOnBasics) {
    for (int n = 2; n <= 3; ++n)
        for (int d = 1; d <= 3; ++d)
            for (int w = 1; w <= 4; ++w)
                for (const auto& b : enumerate_basic(n, d, w, EnumerationMode::FullRule3)) {
                    auto r = collect(b.term, n);
                    EXPECT_EQ(r.value, LinearCombination::of(b.term)) << format(b.term);
                    EXPECT_EQ(r.trace.jacobi_steps(), 0u);
                }
}

TEST(CollectLc, Examples) {
    EXPECT_TRUE(collect_lc(LinearCombination{}, 3).value.empty());

    LinearCombination two;
    two.add(parse("[x1,x2,x3]", 3), 2);
    EXPECT_EQ(format(collect_lc(two, 3).value), "-2*[x3,x2,x1]");

    // canonicalization on insertion already cancels these
    LinearCombination cancel;
    cancel.add(parse("[x1,x2,x3]", 3), 1);
    cancel.add(parse("[x3,x2,x1]", 3), 1);
    EXPECT_TRUE(cancel.empty());
    EXPECT_TRUE(collect_lc(cancel, 3).value.empty());
}

TEST(CollectLc, Linear) {
    std::mt19937 rng(8);
    for (int i = 0; i < 40; ++i) {
        Term s = ref::random_term(rng, 3, 3, 4);
        Term t = ref::random_term(rng, 3, 3, 4);
        Rational a(std::uniform_int_distribution<int>(-5, 5)(rng), 3);
        Rational b(std::uniform_int_distribution<int>(-5, 5)(rng), 2);
        a.canonicalize();
        b.canonicalize();
        LinearCombination in;
        in.add(s, a);
        in.add(t, b);
        LinearCombination expect;
        expect.add(collect(s, 3).value, a);
        expect.add(collect(t, 3).value, b);
        EXPECT_EQ(collect_lc(in, 3).value, expect);
    }
}

TEST(Collect, BudgetExhaustionIsReported) {
    Term t = parse("[[[x3,x2,x1],x3,x2],x2,x1]", 3);
    auto full = collect(t, 3);
    ASSERT_GT(full.trace.jacobi_steps(), 0u);
    auto capped = collect(t, 3, CollectOptions{0});
    EXPECT_TRUE(capped.trace.capped);
}
