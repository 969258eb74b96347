#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "nlie/linear_combination.hpp"
#include "nlie/term.hpp"
#include "test_support.hpp"

using namespace nlie;

namespace {

Term x(int k) { return Term::leaf(k); }
Term br(std::vector<Term> kids) { return Term::bracket(std::move(kids)); }

}  // namespace

TEST(Parse, LeafAndBracket) {
    Term t = parse("x3", 3);
    ASSERT_TRUE(t.is_leaf());
    EXPECT_EQ(t.generator().index, 3);

    Term b = parse("[x3,x2,x1]", 3);
    ASSERT_FALSE(b.is_leaf());
    EXPECT_EQ(b.arity(), 3u);
    EXPECT_EQ(b.child(0), x(3));
    EXPECT_EQ(b.child(2), x(1));
}

TEST(Parse, ArityMismatch) { EXPECT_THROW(parse("[x3,x2]", 3), ArityError); }

TEST(Parse, SyntaxErrorsCarryPosition) {
    try {
        parse("[x3,y2,x1]", 3);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 4u);
    }
    EXPECT_THROW(parse("x0", 2), ParseError);
    EXPECT_THROW(parse("[x2,x1]]", 2), ParseError);
    EXPECT_THROW(parse("", 2), ParseError);
}

TEST(Parse, RoundTripsWithFormat) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + i % 3;
        Term t = ref::random_term(rng, n, 5, 1 + i % 5);
        EXPECT_EQ(format(parse(format(t), n)), format(t));
    }
    EXPECT_EQ(format(parse(" [ x1 , [x3,x2,x1] , x2 ] ", 3)), "[x1,[x3,x2,x1],x2]");
}

TEST(Weight, Examples) {
    EXPECT_EQ(weight(x(1), 3), 1);
    EXPECT_EQ(weight(parse("[x3,x2,x1]", 3), 3), 2);
    Term t = parse("[[x3,x2,x1],x2,x1]", 3);
    EXPECT_EQ(weight(t, 3), 3);
    EXPECT_EQ(length(t), 5);
    EXPECT_EQ(length(x(5)), 1);
    EXPECT_EQ(length(parse("[x4,x3,x2,x1]", 4)), 4);
    EXPECT_EQ(length(parse("[[x3,x2,x1],x3,x2]", 3)), 5);
}

TEST(Weight, LengthIdentityOnRandomTerms) {
    std::mt19937 rng(3);
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + i % 4;
        const int w = 1 + i % 6;
        Term t = ref::random_term(rng, n, 4, w);
        EXPECT_EQ(weight(t, n), w);
        EXPECT_EQ(length(t) - 1, (weight(t) - 1) * (n - 1));
    }
}

TEST(Weight, BracketOfWeightsIJAndOnesHasWeightIPlusJ) {
    std::mt19937 rng(5);
    for (int n = 2; n <= 4; ++n)
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                std::vector<Term> kids{ref::random_term(rng, n, 3, i), ref::random_term(rng, n, 3, j)};
                for (int k = 2; k < n; ++k) kids.push_back(x(1));
                EXPECT_EQ(br(kids).weight(), i + j);
            }
}

TEST(Weight, WrongArityRejected) { EXPECT_THROW(weight(parse("[x2,x1]", 2), 3), ArityError); }

TEST(Order, Examples) {
    EXPECT_TRUE(compare(x(1), x(2)) < 0);
    EXPECT_TRUE(compare(parse("[x3,x2,x1]", 3), x(9)) > 0);
    EXPECT_TRUE(compare(parse("[x4,x2,x1]", 3), parse("[x3,x2,x1]", 3)) > 0);
    // right-to-left: the last slot decides first
    EXPECT_TRUE(compare(parse("[x9,x8,x1]", 3), parse("[x3,x2,x1]", 3)) > 0);
    EXPECT_TRUE(compare(parse("[x3,x2,x2]", 3), parse("[x9,x8,x1]", 3)) > 0);
}

TEST(Order, StrictTotalOrderOnRandomCanonicalTerms) {
    std::mt19937 rng(17);
    std::vector<Term> pool;
    while (pool.size() < 60) {
        SignedTerm s = canonicalize(ref::random_term(rng, 3, 4, 1 + static_cast<int>(pool.size()) % 5));
        if (!s.is_zero()) pool.push_back(*s.term);
    }
    for (const Term& a : pool)
        for (const Term& b : pool) {
            auto ab = compare(a, b);
            auto ba = compare(b, a);
            EXPECT_EQ(ab == 0, ba == 0);
            EXPECT_EQ(ab < 0, ba > 0);
            EXPECT_EQ(ab == 0, format(a) == format(b));
            for (const Term& c : pool)
                if (ab < 0 && compare(b, c) < 0) { EXPECT_TRUE(compare(a, c) < 0); }
        }
}

TEST(Canonicalize, Examples) {
    SignedTerm a = canonicalize(parse("[x1,x2,x3]", 3), 3);
    EXPECT_EQ(a.sign, -1);
    EXPECT_EQ(format(*a.term), "[x3,x2,x1]");

    EXPECT_TRUE(canonicalize(parse("[x1,x1,x2]", 3), 3).is_zero());

    SignedTerm c = canonicalize(parse("[x1,[x3,x2,x1],x2]", 3), 3);
    EXPECT_EQ(c.sign, 1);
    EXPECT_EQ(format(*c.term), "[[x3,x2,x1],x2,x1]");
}

TEST(Canonicalize, ExhaustivePermutationsAgreeWithParity) {
    // Distinct components in descending order; every reordering must map back
    // to the same canonical term with the sign of the reordering.
    for (int n = 2; n <= 4; ++n) {
        std::vector<Term> desc;
        desc.push_back(parse(n == 2 ? "[x3,x1]" : n == 3 ? "[x4,x2,x1]" : "[x5,x3,x2,x1]", n));
        for (int k = n - 1; k >= 1; --k) desc.push_back(x(k + 1));
        const Term canonical = br(desc);
        ASSERT_TRUE(is_canonical(canonical));
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<Term> kids;
            for (int p : perm) kids.push_back(desc[static_cast<std::size_t>(p)]);
            SignedTerm s = canonicalize(br(kids), n);
            EXPECT_EQ(s.sign, ref::permutation_sign(perm));
            EXPECT_EQ(*s.term, canonical);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST(Canonicalize, IdempotentOnRandomTerms) {
    std::mt19937 rng(23);
    for (int i = 0; i < 400; ++i) {
        const int n = 2 + i % 3;
        SignedTerm s = canonicalize(ref::random_term(rng, n, 3, 1 + i % 5), n);
        if (s.is_zero()) continue;
        SignedTerm again = canonicalize(*s.term, n);
        EXPECT_EQ(again.sign, 1);
        EXPECT_EQ(*again.term, *s.term);
        EXPECT_TRUE(is_canonical(*s.term));
    }
}

TEST(Canonicalize, SignIsAnInvolutionUnderTransposition) {
    std::mt19937 rng(29);
    for (int i = 0; i < 300; ++i) {
        Term t = ref::random_term(rng, 3, 4, 2 + i % 4);
        std::vector<Term> kids(t.children().begin(), t.children().end());
        std::swap(kids[0], kids[1]);
        SignedTerm a = canonicalize(t);
        SignedTerm b = canonicalize(br(kids));
        EXPECT_EQ(a.sign, -b.sign);
        if (!a.is_zero()) { EXPECT_EQ(*a.term, *b.term); }
    }
}

TEST(Paths, SubtermAndReplace) {
    Term t = parse("[x1,[x3,x2,x1],x2]", 3);
    const std::vector<int> p{1, 0};
    EXPECT_EQ(subterm(t, p), x(3));
    EXPECT_EQ(format(replace_at(t, p, x(4))), "[x1,[x4,x2,x1],x2]");
    const std::vector<int> bad{0, 0};
    EXPECT_THROW(subterm(t, bad), DomainError);
}

TEST(LinearCombination, CanonicalizesAndCancels) {
    LinearCombination lc;
    lc.add(parse("[x1,x2,x3]", 3), 2);
    EXPECT_EQ(format(lc), "-2*[x3,x2,x1]");
    lc.add(parse("[x3,x2,x1]", 3), 2);
    EXPECT_TRUE(lc.empty());
    EXPECT_EQ(format(lc), "0");
    lc.add(parse("[x2,x1,x1]", 3), 5);
    EXPECT_TRUE(lc.empty());
    lc.add(parse("[x3,x2,x1]", 3), Rational(1, 2));
    EXPECT_EQ(format(lc), "+1/2*[x3,x2,x1]");
}
