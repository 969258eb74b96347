#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's counting or rank code.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nlie/linear_combination.hpp"
#include "nlie/term.hpp"

namespace nlie::ref {

/// Number of Lyndon words of length w over d letters, by listing all words.
inline long lyndon_count(int d, int w) {
    std::vector<int> word(static_cast<std::size_t>(w), 0);
    long count = 0;
    while (true) {
        bool smallest = true;
        for (int r = 1; r < w && smallest; ++r) {
            std::vector<int> rot(word.begin() + r, word.end());
            rot.insert(rot.end(), word.begin(), word.begin() + r);
            if (!(word < rot)) smallest = false;
        }
        count += smallest;
        int i = w - 1;
        while (i >= 0 && word[static_cast<std::size_t>(i)] == d - 1) word[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++word[static_cast<std::size_t>(i)];
    }
    return count;
}

/// Pascal's triangle, long arithmetic; out of range gives 0.
inline long choose(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Number of necklaces (all rotation classes) of length m over d letters, by Burnside.
inline long necklaces_burnside(long d, long m) {
    long s = 0;
    for (long r = 0; r < m; ++r) {
        long g = std::gcd(r, m);
        long p = 1;
        for (long i = 0; i < g; ++i) p *= d;
        s += p;
    }
    return s / m;
}

/// Every term of weight w, arity n, over x_1..x_d, in every child order.
inline std::vector<Term> all_raw_terms(int n, int d, int w) {
    if (w == 1) {
        std::vector<Term> v;
        for (int k = 1; k <= d; ++k) v.push_back(Term::leaf(k));
        return v;
    }
    std::vector<std::vector<Term>> by_weight(static_cast<std::size_t>(w));
    for (int k = 1; k < w; ++k) by_weight[static_cast<std::size_t>(k)] = all_raw_terms(n, d, k);
    std::vector<Term> out;
    std::vector<int> comp(static_cast<std::size_t>(n), 1);
    std::function<void(int, int)> weights = [&](int i, int remaining) {
        if (i == n) {
            if (remaining != 0) return;
            std::vector<Term> kids;
            std::function<void(int)> pick = [&](int j) {
                if (j == n) {
                    out.push_back(Term::bracket(kids));
                    return;
                }
                for (const Term& t : by_weight[static_cast<std::size_t>(comp[static_cast<std::size_t>(j)])]) {
                    kids.push_back(t);
                    pick(j + 1);
                    kids.pop_back();
                }
            };
            pick(0);
            return;
        }
        for (int x = 1; x < w && x <= remaining; ++x) {
            comp[static_cast<std::size_t>(i)] = x;
            weights(i + 1, remaining - x);
        }
    };
    weights(0, w + n - 2);
    return out;
}

/// Distinct canonical images of all raw terms.
inline std::set<std::string> canonical_images(int n, int d, int w) {
    std::set<std::string> out;
    for (const Term& t : all_raw_terms(n, d, w)) {
        SignedTerm s = canonicalize(t);
        if (!s.is_zero()) out.insert(format(*s.term));
    }
    return out;
}

/// Sign of a permutation given as a list of distinct integers.
inline int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

/// Random well-formed term of exactly weight w.
inline Term random_term(std::mt19937& rng, int n, int d, int w) {
    if (w == 1) return Term::leaf(std::uniform_int_distribution<int>(1, d)(rng));
    std::vector<int> parts;
    while (true) {
        parts.assign(static_cast<std::size_t>(n), 1);
        for (int k = 0; k < w - 2; ++k) ++parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
        if (std::all_of(parts.begin(), parts.end(), [&](int x) { return x < w; })) break;
    }
    std::vector<Term> kids;
    for (int x : parts) kids.push_back(random_term(rng, n, d, x));
    return Term::bracket(std::move(kids));
}

/// Rank of a dense rational matrix by textbook Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace nlie::ref
