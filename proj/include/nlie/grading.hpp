#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "nlie/error.hpp"

namespace nlie {

/// Length of a weight-w bracket monomial of arity n: n + (w-2)(n-1), and 1 at w = 1.
constexpr long monomial_length(int n, int w) { return w == 1 ? 1 : n + static_cast<long>(w - 2) * (n - 1); }

/// Calls `visit` with every non-increasing sequence of `slots` positive
/// integers, each at most `max_part`, summing to `total`. Sequences arrive in
/// lexicographically decreasing order.
inline void for_each_nonincreasing(int slots, int total, int max_part,
                                   const std::function<void(const std::vector<int>&)>& visit) {
    if (slots < 1) return;
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(slots));
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        const int left = slots - static_cast<int>(seq.size());
        if (left == 0) {
            if (remaining == 0) visit(seq);
            return;
        }
        const int hi = std::min(cap, remaining - (left - 1));
        for (int x = hi; x >= 1; --x) {
            if (x * left < remaining) break;
            seq.push_back(x);
            rec(remaining - x, x);
            seq.pop_back();
        }
    };
    rec(total, max_part);
}

/// Component-weight profiles (w_1 >= ... >= w_n >= 1, each w_i < w) of an
/// n-ary bracket of weight w, i.e. every profile with sum w + n - 2.
inline void for_each_weight_profile(int n, int w, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 2) throw DomainError("arity must be >= 2");
    if (w < 2) return;
    for_each_nonincreasing(n, w + n - 2, w - 1, visit);
}

}  // namespace nlie
