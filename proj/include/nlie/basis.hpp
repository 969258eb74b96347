#pragma once

// Basic commutators: the rule 1-3 predicate and exhaustive enumeration.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nlie/error.hpp"
#include "nlie/grading.hpp"
#include "nlie/term.hpp"

namespace nlie {

enum class EnumerationMode {
    FullRule3,   ///< every component-weight profile allowed by rule 3
    LeftNormed,  ///< additionally, components 2..n are generators
};

inline std::string to_string(EnumerationMode m) {
    return m == EnumerationMode::FullRule3 ? "FULL_RULE3" : "LEFT_NORMED";
}

struct BasicCommutator {
    Term term;
    int weight = 1;
    long length = 1;
};

namespace detail {

/// Right-to-left lexicographic comparison of equally long component lists.
inline std::strong_ordering compare_right_to_left(std::span<const Term> a, std::span<const Term> b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (auto c = compare(a[i], b[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

/// Rule 3 conditions at the root of a canonical bracket whose components are
/// already known to be basic. Components are non-increasing in weight and
/// strictly descending within equal weights by canonicity, so only the
/// descent condition needs checking: at every descent w_s > w_{s+1} where
/// component s is a bracket, the last n-s components of component s, read
/// as a string, must not exceed the tail s+1..n.
///
/// Returns the 0-based position of the first violating component, or -1.
inline int first_rule3_violation(const Term& t) {
    const auto kids = t.children();
    const std::size_t n = kids.size();
    for (std::size_t s = 0; s + 1 < n; ++s) {
        if (kids[s].weight() <= kids[s + 1].weight()) continue;
        if (kids[s].is_leaf()) continue;
        const std::size_t tail = n - 1 - s;
        auto inner = kids[s].children().subspan(n - tail, tail);
        auto outer = kids.subspan(s + 1, tail);
        if (compare_right_to_left(inner, outer) > 0) return static_cast<int>(s);
    }
    return -1;
}

inline bool is_basic_unchecked(const Term& t, EnumerationMode mode) {
    if (t.is_leaf()) return true;
    const auto kids = t.children();
    if (mode == EnumerationMode::LeftNormed) {
        for (std::size_t i = 1; i < kids.size(); ++i)
            if (!kids[i].is_leaf()) return false;
    }
    for (const Term& c : kids)
        if (!is_basic_unchecked(c, mode)) return false;
    return first_rule3_violation(t) < 0;
}

}  // namespace detail

/// Rule 1 (generators), rule 2 (strictly descending weight-2 brackets) and
/// rule 3 (recursive condition, see detail::first_rule3_violation).
/// Throws DomainError for non-canonical input.
inline bool is_basic(const Term& t, int n, EnumerationMode mode) {
    check_arity(t, n);
    if (!is_canonical(t)) throw DomainError("is_basic expects a canonical term: " + format(t));
    return detail::is_basic_unchecked(t, mode);
}

struct EnumerationLimits {
    std::size_t max_terms = 2'000'000;  ///< ceiling on any single weight level
};

/// Builds basic commutators weight by weight. Each level is sorted ascending
/// under the term order.
class BasicEnumerator {
public:
    BasicEnumerator(int n, int d, EnumerationMode mode, EnumerationLimits limits = {})
        : n_(n), d_(d), mode_(mode), limits_(limits) {
        if (n < 2) throw DomainError("arity must be >= 2");
        if (d < 1) throw DomainError("alphabet size must be >= 1");
        levels_.emplace_back();  // weight 0 unused
        std::vector<Term> leaves;
        for (int k = 1; k <= d; ++k) leaves.push_back(Term::leaf(k));
        levels_.push_back(std::move(leaves));
    }

    const std::vector<Term>& level(int w) {
        if (w < 1) throw DomainError("weight must be >= 1");
        while (static_cast<int>(levels_.size()) <= w) {
            const int k = static_cast<int>(levels_.size());
            std::vector<Term> out;
            generate(k, [&](const Term& t) {
                if (out.size() >= limits_.max_terms)
                    throw CapacityError("basic commutator enumeration exceeded " +
                                        std::to_string(limits_.max_terms) + " terms at weight " +
                                        std::to_string(k));
                out.push_back(t);
            });
            std::sort(out.begin(), out.end(), TermLessFn{});
            levels_.push_back(std::move(out));
        }
        return levels_[static_cast<std::size_t>(w)];
    }

    /// Cardinality of weight w without storing that level.
    std::uint64_t count(int w) {
        if (w < static_cast<int>(levels_.size())) return level(w).size();
        if (w > 1) level(w - 1);
        std::uint64_t c = 0;
        generate(w, [&](const Term&) { ++c; });
        return c;
    }

private:
    struct TermLessFn {
        bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
    };

    void generate(int w, const std::function<void(const Term&)>& emit) {
        if (w == 1) {
            for (const Term& t : levels_[1]) emit(t);
            return;
        }
        for (int k = 1; k < w; ++k) level(k);
        for_each_weight_profile(n_, w, [&](const std::vector<int>& profile) {
            if (mode_ == EnumerationMode::LeftNormed && w > 2 &&
                (profile[0] != w - 1 || profile[1] != 1))
                return;
            std::vector<Term> chosen;
            chosen.reserve(profile.size());
            fill(profile, chosen, 0, emit);
        });
    }

    // Chooses components left to right. Equal-weight runs take strictly
    // decreasing positions in the ascending level list, which makes the
    // bracket canonical by construction.
    void fill(const std::vector<int>& profile, std::vector<Term>& chosen, std::size_t upper,
              const std::function<void(const Term&)>& emit) {
        const std::size_t i = chosen.size();
        if (i == profile.size()) {
            Term t = Term::bracket(chosen);
            if (detail::first_rule3_violation(t) < 0) emit(t);
            return;
        }
        const auto& pool = levels_[static_cast<std::size_t>(profile[i])];
        const bool same_run = i > 0 && profile[i] == profile[i - 1];
        const std::size_t hi = same_run ? upper : pool.size();
        for (std::size_t j = hi; j-- > 0;) {
            chosen.push_back(pool[j]);
            fill(profile, chosen, j, emit);
            chosen.pop_back();
        }
    }

    int n_;
    int d_;
    EnumerationMode mode_;
    EnumerationLimits limits_;
    std::vector<std::vector<Term>> levels_;
};

/// All basic commutators of weight w on x_1..x_d, ascending in the term order.
inline std::vector<BasicCommutator> enumerate_basic(int n, int d, int w, EnumerationMode mode,
                                                    EnumerationLimits limits = {}) {
    BasicEnumerator e(n, d, mode, limits);
    std::vector<BasicCommutator> out;
    for (const Term& t : e.level(w)) out.push_back({t, t.weight(), t.length()});
    return out;
}

inline std::uint64_t count_by_enumeration(int n, int d, int w, EnumerationMode mode,
                                          EnumerationLimits limits = {}) {
    BasicEnumerator e(n, d, mode, limits);
    return e.count(w);
}

}  // namespace nlie
