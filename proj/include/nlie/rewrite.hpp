#pragma once

// The collecting process: rewrite bracket terms into combinations of basic
// commutators using skew-symmetry and the Filippov identity.

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nlie/basis.hpp"
#include "nlie/error.hpp"
#include "nlie/linear_combination.hpp"
#include "nlie/term.hpp"

namespace nlie {

enum class RewriteRule { Skew, Jacobi, Zero };

inline std::string to_string(RewriteRule r) {
    switch (r) {
        case RewriteRule::Skew: return "SKEW";
        case RewriteRule::Jacobi: return "JACOBI";
        case RewriteRule::Zero: return "ZERO";
    }
    return "?";
}

struct RewriteStep {
    RewriteRule rule;
    std::vector<int> path;  ///< node position, relative to the collected term
    std::size_t before = 1;
    std::size_t after = 1;
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
    bool capped = false;
    std::size_t jacobi_steps() const {
        std::size_t k = 0;
        for (const auto& s : steps) k += s.rule == RewriteRule::Jacobi;
        return k;
    }
};

/// Filippov expansion at `path`: the node [[x_1..x_n], y_2..y_n] is replaced
/// by sum_i [x_1..[x_i, y_2..y_n]..x_n]. Terms are canonicalized.
inline LinearCombination expand_jacobi(const Term& t, std::span<const int> path, int n) {
    check_arity(t, n);
    const Term& node = subterm(t, path);
    if (node.is_leaf() || node.child(0).is_leaf())
        throw DomainError("expand_jacobi: node is not of the form [[...], ...]: " + format(node));
    const Term& x = node.child(0);
    const auto ys = node.children().subspan(1);
    LinearCombination out;
    for (std::size_t i = 0; i < x.arity(); ++i) {
        std::vector<Term> inner{x.child(i)};
        inner.insert(inner.end(), ys.begin(), ys.end());
        std::vector<Term> kids(x.children().begin(), x.children().end());
        kids[i] = Term::bracket(std::move(inner));
        out.add(replace_at(t, path, Term::bracket(std::move(kids))), 1);
    }
    return out;
}

struct CollectOptions {
    std::size_t max_steps = 1'000'000;  ///< budget on Jacobi expansions
};

/// Stateful collector. The memo is shared across calls, so collecting many
/// terms of one arity through a single instance is cheap.
class Collector {
public:
    explicit Collector(int n, CollectOptions opts = {}) : n_(n), opts_(opts) {
        if (n < 2) throw DomainError("arity must be >= 2");
    }

    LinearCombination collect(const Term& t, RewriteTrace& trace) {
        check_arity(t, n_);
        trace_ = &trace;
        std::vector<int> path;
        LinearCombination out = normalize(t, path);
        trace_ = nullptr;
        return out;
    }

    LinearCombination collect(const LinearCombination& c, RewriteTrace& trace) {
        LinearCombination out;
        for (const auto& [t, coeff] : c) out.add(collect(t, trace), coeff);
        return out;
    }

private:
    void record(RewriteRule r, const std::vector<int>& path, std::size_t before, std::size_t after) {
        trace_->steps.push_back({r, path, before, after});
    }

    // Any term (not necessarily canonical) to a combination of basics.
    LinearCombination normalize(const Term& t, std::vector<int>& path) {
        if (t.is_leaf()) return LinearCombination::of(t);
        std::vector<LinearCombination> parts;
        parts.reserve(t.arity());
        for (std::size_t i = 0; i < t.arity(); ++i) {
            path.push_back(static_cast<int>(i));
            parts.push_back(normalize(t.child(i), path));
            path.pop_back();
            if (parts.back().empty()) return {};
        }
        LinearCombination out;
        std::vector<Term> kids(t.arity(), t.child(0));
        expand_products(parts, 0, Rational(1), kids, out, path);
        return out;
    }

    void expand_products(const std::vector<LinearCombination>& parts, std::size_t i, const Rational& coeff,
                         std::vector<Term>& kids, LinearCombination& out, std::vector<int>& path) {
        if (i == parts.size()) {
            const Term raw = Term::bracket(kids);
            SignedTerm s = canonicalize(raw);
            if (s.is_zero()) {
                record(RewriteRule::Zero, path, 1, 0);
                return;
            }
            if (!(raw == *s.term)) record(RewriteRule::Skew, path, 1, 1);
            out.add(reduce(*s.term, path), s.sign > 0 ? coeff : Rational(-coeff));
            return;
        }
        for (const auto& [term, c] : parts[i]) {
            kids[i] = term;
            expand_products(parts, i + 1, coeff * c, kids, out, path);
        }
    }

    // A canonical bracket whose children are basic.
    LinearCombination reduce(const Term& b, std::vector<int>& path) {
        if (auto it = memo_.find(b); it != memo_.end()) return it->second;
        const int s = detail::first_rule3_violation(b);
        if (s < 0) {
            LinearCombination self = LinearCombination::of(b);
            memo_.emplace(b, self);
            return self;
        }
        if (active_.count(b) || steps_ >= opts_.max_steps) {
            trace_->capped = true;
            return LinearCombination::of(b);
        }
        active_.insert(b);
        ++steps_;

        // Bring the offending component to the front, then expand.
        std::vector<Term> kids(b.children().begin(), b.children().end());
        Term moved = kids[static_cast<std::size_t>(s)];
        kids.erase(kids.begin() + s);
        kids.insert(kids.begin(), moved);
        const Rational sign = (s % 2 == 0) ? 1 : -1;
        if (s > 0) record(RewriteRule::Skew, path, 1, 1);
        const Term front = Term::bracket(std::move(kids));
        const std::vector<int> root;
        LinearCombination expanded = expand_jacobi(front, root, n_);
        record(RewriteRule::Jacobi, path, 1, expanded.size());

        LinearCombination out;
        bool clean = true;
        for (const auto& [term, c] : expanded) {
            const bool was_capped = trace_->capped;
            trace_->capped = false;
            LinearCombination part = normalize(term, path);
            clean = clean && !trace_->capped;
            trace_->capped = trace_->capped || was_capped;
            out.add(part, c * sign);
        }
        active_.erase(b);
        if (clean) memo_.emplace(b, out);
        return out;
    }

    int n_;
    CollectOptions opts_;
    std::size_t steps_ = 0;
    RewriteTrace* trace_ = nullptr;
    std::map<Term, LinearCombination, TermLess> memo_;
    std::set<Term, TermLess> active_;
};

struct CollectResult {
    LinearCombination value;
    RewriteTrace trace;
};

/// Rewrites t into basic commutators (FULL_RULE3). If the step budget runs
/// out or a cycle is met, trace.capped is set and non-basic terms may remain.
inline CollectResult collect(const Term& t, int n, CollectOptions opts = {}) {
    Collector c(n, opts);
    CollectResult r;
    r.value = c.collect(t, r.trace);
    return r;
}

inline CollectResult collect_lc(const LinearCombination& lc, int n, CollectOptions opts = {}) {
    Collector c(n, opts);
    CollectResult r;
    r.value = c.collect(lc, r.trace);
    return r;
}

}  // namespace nlie
