#pragma once

// Graded dimensions of the free n-Lie algebra by exact linear algebra.
//
// The weight-w slice of the free n-algebra is spanned by the canonical
// bracket monomials of weight w (skew-symmetry is absorbed by
// canonicalization). The relations are all instances of the Filippov
// identity placed in every bracket context; dim F^w / F^{w+1} is the number
// of monomials minus the rank of those relation vectors.
//
// This module deliberately shares nothing with the basis and rewrite modules
// apart from the term syntax, so it can adjudicate both.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nlie/error.hpp"
#include "nlie/grading.hpp"
#include "nlie/linear_combination.hpp"
#include "nlie/sparse_rank.hpp"
#include "nlie/term.hpp"

namespace nlie {

struct OracleLimits {
    std::size_t max_monomials = 200'000;  ///< per weight level
    std::size_t max_rows = 4'000'000;     ///< relation rows per weight level
};

/// Canonical nonzero monomials of one weight.
struct MonomialBasis {
    int n = 0;
    int d = 0;
    int w = 0;
    std::vector<Term> monomials;  ///< ascending in the term order
    std::map<Term, std::size_t, TermLess> index;

    std::size_t size() const { return monomials.size(); }

    std::optional<std::size_t> find(const Term& canonical) const {
        auto it = index.find(canonical);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

/// One Filippov instance, as a vector over a MonomialBasis.
struct RelationRow {
    SparseRow entries;
    /// The uncanonicalized left-hand side [[x_1..x_n], y_2..y_n] in its context.
    Term lhs;
    /// Path from the root of `lhs` to the instance node.
    std::vector<int> path;
};

struct RelationMatrix {
    std::vector<RelationRow> rows;
};

/// Outcome of testing a candidate basis against the quotient.
struct SpanReport {
    std::size_t candidates = 0;
    std::size_t basis_size = 0;
    std::size_t relation_rank = 0;
    std::size_t combined_rank = 0;  ///< rank of relations together with the candidates
    bool spans = false;             ///< candidates + relations span every monomial
    bool independent = false;       ///< candidates are independent modulo relations
};

/// Lazily computes monomials, relations and ranks for fixed (n, d), weight by weight.
class Oracle {
public:
    Oracle(int n, int d, OracleLimits limits = {}) : n_(n), d_(d), limits_(limits) {
        if (n < 2) throw DomainError("arity must be >= 2");
        if (d < 1) throw DomainError("alphabet size must be >= 1");
    }

    int arity() const { return n_; }
    int alphabet() const { return d_; }

    const MonomialBasis& basis(int w) {
        if (w < 1) throw DomainError("weight must be >= 1");
        while (static_cast<int>(levels_.size()) <= w) build_level(static_cast<int>(levels_.size()));
        return levels_[static_cast<std::size_t>(w)];
    }

    const RelationMatrix& relations(int w) {
        level_state(w);
        return states_.at(w).matrix;
    }

    std::size_t rank(int w) { return level_state(w).echelon.rank(); }

    std::size_t dimension(int w) { return basis(w).size() - rank(w); }

    /// True iff `lc` lies in the span of the weight-w relations.
    bool contains(const LinearCombination& lc) {
        if (lc.empty()) return true;
        const int w = lc.begin()->first.weight();
        SparseRow row = to_row(lc, w);
        return level_state(w).echelon.contains(std::move(row));
    }

    SpanReport span_report(const std::vector<Term>& candidates, int w) {
        SpanReport r;
        r.candidates = candidates.size();
        r.basis_size = basis(w).size();
        r.relation_rank = rank(w);
        EchelonBasis e = level_state(w).echelon;
        for (const Term& t : candidates) e.insert(to_row(LinearCombination::of(t), w));
        r.combined_rank = e.rank();
        r.spans = r.combined_rank == r.basis_size;
        r.independent = r.combined_rank - r.relation_rank == r.candidates;
        return r;
    }

private:
    struct LevelState {
        RelationMatrix matrix;
        EchelonBasis echelon;
        std::vector<std::size_t> independent_rows;  ///< indices into matrix.rows
    };

    SparseRow to_row(const LinearCombination& lc, int w) {
        const MonomialBasis& b = basis(w);
        mpz_class lcm = 1;
        for (const auto& [t, c] : lc) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        SparseRow row;
        for (const auto& [t, c] : lc) {
            if (t.weight() != w) throw DomainError("membership: terms of mixed weight");
            check_arity(t, n_);
            if (max_generator(t) > d_) throw DomainError("membership: generator outside x1..x" + std::to_string(d_));
            auto idx = b.find(t);
            if (!idx) throw DomainError("membership: term is not canonical: " + format(t));
            mpq_class scaled = c * lcm;
            row.emplace_back(*idx, scaled.get_num());
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
        return row;
    }

    void build_level(int k) {
        MonomialBasis b;
        b.n = n_;
        b.d = d_;
        b.w = k;
        if (k == 0) {
            levels_.push_back(std::move(b));
            return;
        }
        if (k == 1) {
            for (int g = 1; g <= d_; ++g) b.monomials.push_back(Term::leaf(g));
        } else {
            for_each_weight_profile(n_, k, [&](const std::vector<int>& profile) {
                std::vector<Term> chosen;
                choose_distinct(profile, 0, chosen, [&](const std::vector<Term>& kids) {
                    if (b.monomials.size() >= limits_.max_monomials)
                        throw CapacityError("monomial basis exceeds " + std::to_string(limits_.max_monomials) +
                                            " at weight " + std::to_string(k));
                    b.monomials.push_back(Term::bracket(kids));
                });
            });
            std::sort(b.monomials.begin(), b.monomials.end(), TermLess{});
        }
        for (std::size_t i = 0; i < b.monomials.size(); ++i) b.index.emplace(b.monomials[i], i);
        levels_.push_back(std::move(b));
    }

    // Strictly descending choices within equal-weight runs of `profile`,
    // drawing from the (ascending) monomial lists of lower weights.
    template <typename Emit>
    void choose_distinct(const std::vector<int>& profile, std::size_t upper, std::vector<Term>& chosen,
                         Emit&& emit) {
        const std::size_t i = chosen.size();
        if (i == profile.size()) {
            emit(chosen);
            return;
        }
        const auto& pool = levels_[static_cast<std::size_t>(profile[i])].monomials;
        const bool same_run = i > 0 && profile[i] == profile[i - 1];
        const std::size_t hi = same_run ? upper : pool.size();
        for (std::size_t j = hi; j-- > 0;) {
            chosen.push_back(pool[j]);
            choose_distinct(profile, j, chosen, emit);
            chosen.pop_back();
        }
    }

    // Adds a relation (as a linear combination of raw terms) at weight k,
    // skipping zero and duplicate rows.
    void push_row(int k, LevelState& st, std::set<SparseRow>& seen, const LinearCombination& lc, Term lhs,
                  std::vector<int> path) {
        if (lc.empty()) return;
        SparseRow row = to_row(lc, k);
        make_primitive(row);
        if (!seen.insert(row).second) return;
        if (st.matrix.rows.size() >= limits_.max_rows)
            throw CapacityError("relation matrix exceeds " + std::to_string(limits_.max_rows) + " rows at weight " +
                                std::to_string(k));
        if (st.echelon.insert(row)) st.independent_rows.push_back(st.matrix.rows.size());
        st.matrix.rows.push_back({std::move(row), std::move(lhs), std::move(path)});
    }

    // [X, y_2..y_n] - sum_i [x_1..[x_i, y_2..y_n]..x_n]
    static LinearCombination filippov(const Term& x, const std::vector<Term>& ys) {
        LinearCombination lc;
        std::vector<Term> outer{x};
        outer.insert(outer.end(), ys.begin(), ys.end());
        lc.add(Term::bracket(outer), 1);
        const auto xs = x.children();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::vector<Term> inner{xs[i]};
            inner.insert(inner.end(), ys.begin(), ys.end());
            std::vector<Term> kids(xs.begin(), xs.end());
            kids[i] = Term::bracket(std::move(inner));
            lc.add(Term::bracket(std::move(kids)), -1);
        }
        return lc;
    }

    LevelState& level_state(int w) {
        if (w < 1) throw DomainError("weight must be >= 1");
        for (int k = 1; k <= w; ++k) {
            if (states_.count(k)) continue;
            basis(k);
            LevelState st;
            if (k >= 3) build_relations(k, st);
            states_.emplace(k, std::move(st));
        }
        return states_.at(w);
    }

    void build_relations(int k, LevelState& st) {
        std::set<SparseRow> seen;
        // Instances at the root: X a bracket monomial of weight a, y_2..y_n
        // distinct monomials (X itself allowed among them).
        for (int a = 2; a < k; ++a) {
            const int ysum = k - a + n_ - 2;
            for_each_nonincreasing(n_ - 1, ysum, k - 1, [&](const std::vector<int>& profile) {
                std::vector<Term> ys;
                choose_distinct_tail(profile, 0, ys, [&](const std::vector<Term>& chosen) {
                    for (const Term& x : levels_[static_cast<std::size_t>(a)].monomials) {
                        std::vector<Term> outer{x};
                        outer.insert(outer.end(), chosen.begin(), chosen.end());
                        push_row(k, st, seen, filippov(x, chosen), Term::bracket(std::move(outer)), {});
                    }
                });
            });
        }
        // Lower-weight relations placed as a component of a bracket with n-1
        // distinct monomials. Embedding an independent subset is enough.
        for (int kp = 3; kp < k; ++kp) {
            const LevelState& lower = states_.at(kp);
            const MonomialBasis& lb = levels_[static_cast<std::size_t>(kp)];
            const int msum = k - kp + n_ - 2;
            for_each_nonincreasing(n_ - 1, msum, k - 1, [&](const std::vector<int>& profile) {
                std::vector<Term> ms;
                choose_distinct_tail(profile, 0, ms, [&](const std::vector<Term>& chosen) {
                    for (std::size_t ri : lower.independent_rows) {
                        const RelationRow& src = lower.matrix.rows[ri];
                        LinearCombination lc;
                        for (const auto& [col, coef] : src.entries) {
                            std::vector<Term> kids{lb.monomials[col]};
                            kids.insert(kids.end(), chosen.begin(), chosen.end());
                            lc.add(Term::bracket(std::move(kids)), Rational(coef));
                        }
                        std::vector<Term> lhs_kids{src.lhs};
                        lhs_kids.insert(lhs_kids.end(), chosen.begin(), chosen.end());
                        std::vector<int> path{0};
                        path.insert(path.end(), src.path.begin(), src.path.end());
                        push_row(k, st, seen, lc, Term::bracket(std::move(lhs_kids)), std::move(path));
                    }
                });
            });
        }
    }

    template <typename Emit>
    void choose_distinct_tail(const std::vector<int>& profile, std::size_t upper, std::vector<Term>& chosen,
                              Emit&& emit) {
        const std::size_t i = chosen.size();
        if (i == profile.size()) {
            emit(chosen);
            return;
        }
        const auto& pool = basis(profile[i]).monomials;
        const bool same_run = i > 0 && profile[i] == profile[i - 1];
        const std::size_t hi = same_run ? upper : pool.size();
        for (std::size_t j = hi; j-- > 0;) {
            chosen.push_back(pool[j]);
            choose_distinct_tail(profile, j, chosen, emit);
            chosen.pop_back();
        }
    }

    int n_;
    int d_;
    OracleLimits limits_;
    std::vector<MonomialBasis> levels_;
    std::map<int, LevelState> states_;
};

inline MonomialBasis graded_monomials(int n, int d, int w, OracleLimits limits = {}) {
    Oracle o(n, d, limits);
    return o.basis(w);
}

inline RelationMatrix relation_rows(int n, int d, int w, OracleLimits limits = {}) {
    Oracle o(n, d, limits);
    return o.relations(w);
}

/// dim F^w / F^{w+1} on d generators.
inline std::size_t graded_dimension(int n, int d, int w, OracleLimits limits = {}) {
    Oracle o(n, d, limits);
    return o.dimension(w);
}

/// True iff `c` is a consequence of skew-symmetry and the Filippov identity.
inline bool membership(const LinearCombination& c, int n, int d, OracleLimits limits = {}) {
    if (c.empty()) return true;
    Oracle o(n, d, limits);
    return o.contains(c);
}

}  // namespace nlie
