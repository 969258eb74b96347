#pragma once

// Exact rank of sparse integer matrices by fraction-free elimination.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace nlie {

/// Sparse integer vector, entries sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, mpz_class>>;

/// Divides out the content and makes the leading entry positive.
inline void make_primitive(SparseRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

/// Row echelon form built one row at a time.
///
/// Each stored row is keyed by its leading column. A new row is reduced by
/// repeatedly cancelling its leading entry against the stored row with the
/// same leading column, using only integer cross-multiplication
/// (row <- (p/g) row - (r/g) pivot, g = gcd(p, r)) followed by content
/// removal, so no rationals appear and coefficients stay small.
class EchelonBasis {
public:
    /// Adds `row` to the span. Returns true iff the rank grew.
    bool insert(SparseRow row) {
        reduce(row);
        if (row.empty()) return false;
        make_primitive(row);
        const std::size_t lead = row.front().first;
        pivots_.emplace(lead, std::move(row));
        return true;
    }

    /// True iff `row` lies in the current span.
    bool contains(SparseRow row) const {
        reduce(row);
        return row.empty();
    }

    std::size_t rank() const { return pivots_.size(); }

private:
    void reduce(SparseRow& row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) return;
            const SparseRow& piv = it->second;
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), row.front().second.get_mpz_t());
            const mpz_class a = piv.front().second / g;  // multiplies row
            const mpz_class b = row.front().second / g;  // multiplies pivot
            SparseRow out;
            out.reserve(row.size() + piv.size());
            std::size_t i = 0;
            std::size_t j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    out.emplace_back(row[i].first, a * row[i].second);
                    ++i;
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    out.emplace_back(piv[j].first, -b * piv[j].second);
                    ++j;
                } else {
                    mpz_class v = a * row[i].second - b * piv[j].second;
                    if (v != 0) out.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            make_primitive(out);
            row = std::move(out);
        }
    }

    std::map<std::size_t, SparseRow> pivots_;
};

inline std::size_t exact_rank(const std::vector<SparseRow>& rows) {
    EchelonBasis e;
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

}  // namespace nlie
