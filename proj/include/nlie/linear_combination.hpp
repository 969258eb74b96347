#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "nlie/term.hpp"

namespace nlie {

using Rational = mpq_class;
using Integer = mpz_class;

struct TermLess {
    bool operator()(const Term& a, const Term& b) const { return compare(a, b) < 0; }
};

/// Formal sum of canonical terms with exact rational coefficients.
/// Zero coefficients are never stored.
class LinearCombination {
public:
    using Map = std::map<Term, Rational, TermLess>;

    LinearCombination() = default;

    /// Single canonical term (vanishing terms give the empty combination).
    static LinearCombination of(const Term& t, const Rational& coeff = 1) {
        LinearCombination lc;
        lc.add(t, coeff);
        return lc;
    }

    /// Adds coeff * t after canonicalizing t.
    void add(const Term& t, const Rational& coeff) {
        if (coeff == 0) return;
        SignedTerm s = canonicalize(t);
        if (s.is_zero()) return;
        add_canonical(*s.term, s.sign > 0 ? coeff : Rational(-coeff));
    }

    /// Adds coeff * t where t is already canonical.
    void add_canonical(const Term& t, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(t, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    void add(const LinearCombination& other, const Rational& scale = 1) {
        if (scale == 0) return;
        for (const auto& [t, c] : other.terms_) add_canonical(t, c * scale);
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        add(o);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        add(o, -1);
        return *this;
    }
    LinearCombination& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [t, c] : terms_) c *= s;
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ib = b.terms_.begin();
        for (const auto& [t, c] : a.terms_) {
            if (!(t == ib->first) || c != ib->second) return false;
            ++ib;
        }
        return true;
    }

    Rational coefficient(const Term& canonical) const {
        auto it = terms_.find(canonical);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

private:
    Map terms_;
};

/// "+1*[x3,x2,x1] -1/2*[...]" in ascending term order; "0" when empty.
inline std::string format(const LinearCombination& lc) {
    if (lc.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : lc) {
        if (!out.empty()) out += ' ';
        out += c > 0 ? "+" : "-";
        Rational a = abs(c);
        out += a.get_str();
        out += '*';
        format_to(out, t);
    }
    return out;
}

}  // namespace nlie
