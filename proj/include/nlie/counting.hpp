#pragma once

// Closed forms, recursions and bounds for the number of basic commutators,
// all in exact arithmetic.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nlie/error.hpp"
#include "nlie/grading.hpp"
#include "nlie/linear_combination.hpp"

namespace nlie {

/// Binomial coefficient; 0 whenever an argument is out of range (k < 0, n < 0 or k > n).
inline Integer binomial(const Integer& n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

inline Integer binomial(long n, long k) { return binomial(Integer(n), k); }

inline Integer power(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Möbius function by trial division.
inline int moebius(long k) {
    if (k < 1) throw DomainError("moebius: argument must be >= 1");
    int sign = 1;
    for (long p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        sign = -sign;
    }
    if (k > 1) sign = -sign;
    return sign;
}

/// (1/len) * sum_{r | len} mu(r) d^{len/r}: the number of primitive necklaces.
inline Integer necklace_count(const Integer& d, long len) {
    if (len < 1) throw DomainError("necklace length must be >= 1");
    Integer sum = 0;
    for (long r = 1; r <= len; ++r) {
        if (len % r != 0) continue;
        const int mu = moebius(r);
        if (mu != 0) sum += mu * power(d, static_cast<unsigned long>(len / r));
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(len)))
        throw Error("necklace sum not divisible by its length");  // cannot happen
    return sum / len;
}

/// Witt's formula l_d(w): dimension of the degree-w part of the free Lie algebra on d generators.
inline Integer witt(const Integer& d, int w) {
    if (d < 0 || w < 1) throw DomainError("witt: need d >= 0 and w >= 1");
    return necklace_count(d, w);
}
inline Integer witt(long d, int w) { return witt(Integer(d), w); }

/// Upper bound with m = n + (w-2)(n-1) in place of w. Coincides with witt when n = 2.
inline Integer necklace_bound(int n, long d, int w) {
    if (n < 2 || d < 1 || w < 1) throw DomainError("necklace_bound: need n >= 2, d >= 1, w >= 1");
    return necklace_count(Integer(d), monomial_length(n, w));
}

/// l_d^n(2) = C(d, n).
inline Integer count_weight2(int n, long d) {
    if (n < 2 || d < 0) throw DomainError("count_weight2: need n >= 2, d >= 0");
    return binomial(d, n);
}

// ---------------------------------------------------------------------------
// The n = d ladder.

/// Coefficients a_1..a_{w-2} of l_n^n(w) = sum_i a_i C(n, i): the binomial row of (a+b)^{w-3}.
inline std::vector<Integer> ladder_coefficients(int w) {
    if (w < 3) throw DomainError("ladder coefficients start at weight 3");
    std::vector<Integer> a;
    for (int i = 1; i <= w - 2; ++i) a.push_back(binomial(w - 3, i - 1));
    return a;
}

/// Coefficient lists exactly as printed for weights 4..10, including the
/// weight-10 line whose fourth term reads 35*C(n,3) instead of 35*C(n,5).
/// Entry pairs are (coefficient, i) for C(n, i).
inline std::vector<std::pair<int, int>> ladder_literal_terms(int w) {
    switch (w) {
        case 4: return {{1, 2}, {1, 1}};
        case 5: return {{1, 3}, {2, 2}, {1, 1}};
        case 6: return {{1, 4}, {3, 3}, {3, 2}, {1, 1}};
        case 7: return {{1, 5}, {4, 4}, {6, 3}, {4, 2}, {1, 1}};
        case 8: return {{1, 6}, {5, 5}, {10, 4}, {10, 3}, {5, 2}, {1, 1}};
        case 9: return {{1, 7}, {6, 6}, {15, 5}, {20, 4}, {15, 3}, {6, 2}, {1, 1}};
        case 10: return {{1, 8}, {7, 7}, {21, 6}, {35, 3}, {35, 4}, {21, 3}, {7, 2}, {1, 1}};
        default: throw DomainError("no literal ladder line for weight " + std::to_string(w));
    }
}

/// The printed per-weight expansions for n = d, w in 1..10, taken verbatim.
inline std::optional<Integer> ladder_literal(int n, int w) {
    if (n < 2 || w < 1) throw DomainError("ladder_literal: need n >= 2, w >= 1");
    if (w > 10) return std::nullopt;
    if (w == 1) return Integer(n);
    if (w == 2) return binomial(n, n);
    if (w == 3) return binomial(n, n - 1);
    Integer sum = 0;
    for (auto [coef, i] : ladder_literal_terms(w)) sum += coef * binomial(n, i);
    return sum;
}

/// C(n + w - 3, w - 2), valid for n >= 3 and w >= 2.
inline Integer ladder_closed_form(int n, int w) { return binomial(n + w - 3, w - 2); }

/// l_n^n(w). n = 2 is the free Lie algebra and goes to witt(2, w); for n >= 3
/// weights up to 10 use the per-weight binomial expansions with the Pascal
/// coefficients and larger weights the closed form.
inline Integer ladder(int n, int w) {
    if (n < 2 || w < 1) throw DomainError("ladder: need n >= 2, w >= 1");
    if (n == 2) return witt(2, w);
    if (w == 1) return n;
    if (w == 2) return 1;
    if (w > 10) return ladder_closed_form(n, w);
    Integer sum = 0;
    auto a = ladder_coefficients(w);
    for (int i = 1; i <= w - 2; ++i) sum += a[static_cast<std::size_t>(i - 1)] * binomial(n, i);
    return sum;
}

/// l_n^n(w) = sum_{w'=2}^{w} l_{n-1}^{n-1}(w') for n >= 4, bottoming out at the n = 3 recursion.
inline Integer ladder_sum_recursion(int n, int w);

/// l_n^n(w) through the recursions: l_3^3(w) = l_3^3(w-1) + (w-1), the
/// two-case recursion for n = 4 and the column-sum recursion for n >= 5.
inline Integer ladder_recursive(int n, int w) {
    if (n < 3 || w < 1) throw DomainError("ladder_recursive: need n >= 3, w >= 1");
    if (w == 1) return n;
    if (w == 2) return 1;
    if (n == 3) {
        Integer l = 1;
        for (int k = 3; k <= w; ++k) l += k - 1;
        return l;
    }
    if (n == 4) {
        Integer l = 1;
        for (int k = 3; k <= w; ++k) {
            const int r = k / 2;
            l += (k % 2 == 0) ? Integer((k - 1) * r) : Integer(k * r);
        }
        return l;
    }
    return ladder_sum_recursion(n, w);
}

inline Integer ladder_sum_recursion(int n, int w) {
    if (n < 4 || w < 1) throw DomainError("ladder_sum_recursion: need n >= 4, w >= 1");
    if (w == 1) return n;
    Integer sum = 0;
    for (int k = 2; k <= w; ++k) sum += (n - 1 == 3) ? ladder_recursive(3, k) : ladder_sum_recursion(n - 1, k);
    return sum;
}

// ---------------------------------------------------------------------------
// Weight 3, 4 and general-w formulas for d >= n.

namespace detail {

inline void require_d_ge_n(int n, long d) {
    if (n < 2) throw DomainError("need n >= 2");
    if (d < n) throw DomainError("formula requires d >= n");
}

}  // namespace detail

/// Double sum over i in 1..d-n+1 and j in i+1..d-1 of (d-j)[C(d-i+1, n-1) - j + i + 1].
inline Integer eq14_weight3(int n, long d) {
    detail::require_d_ge_n(n, d);
    Integer sum = 0;
    for (long i = 1; i <= d - n + 1; ++i)
        for (long j = i + 1; j <= d - 1; ++j) sum += (d - j) * (binomial(d - i + 1, n - 1) - j + i + 1);
    return sum;
}

/// One summand index j of the outer sum with its bracket k and weight beta_{j*}.
struct BetaTerm {
    long j = 0;
    long k = 0;
    Integer j_star = 0;
    Integer beta = 0;
};

/// For j = 1..C(d-1, n-1): the k in n-1..d-1 with C(k-1,n-1)+1 <= j <= C(k,n-1),
/// j* = C(k-1,n-1)+1 and beta_{j*} = d - n - j* + 2. Throws if some j has no bracket.
inline std::vector<BetaTerm> beta_terms(int n, long d) {
    detail::require_d_ge_n(n, d);
    const Integer alpha0 = binomial(d - 1, n - 1);
    std::vector<BetaTerm> out;
    for (long j = 1; alpha0 >= j; ++j) {
        std::optional<BetaTerm> hit;
        for (long k = n - 1; k <= d - 1; ++k) {
            const Integer lo = binomial(k - 1, n - 1) + 1;
            const Integer hi = binomial(k, n - 1);
            if (lo <= j && j <= hi) {
                hit = BetaTerm{j, k, lo, Integer(d - n + 2) - lo};
                break;
            }
        }
        if (!hit) throw DomainError("no admissible bracket k for j = " + std::to_string(j));
        out.push_back(*hit);
    }
    return out;
}

inline Integer beta_sum(int n, long d) {
    Integer s = 0;
    for (const auto& t : beta_terms(n, d)) s += t.beta;
    return s;
}

inline Integer eq15_weight4(int n, long d) {
    const Integer dstar = binomial(d, n - 1);
    return beta_sum(n, d) * (binomial(dstar, 2) + dstar);
}

/// alpha_i = C(w-3, i-2), i = 2..w-1.
inline Integer eq16_alpha(int w, int i) { return binomial(w - 3, i - 2); }

inline Integer eq16_general(int n, long d, int w) {
    if (w < 3) throw DomainError("eq16_general: need w >= 3");
    const Integer dstar = binomial(d, n - 1);
    Integer inner = 0;
    for (int i = 2; i <= w - 1; ++i) inner += eq16_alpha(w, i) * binomial(dstar, w - i);
    return beta_sum(n, d) * inner;
}

// ---------------------------------------------------------------------------
// C(d, n) as a combination of Witt numbers.

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Polynomial in d with rational coefficients, index = degree.
using RationalPoly = std::vector<Rational>;

inline RationalPoly witt_polynomial(int s) {
    RationalPoly p(static_cast<std::size_t>(s) + 1, Rational(0));
    for (int r = 1; r <= s; ++r) {
        if (s % r != 0) continue;
        p[static_cast<std::size_t>(s / r)] += make_rational(moebius(r), s);
    }
    return p;
}

inline RationalPoly binomial_polynomial(int n) {
    RationalPoly p{Rational(1)};
    for (int i = 0; i < n; ++i) {
        RationalPoly q(p.size() + 1, Rational(0));
        for (std::size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= p[k] * i;
        }
        p = std::move(q);
    }
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (auto& c : p) c /= fact;
    return p;
}

/// C(d, n) = sum_{s=1}^{n} c_s l_d(s) as polynomials in d.
struct LieExpansion {
    int n = 0;
    std::vector<Rational> coefficients;  ///< index s = 1..n; index 0 unused

    const Rational& c(int s) const { return coefficients.at(static_cast<std::size_t>(s)); }

    /// C(d,n) - sum_s c_s l_d(s), coefficient by coefficient; all zero when the identity holds.
    RationalPoly residual() const {
        RationalPoly r = binomial_polynomial(n);
        for (int s = 1; s <= n; ++s) {
            auto l = witt_polynomial(s);
            for (std::size_t k = 0; k < l.size(); ++k) r[k] -= c(s) * l[k];
        }
        return r;
    }

    bool identity_holds() const {
        for (const auto& x : residual())
            if (x != 0) return false;
        return true;
    }
};

/// Triangular solve: l_d(s) has degree s with leading coefficient 1/s, so the
/// degree-s coefficient of what remains fixes c_s, from s = n down to 1.
inline LieExpansion lie_expansion(int n) {
    if (n < 1) throw DomainError("lie_expansion: need n >= 1");
    LieExpansion e;
    e.n = n;
    e.coefficients.assign(static_cast<std::size_t>(n) + 1, Rational(0));
    RationalPoly rem = binomial_polynomial(n);
    for (int s = n; s >= 1; --s) {
        auto l = witt_polynomial(s);
        const Rational cs = rem[static_cast<std::size_t>(s)] / l[static_cast<std::size_t>(s)];
        e.coefficients[static_cast<std::size_t>(s)] = cs;
        for (std::size_t k = 0; k < l.size(); ++k) rem[k] -= cs * l[k];
    }
    return e;
}

/// The general-weight formula with every inner C(d*, k) replaced by its
/// expansion in Witt numbers l_{d*}(s), d* = C(d, n-1).
inline Rational countw_via_lie(int n, long d, int w) {
    if (w < 3) throw DomainError("countw_via_lie: need w >= 3");
    const Integer dstar = binomial(d, n - 1);
    Rational inner = 0;
    for (int i = 2; i <= w - 1; ++i) {
        const int k = w - i;
        const LieExpansion e = lie_expansion(k);
        Rational expanded = 0;
        for (int s = 1; s <= k; ++s) expanded += e.c(s) * Rational(witt(dstar, s));
        inner += Rational(eq16_alpha(w, i)) * expanded;
    }
    return Rational(beta_sum(n, d)) * inner;
}

// ---------------------------------------------------------------------------

/// dim F^i / F^{i+c} = l(i) + ... + l(i+c-1) for a chosen source of l.
/// The quotient is abelian when c <= i; the dimension count holds for any c >= 0.
inline Integer lcs_quotient_dim(int i, int c, const std::function<Integer(int)>& l) {
    if (i < 1 || c < 0) throw DomainError("lcs_quotient_dim: need i >= 1 and c >= 0");
    Integer s = 0;
    for (int k = i; k < i + c; ++k) s += l(k);
    return s;
}

/// Counting of all and of nonbasic commutators of weight w.
struct NonbasicBreakdown {
    Integer total;     ///< d^{m_w}
    Integer basic;     ///< l_d^n(w) from the chosen source
    Integer nonbasic;  ///< L_d^n(w) = total - basic
    // Populated for w >= 3.
    std::optional<Integer> l_prime;         ///< L'(w)  = L(w-1) d^{n-1}
    std::optional<Integer> l_double_prime;  ///< L''(w) = l(w-1) (d^{n-1} - C(d,n-1))
    std::optional<Integer> l_star;          ///< 0 when n = d, else l(w-1) C(d,n-1) - l(w)
    std::optional<Integer> kappa;           ///< total - L' - L'' - L*
    /// total - L' - L'' - l(w-1) C(d,n-1) == 0 (the telescoping identity).
    bool telescopes = true;
    /// kappa equals the basic count.
    bool kappa_matches_basic = true;
    /// L' + L'' equals total - basic.
    bool parts_match_nonbasic = true;
};

inline NonbasicBreakdown nonbasic_breakdown(int n, long d, int w, const std::function<Integer(int)>& l) {
    if (n < 2 || d < 1 || w < 1) throw DomainError("nonbasic_breakdown: need n >= 2, d >= 1, w >= 1");
    NonbasicBreakdown b;
    const Integer dd = d;
    b.total = power(dd, static_cast<unsigned long>(monomial_length(n, w)));
    b.basic = l(w);
    b.nonbasic = b.total - b.basic;
    if (w < 3) return b;
    const Integer prev = l(w - 1);
    const Integer total_prev = power(dd, static_cast<unsigned long>(monomial_length(n, w - 1)));
    const Integer dn1 = power(dd, static_cast<unsigned long>(n - 1));
    const Integer c_n1 = binomial(d, n - 1);
    b.l_prime = (total_prev - prev) * dn1;
    b.l_double_prime = prev * (dn1 - c_n1);
    b.l_star = (n == d) ? Integer(0) : Integer(prev * c_n1 - b.basic);
    b.kappa = b.total - *b.l_prime - *b.l_double_prime - *b.l_star;
    b.telescopes = (b.total - *b.l_prime - *b.l_double_prime - prev * c_n1) == 0;
    b.kappa_matches_basic = *b.kappa == b.basic;
    b.parts_match_nonbasic = (*b.l_prime + *b.l_double_prime) == b.nonbasic;
    return b;
}

// ---------------------------------------------------------------------------

enum class Method {
    Witt,
    NecklaceBound,
    Weight2,
    Ladder,
    LadderRecursive,
    LadderLiteral,
    Eq14,
    Eq15,
    Eq16,
    EnumFull,
    EnumLeft,
    Oracle,
    ViaLie,
};

inline const std::vector<Method>& all_methods() {
    static const std::vector<Method> v{Method::Witt,     Method::NecklaceBound, Method::Weight2,
                                       Method::Ladder,   Method::LadderRecursive, Method::LadderLiteral,
                                       Method::Eq14,     Method::Eq15,          Method::Eq16,
                                       Method::EnumFull, Method::EnumLeft,      Method::Oracle,
                                       Method::ViaLie};
    return v;
}

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Witt: return "WITT";
        case Method::NecklaceBound: return "NECKLACE_BOUND";
        case Method::Weight2: return "WEIGHT2";
        case Method::Ladder: return "LADDER";
        case Method::LadderRecursive: return "LADDER_RECURSIVE";
        case Method::LadderLiteral: return "LADDER_LITERAL";
        case Method::Eq14: return "EQ14";
        case Method::Eq15: return "EQ15";
        case Method::Eq16: return "EQ16";
        case Method::EnumFull: return "ENUM_FULL";
        case Method::EnumLeft: return "ENUM_LEFT";
        case Method::Oracle: return "ORACLE";
        case Method::ViaLie: return "VIA_LIE";
    }
    return "?";
}

/// Accepts the tag ("LADDER_RECURSIVE") or the CLI spelling ("ladder-recursive").
inline Method parse_method(std::string s) {
    for (char& ch : s) {
        if (ch == '-') ch = '_';
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    }
    if (s == "NECKLACE") return Method::NecklaceBound;
    for (Method m : all_methods())
        if (to_string(m) == s) return m;
    throw DomainError("unknown method '" + s + "'");
}

/// Exact counts keyed by (n, d, w, method). Absent cells are simply not stored.
class CountTable {
public:
    using Key = std::tuple<int, long, int, Method>;

    void set(int n, long d, int w, Method m, Rational v) { entries_[{n, d, w, m}] = std::move(v); }

    std::optional<Rational> get(int n, long d, int w, Method m) const {
        auto it = entries_.find({n, d, w, m});
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<Key, Rational>& entries() const { return entries_; }

private:
    std::map<Key, Rational> entries_;
};

/// Integer-valued rationals print as integers, others as p/q in lowest terms.
inline std::string format(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

}  // namespace nlie
