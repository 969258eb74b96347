#pragma once

// Method dispatch, the comparison report and the reference tables.

#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nlie/basis.hpp"
#include "nlie/counting.hpp"
#include "nlie/error.hpp"
#include "nlie/grading.hpp"
#include "nlie/oracle.hpp"
#include "nlie/oracle_cache.hpp"

namespace nlie {

struct EvaluatorOptions {
    OracleLimits oracle;
    EnumerationLimits enumeration;
};

/// Evaluates any counting method on a cell, reusing enumerators and oracles
/// across cells. A method that does not apply to the cell, or whose
/// computation exceeds its ceiling, yields nullopt.
class Evaluator {
public:
    explicit Evaluator(EvaluatorOptions opts = {}, OracleCache cache = {})
        : opts_(opts), cache_(std::move(cache)) {}

    /// Why the last nullopt came back (empty if the method simply did not apply).
    const std::string& last_note() const { return note_; }

    bool applies(Method m, int n, int d, int w) const {
        switch (m) {
            case Method::Witt: return n == 2;
            case Method::NecklaceBound: return true;
            case Method::Weight2: return w == 2;
            case Method::Ladder:
            case Method::LadderLiteral: return n == d;
            case Method::LadderRecursive: return n == d && n >= 3;
            case Method::Eq14: return w == 3 && d >= n;
            case Method::Eq15: return w == 4 && d >= n;
            case Method::Eq16:
            case Method::ViaLie: return w >= 3 && d >= n;
            case Method::EnumFull:
            case Method::EnumLeft:
            case Method::Oracle: return true;
        }
        return false;
    }

    std::optional<Rational> evaluate(Method m, int n, int d, int w) {
        note_.clear();
        if (n < 2 || d < 1 || w < 1) throw DomainError("need n >= 2, d >= 1, w >= 1");
        if (!applies(m, n, d, w)) return std::nullopt;
        try {
            return compute(m, n, d, w);
        } catch (const CapacityError& e) {
            note_ = e.what();
            return std::nullopt;
        }
    }

    /// Like evaluate, but a missing value is an error.
    Rational require(Method m, int n, int d, int w) {
        auto v = evaluate(m, n, d, w);
        if (v) return *v;
        if (!note_.empty()) throw CapacityError(to_string(m) + " uncomputed: " + note_);
        throw DomainError(to_string(m) + " does not apply to n=" + std::to_string(n) + ", d=" +
                          std::to_string(d) + ", w=" + std::to_string(w));
    }

    OracleRecord oracle_record(int n, int d, int w) {
        if (auto hit = cache_.find(n, d, w)) return *hit;
        Oracle& o = oracle(n, d);
        OracleRecord r{n, d, w, o.basis(w).size(), o.rank(w), o.dimension(w)};
        cache_.store(r);
        return r;
    }

private:
    Rational compute(Method m, int n, int d, int w) {
        switch (m) {
            case Method::Witt: return Rational(witt(d, w));
            case Method::NecklaceBound: return Rational(necklace_bound(n, d, w));
            case Method::Weight2: return Rational(count_weight2(n, d));
            case Method::Ladder: return Rational(ladder(n, w));
            case Method::LadderRecursive: return Rational(ladder_recursive(n, w));
            case Method::LadderLiteral: {
                auto v = ladder_literal(n, w);
                if (!v) throw CapacityError("no literal expansion beyond weight 10");
                return Rational(*v);
            }
            case Method::Eq14: return Rational(eq14_weight3(n, d));
            case Method::Eq15: return Rational(eq15_weight4(n, d));
            case Method::Eq16: return Rational(eq16_general(n, d, w));
            case Method::ViaLie: return countw_via_lie(n, d, w);
            case Method::EnumFull: return Rational(Integer(static_cast<unsigned long>(enumerator(n, d, EnumerationMode::FullRule3).count(w))));
            case Method::EnumLeft: return Rational(Integer(static_cast<unsigned long>(enumerator(n, d, EnumerationMode::LeftNormed).count(w))));
            case Method::Oracle: return Rational(Integer(static_cast<unsigned long>(oracle_record(n, d, w).dim)));
        }
        throw DomainError("unknown method");
    }

    BasicEnumerator& enumerator(int n, int d, EnumerationMode mode) {
        auto key = std::make_tuple(n, d, mode);
        auto it = enumerators_.find(key);
        if (it == enumerators_.end())
            it = enumerators_.emplace(key, std::make_unique<BasicEnumerator>(n, d, mode, opts_.enumeration)).first;
        return *it->second;
    }

    Oracle& oracle(int n, int d) {
        auto key = std::make_pair(n, d);
        auto it = oracles_.find(key);
        if (it == oracles_.end()) it = oracles_.emplace(key, std::make_unique<Oracle>(n, d, opts_.oracle)).first;
        return *it->second;
    }

    EvaluatorOptions opts_;
    OracleCache cache_;
    std::string note_;
    std::map<std::tuple<int, int, EnumerationMode>, std::unique_ptr<BasicEnumerator>> enumerators_;
    std::map<std::pair<int, int>, std::unique_ptr<Oracle>> oracles_;
};

/// dim F^i / F^{i+c} with l taken from `m`.
inline Integer lcs_quotient_dim(int n, int d, int i, int c, Method m, Evaluator& ev) {
    return lcs_quotient_dim(i, c, [&](int k) {
        Rational v = ev.require(m, n, d, k);
        if (v.get_den() != 1) throw DomainError("non-integral count from " + to_string(m));
        return Integer(v.get_num());
    });
}

// ---------------------------------------------------------------------------
// Comparison report.

/// Columns of the comparison report, in order.
inline const std::vector<Method>& compare_methods() {
    static const std::vector<Method> v{Method::Witt,     Method::Ladder,   Method::LadderRecursive,
                                       Method::LadderLiteral, Method::Weight2, Method::Eq14,
                                       Method::Eq15,     Method::Eq16,     Method::ViaLie,
                                       Method::EnumLeft, Method::EnumFull, Method::Oracle,
                                       Method::NecklaceBound};
    return v;
}

struct ReportRow {
    int n = 0;
    int d = 0;
    int w = 0;
    std::map<Method, Rational> values;  ///< populated cells only
    std::optional<Method> reference;
    std::vector<std::string> flags;
};

/// The value every other method is checked against: WITT for n = 2, LADDER
/// for n = d >= 3, otherwise ORACLE, or ENUM_FULL when the oracle is uncomputed.
inline std::optional<Method> reference_method(const ReportRow& row) {
    auto has = [&](Method m) { return row.values.count(m) > 0; };
    if (row.n == 2 && has(Method::Witt)) return Method::Witt;
    if (row.n == row.d && has(Method::Ladder)) return Method::Ladder;
    if (has(Method::Oracle)) return Method::Oracle;
    if (has(Method::EnumFull)) return Method::EnumFull;
    return std::nullopt;
}

inline void flag_row(ReportRow& row) {
    row.flags.clear();
    row.reference = reference_method(row);
    if (row.reference) {
        const Rational& ref = row.values.at(*row.reference);
        for (Method m : compare_methods()) {
            if (m == *row.reference || m == Method::NecklaceBound) continue;
            auto it = row.values.find(m);
            if (it == row.values.end() || it->second == ref) continue;
            row.flags.push_back(to_string(m) + "=" + format(it->second) + " vs " + to_string(*row.reference) + "=" +
                                format(ref));
        }
    }
    auto bound = row.values.find(Method::NecklaceBound);
    if (bound != row.values.end()) {
        for (Method m : compare_methods()) {
            if (m == Method::NecklaceBound) continue;
            auto it = row.values.find(m);
            if (it != row.values.end() && it->second > bound->second)
                row.flags.push_back(to_string(m) + "=" + format(it->second) + " > NECKLACE_BOUND=" +
                                    format(bound->second));
        }
    }
}

inline ReportRow compare_cell(int n, int d, int w, Evaluator& ev) {
    ReportRow row{n, d, w, {}, std::nullopt, {}};
    for (Method m : compare_methods())
        if (auto v = ev.evaluate(m, n, d, w)) row.values.emplace(m, *v);
    flag_row(row);
    return row;
}

/// RFC 4180 quoting for one field.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string compare_header() {
    std::string h = "n,d,w";
    for (Method m : compare_methods()) h += "," + to_string(m);
    return h + ",flags";
}

inline std::string format_row(const ReportRow& row) {
    std::string line = std::to_string(row.n) + "," + std::to_string(row.d) + "," + std::to_string(row.w);
    for (Method m : compare_methods()) {
        line += ',';
        auto it = row.values.find(m);
        if (it != row.values.end()) line += format(it->second);
    }
    std::string flags;
    for (const auto& f : row.flags) flags += (flags.empty() ? "" : "; ") + f;
    return line + "," + csv_field(flags);
}

inline std::string compare_policy_comment() {
    return "# reference: WITT for n=2, LADDER for n=d>=3, otherwise ORACLE (ENUM_FULL if uncomputed); "
           "empty cell = not applicable or uncomputed";
}

/// Full report for w = 1..w_max.
inline std::string compare_report(int n, int d, int w_max, Evaluator& ev) {
    std::ostringstream out;
    out << compare_policy_comment() << '\n' << compare_header() << '\n';
    for (int w = 1; w <= w_max; ++w) out << format_row(compare_cell(n, d, w, ev)) << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Reference tables as CSV.

/// Lengths n + (w-2)(n-1), n = 2..8, w = 1..8.
inline std::string table2() {
    std::ostringstream out;
    out << "n";
    for (int w = 1; w <= 8; ++w) out << ",w" << w;
    out << '\n';
    for (int n = 2; n <= 8; ++n) {
        out << n;
        for (int w = 1; w <= 8; ++w) out << ',' << monomial_length(n, w);
        out << '\n';
    }
    return out.str();
}

/// Binomial coefficients a_i of l_n^n(w) = sum a_i C(n, i), w = 4..10.
inline std::string table3() {
    std::ostringstream out;
    out << "w";
    for (int i = 1; i <= 8; ++i) out << ",a" << i;
    out << '\n';
    for (int w = 4; w <= 10; ++w) {
        out << w;
        auto a = ladder_coefficients(w);
        for (std::size_t i = 0; i < 8; ++i) {
            out << ',';
            if (i < a.size()) out << a[i].get_str();
        }
        out << '\n';
    }
    return out.str();
}

/// l_n^n(w) for n = 2..10, w = 1..10.
inline std::string table4() {
    std::ostringstream out;
    out << "# values: WITT for n=2, LADDER for n>=3\n";
    out << "w";
    for (int n = 2; n <= 10; ++n) out << ",n" << n;
    out << '\n';
    for (int w = 1; w <= 10; ++w) {
        out << w;
        for (int n = 2; n <= 10; ++n) out << ',' << (n == 2 ? witt(2, w) : ladder(n, w)).get_str();
        out << '\n';
    }
    return out.str();
}

/// Coefficients c_s of C(d, n) = sum_s c_s l_d(s), n = 2..10, in lowest terms.
inline std::string table5() {
    std::ostringstream out;
    out << "n";
    for (int s = 1; s <= 10; ++s) out << ",c" << s;
    out << '\n';
    for (int n = 2; n <= 10; ++n) {
        const LieExpansion e = lie_expansion(n);
        out << n;
        for (int s = 1; s <= 10; ++s) {
            out << ',';
            if (s <= n) out << format(e.c(s));
        }
        out << '\n';
    }
    return out.str();
}

inline std::string table(int which) {
    switch (which) {
        case 2: return table2();
        case 3: return table3();
        case 4: return table4();
        case 5: return table5();
    }
    throw DomainError("no table " + std::to_string(which) + " (expected 2, 3, 4 or 5)");
}

}  // namespace nlie
