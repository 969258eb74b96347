#pragma once

// Bracket terms of a free n-Lie algebra: syntax, grading, the term order and
// skew-symmetric canonical form.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlie/error.hpp"

namespace nlie {

/// Generator x_k of the alphabet, 1-based. x_i < x_j iff i < j.
struct Generator {
    int index = 1;

    friend constexpr auto operator<=>(Generator, Generator) = default;
};

/// Immutable n-ary bracket tree over generators.
///
/// Nodes are shared, so copies are cheap. Weight and length are cached at
/// construction: a leaf has weight 1 and length 1, and a bracket with
/// components c_1..c_n has length sum(length c_i) and weight
/// sum(weight c_i) - (n - 2). With a uniform arity this makes
/// length - 1 = (weight - 1)(n - 1) for every term.
class Term {
public:
    static Term leaf(Generator g) {
        if (g.index < 1) throw DomainError("generator index must be >= 1");
        auto node = std::make_shared<Node>();
        node->gen = g.index;
        node->weight = 1;
        node->length = 1;
        return Term(std::move(node));
    }
    static Term leaf(int index) { return leaf(Generator{index}); }

    static Term bracket(std::vector<Term> children) {
        if (children.size() < 2) throw ArityError("a bracket needs at least two components");
        auto node = std::make_shared<Node>();
        int w = 0;
        int m = 0;
        for (const Term& c : children) {
            w += c.weight();
            m += c.length();
        }
        node->weight = w - (static_cast<int>(children.size()) - 2);
        node->length = m;
        node->kids = std::move(children);
        return Term(std::move(node));
    }

    bool is_leaf() const { return node_->gen != 0; }
    Generator generator() const { return Generator{node_->gen}; }
    std::span<const Term> children() const { return node_->kids; }
    const Term& child(std::size_t i) const { return node_->kids.at(i); }
    std::size_t arity() const { return node_->kids.size(); }
    int weight() const { return node_->weight; }
    int length() const { return node_->length; }

    bool same_node(const Term& other) const { return node_ == other.node_; }

private:
    struct Node {
        int gen = 0;
        int weight = 1;
        int length = 1;
        std::vector<Term> kids;
    };

    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    std::shared_ptr<const Node> node_;
};

inline int weight(const Term& t) { return t.weight(); }
inline int length(const Term& t) { return t.length(); }

/// Throws ArityError unless every bracket of `t` has exactly `n` components.
inline void check_arity(const Term& t, int n) {
    if (t.is_leaf()) return;
    if (static_cast<int>(t.arity()) != n)
        throw ArityError("bracket with " + std::to_string(t.arity()) + " components, expected " +
                         std::to_string(n));
    for (const Term& c : t.children()) check_arity(c, n);
}

/// Weight under the F^w grading. Validates the arity.
inline int weight(const Term& t, int n) {
    check_arity(t, n);
    return t.weight();
}

/// The term order.
///
/// Lower weight is smaller. Leaves compare by generator index. Equal-weight
/// brackets compare first by their component-weight profile and then by the
/// components themselves, both read right to left: the first differing
/// position from the right decides. At weight 2 this is exactly the
/// right-to-left rule on generator indices.
inline std::strong_ordering compare(const Term& a, const Term& b) {
    if (a.same_node(b)) return std::strong_ordering::equal;
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    if (a.is_leaf() || b.is_leaf()) {
        if (a.is_leaf() && b.is_leaf()) return a.generator() <=> b.generator();
        return a.is_leaf() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    const auto ka = a.children();
    const auto kb = b.children();
    for (std::size_t i = ka.size(); i-- > 0;) {
        if (auto c = ka[i].weight() <=> kb[i].weight(); c != 0) return c;
    }
    for (std::size_t i = ka.size(); i-- > 0;) {
        if (auto c = compare(ka[i], kb[i]); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline std::strong_ordering operator<=>(const Term& a, const Term& b) { return compare(a, b); }

/// Result of canonicalization: sign 0 means the term vanished by skew-symmetry.
struct SignedTerm {
    int sign = 0;
    std::optional<Term> term;

    bool is_zero() const { return sign == 0; }
};

/// Sorts the components of every bracket strictly descending, tracking the
/// permutation sign. A bracket with two equal components annihilates the term.
inline SignedTerm canonicalize(const Term& t) {
    if (t.is_leaf()) return {1, t};
    int sign = 1;
    std::vector<Term> kids;
    kids.reserve(t.arity());
    bool changed = false;
    for (const Term& c : t.children()) {
        SignedTerm s = canonicalize(c);
        if (s.is_zero()) return {};
        sign *= s.sign;
        changed = changed || !s.term->same_node(c);
        kids.push_back(std::move(*s.term));
    }
    // Insertion sort by adjacent transpositions; each swap flips the sign.
    for (std::size_t i = 1; i < kids.size(); ++i) {
        for (std::size_t j = i; j > 0; --j) {
            auto c = compare(kids[j - 1], kids[j]);
            if (c == 0) return {};
            if (c > 0) break;
            std::swap(kids[j - 1], kids[j]);
            sign = -sign;
            changed = true;
        }
    }
    if (!changed) return {sign, t};
    return {sign, Term::bracket(std::move(kids))};
}

inline SignedTerm canonicalize(const Term& t, int n) {
    check_arity(t, n);
    return canonicalize(t);
}

inline bool is_canonical(const Term& t) {
    SignedTerm s = canonicalize(t);
    return s.sign == 1 && s.term->same_node(t);
}

inline void format_to(std::string& out, const Term& t) {
    if (t.is_leaf()) {
        out += 'x';
        out += std::to_string(t.generator().index);
        return;
    }
    out += '[';
    bool first = true;
    for (const Term& c : t.children()) {
        if (!first) out += ',';
        first = false;
        format_to(out, c);
    }
    out += ']';
}

inline std::string format(const Term& t) {
    std::string out;
    format_to(out, t);
    return out;
}

namespace detail {

class TermParser {
public:
    TermParser(std::string_view text, int n) : text_(text), n_(n) {}

    Term parse_all() {
        Term t = parse_term();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
        return t;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Term parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == 'x') return parse_leaf();
        if (c == '[') return parse_bracket();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    Term parse_leaf() {
        const std::size_t start = pos_++;
        long value = 0;
        std::size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000) throw ParseError("generator index too large", start);
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw ParseError("expected generator index after 'x'", pos_);
        if (value < 1) throw ParseError("generator index must be >= 1", start);
        return Term::leaf(static_cast<int>(value));
    }

    Term parse_bracket() {
        const std::size_t open = pos_++;
        std::vector<Term> kids;
        kids.push_back(parse_term());
        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) throw ParseError("unterminated bracket", open);
            if (text_[pos_] == ',') {
                ++pos_;
                kids.push_back(parse_term());
                continue;
            }
            if (text_[pos_] == ']') {
                ++pos_;
                break;
            }
            throw ParseError(std::string("expected ',' or ']' but found '") + text_[pos_] + "'", pos_);
        }
        if (static_cast<int>(kids.size()) != n_)
            throw ArityError("bracket at position " + std::to_string(open) + " has " +
                             std::to_string(kids.size()) + " components, expected " +
                             std::to_string(n_));
        return Term::bracket(std::move(kids));
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `x<k>` leaves and `[t1,...,tn]` brackets. Whitespace between tokens is ignored.
inline Term parse(std::string_view text, int n) {
    if (n < 2) throw DomainError("arity must be >= 2");
    return detail::TermParser(text, n).parse_all();
}

/// Largest generator index occurring in `t`.
inline int max_generator(const Term& t) {
    if (t.is_leaf()) return t.generator().index;
    int m = 0;
    for (const Term& c : t.children()) m = std::max(m, max_generator(c));
    return m;
}

/// Applies `map` to every leaf. Used for relabeling generators.
template <typename F>
Term relabel(const Term& t, F&& map) {
    if (t.is_leaf()) return Term::leaf(map(t.generator()));
    std::vector<Term> kids;
    kids.reserve(t.arity());
    for (const Term& c : t.children()) kids.push_back(relabel(c, map));
    return Term::bracket(std::move(kids));
}

/// Subterm at a path of child indices from the root.
inline const Term& subterm(const Term& t, std::span<const int> path) {
    const Term* cur = &t;
    for (int i : path) {
        if (cur->is_leaf() || i < 0 || static_cast<std::size_t>(i) >= cur->arity())
            throw DomainError("invalid node path");
        cur = &cur->children()[static_cast<std::size_t>(i)];
    }
    return *cur;
}

/// Copy of `t` with the node at `path` replaced by `replacement`.
inline Term replace_at(const Term& t, std::span<const int> path, const Term& replacement) {
    if (path.empty()) return replacement;
    if (t.is_leaf() || path[0] < 0 || static_cast<std::size_t>(path[0]) >= t.arity())
        throw DomainError("invalid node path");
    std::vector<Term> kids(t.children().begin(), t.children().end());
    auto& slot = kids[static_cast<std::size_t>(path[0])];
    slot = replace_at(slot, path.subspan(1), replacement);
    return Term::bracket(std::move(kids));
}

}  // namespace nlie
