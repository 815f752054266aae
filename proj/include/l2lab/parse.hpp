#ifndef L2LAB_PARSE_HPP
#define L2LAB_PARSE_HPP

#include <cctype>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chain_complex.hpp"
#include "crossed_product.hpp"
#include "dimension.hpp"
#include "format.hpp"
#include "group_ring.hpp"
#include "rational_function.hpp"

namespace l2lab {

struct source_pos {
    unsigned line = 1;
    unsigned col = 1;
};

// Parse errors carry the position; the CLI turns them into exit code 2.
class parse_error : public error {
public:
    parse_error(source_pos pos, const std::string& what)
        : error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + what), pos_(pos) {}
    source_pos pos() const { return pos_; }

private:
    source_pos pos_;
};

enum class token_kind { ident, number, punct, end };

struct token {
    token_kind kind = token_kind::end;
    std::string text;          // ident name or punct character
    rational value;            // number payload
    bool imaginary = false;    // number written with an i suffix, e.g. 1/2i
    source_pos pos;
};

// Whitespace- and newline-insensitive tokenizer; `#` starts a comment that
// runs to the end of the line. Rationals are written without spaces (3/2),
// an immediate i suffix makes them imaginary.
class lexer {
public:
    explicit lexer(std::string src) : src_(std::move(src)) { current_ = scan(); }

    const token& peek() const { return current_; }

    token next() {
        token t = current_;
        current_ = scan();
        return t;
    }

    bool at_end() const { return current_.kind == token_kind::end; }

    bool accept_punct(char c) {
        if (current_.kind == token_kind::punct && current_.text[0] == c) {
            next();
            return true;
        }
        return false;
    }

    void expect_punct(char c) {
        if (!accept_punct(c))
            throw parse_error(current_.pos, std::string("expected '") + c + "'");
    }

    bool accept_ident(const std::string& name) {
        if (current_.kind == token_kind::ident && current_.text == name) {
            next();
            return true;
        }
        return false;
    }

    std::string expect_ident() {
        if (current_.kind != token_kind::ident)
            throw parse_error(current_.pos, "expected an identifier");
        return next().text;
    }

    long long expect_integer() {
        bool neg = accept_punct('-');
        if (current_.kind != token_kind::number || !is_integer(current_.value) ||
            current_.imaginary)
            throw parse_error(current_.pos, "expected an integer");
        const token t = next();
        const long long v = static_cast<long long>(numerator(t.value));
        return neg ? -v : v;
    }

private:
    token scan() {
        skip_blank();
        token t;
        t.pos = pos_;
        if (k_ >= src_.size()) return t;
        const char c = src_[k_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            std::string den;
            if (k_ + 1 < src_.size() && src_[k_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[k_ + 1]))) {
                take();
                den = read_digits();
                if (big_int(den) == 0) throw parse_error(t.pos, "zero denominator in a rational");
            }
            t.kind = token_kind::number;
            t.value = den.empty() ? rational(big_int(digits)) : rational(big_int(digits), big_int(den));
            if (k_ < src_.size() && src_[k_] == 'i' &&
                (k_ + 1 >= src_.size() || !is_ident_char(src_[k_ + 1]))) {
                take();
                t.imaginary = true;
            }
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = token_kind::ident;
            while (k_ < src_.size() && is_ident_char(src_[k_])) t.text += take();
            return t;
        }
        constexpr const char* puncts = "[]()+-*/^,=;";
        if (std::strchr(puncts, c)) {
            t.kind = token_kind::punct;
            t.text = std::string(1, take());
            return t;
        }
        throw parse_error(t.pos, std::string("unexpected character '") + c + "'");
    }

    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::string read_digits() {
        std::string out;
        while (k_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k_]))) out += take();
        return out;
    }

    void skip_blank() {
        while (k_ < src_.size()) {
            const char c = src_[k_];
            if (c == '#') {
                while (k_ < src_.size() && src_[k_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    char take() {
        const char c = src_[k_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.col = 1;
        } else {
            ++pos_.col;
        }
        return c;
    }

    std::string src_;
    std::size_t k_ = 0;
    source_pos pos_;
    token current_;
};

// ---------------------------------------------------------------------------
// Element grammar, shared by every ring context:
//   element := ['-'] term { ('+'|'-') term }
//   term    := factor { '*' factor }
//   factor  := base ['^' integer]
//   base    := '(' element ')' | number | number'i' | 'i' | 'e' | generator
// ---------------------------------------------------------------------------

template <class Ctx>
class element_grammar {
public:
    using E = ring_element_t<Ctx>;

    explicit element_grammar(const Ctx& ctx) : ctx_(ctx) {}

    E parse(lexer& lx) const {
        const bool neg = lx.accept_punct('-');
        E acc = parse_term(lx);
        if (neg) acc = -acc;
        for (;;) {
            if (lx.accept_punct('+')) {
                acc = acc + parse_term(lx);
            } else if (lx.accept_punct('-')) {
                acc = acc - parse_term(lx);
            } else {
                return acc;
            }
        }
    }

private:
    E parse_term(lexer& lx) const {
        E acc = parse_factor(lx);
        while (lx.accept_punct('*')) acc = acc * parse_factor(lx);
        return acc;
    }

    E parse_factor(lexer& lx) const {
        const source_pos pos = lx.peek().pos;
        E base = parse_base(lx);
        if (lx.accept_punct('^')) {
            const long long k = lx.expect_integer();
            try {
                base = base.pow(k);
            } catch (const error& e) {
                throw parse_error(pos, e.what());
            }
        }
        return base;
    }

    E parse_base(lexer& lx) const {
        const token t = lx.peek();
        if (t.kind == token_kind::punct && t.text == "(") {
            lx.next();
            E inner = parse(lx);
            lx.expect_punct(')');
            return inner;
        }
        if (t.kind == token_kind::number) {
            lx.next();
            const gaussian_rational c =
                t.imaginary ? gaussian_rational(rational(0), t.value) : gaussian_rational(t.value);
            return scalar(c);
        }
        if (t.kind == token_kind::ident) {
            lx.next();
            if (t.text == "i") return scalar(gaussian_rational::i());
            if (t.text == "e") return scalar(gaussian_rational(1));
            if (auto g = generator(t.text)) return *g;
            throw parse_error(t.pos, "unknown generator '" + t.text + "'");
        }
        throw parse_error(t.pos, "expected an element");
    }

    E scalar(const gaussian_rational& c) const;
    std::optional<E> generator(const std::string& name) const;

    const Ctx& ctx_;
};

template <>
inline element_grammar<free_abelian_group>::E element_grammar<free_abelian_group>::scalar(
    const gaussian_rational& c) const {
    return E::scalar(ctx_, c);
}
template <>
inline std::optional<element_grammar<free_abelian_group>::E>
element_grammar<free_abelian_group>::generator(const std::string& name) const {
    for (int k = 0; k < ctx_.rank(); ++k) {
        if (name == abelian_variable_name(ctx_.rank(), k) || name == "z" + std::to_string(k + 1))
            return E::of(ctx_, ctx_.generator(k));
    }
    return std::nullopt;
}

template <>
inline element_grammar<free_group>::E element_grammar<free_group>::scalar(
    const gaussian_rational& c) const {
    return E::scalar(ctx_, c);
}
template <>
inline std::optional<element_grammar<free_group>::E> element_grammar<free_group>::generator(
    const std::string& name) const {
    for (int k = 0; k < ctx_.rank(); ++k) {
        const std::string canonical = ctx_.rank() <= 2 ? (k == 0 ? "x" : "y")
                                                       : "x" + std::to_string(k + 1);
        if (name == canonical || name == "x" + std::to_string(k + 1))
            return E::of(ctx_, ctx_.generator(k));
    }
    return std::nullopt;
}

template <>
inline element_grammar<finite_group>::E element_grammar<finite_group>::scalar(
    const gaussian_rational& c) const {
    return E::scalar(ctx_, c);
}
template <>
inline std::optional<element_grammar<finite_group>::E> element_grammar<finite_group>::generator(
    const std::string& name) const {
    for (finite_group::element h = 0; h < ctx_.order(); ++h) {
        if (h != ctx_.identity() && ctx_.element_name(h) == name) return E::of(ctx_, h);
    }
    return std::nullopt;
}

template <>
inline element_grammar<crossed_product<free_abelian_group>>::E
element_grammar<crossed_product<free_abelian_group>>::scalar(const gaussian_rational& c) const {
    return E::scalar(ctx_, c);
}
template <>
inline std::optional<element_grammar<crossed_product<free_abelian_group>>::E>
element_grammar<crossed_product<free_abelian_group>>::generator(const std::string& name) const {
    const free_abelian_group& base = ctx_.base();
    for (int k = 0; k < base.rank(); ++k) {
        if (name == abelian_variable_name(base.rank(), k) || name == "z" + std::to_string(k + 1)) {
            return E::from_base(ctx_,
                                group_ring_element<free_abelian_group>::of(base, base.generator(k)));
        }
    }
    for (finite_group::element h = 0; h < ctx_.act().order(); ++h) {
        if (h != ctx_.act().identity() && ctx_.act().element_name(h) == name)
            return E::section(ctx_, h);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matrices: [[a, b],[c, d]]; a single bracket level means one row; [] is 0x0.
// ---------------------------------------------------------------------------

template <class Ctx>
matrix<ring_element_t<Ctx>> parse_element_matrix(lexer& lx, const Ctx& ctx) {
    using E = ring_element_t<Ctx>;
    const element_grammar<Ctx> grammar(ctx);
    const source_pos start = lx.peek().pos;
    lx.expect_punct('[');
    if (lx.accept_punct(']')) return matrix<E>(0, 0);

    std::vector<std::vector<E>> rows;
    const bool nested = lx.peek().kind == token_kind::punct && lx.peek().text == "[";
    if (nested) {
        for (;;) {
            lx.expect_punct('[');
            std::vector<E> row;
            if (!lx.accept_punct(']')) {
                do {
                    row.push_back(grammar.parse(lx));
                } while (lx.accept_punct(','));
                lx.expect_punct(']');
            }
            rows.push_back(std::move(row));
            if (!lx.accept_punct(',')) break;
        }
        lx.expect_punct(']');
    } else {
        std::vector<E> row;
        do {
            row.push_back(grammar.parse(lx));
        } while (lx.accept_punct(','));
        lx.expect_punct(']');
        rows.push_back(std::move(row));
    }

    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw parse_error(start, "matrix rows have different lengths");
    }
    matrix<E> out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(rows[i][j]);
    return out;
}

// Rational function over Z^n: element or element / element.
inline rational_function parse_rational_function(lexer& lx, const free_abelian_group& g) {
    const element_grammar<free_abelian_group> grammar(g);
    const source_pos pos = lx.peek().pos;
    const laurent_poly num = to_laurent(grammar.parse(lx));
    if (!lx.accept_punct('/')) return rational_function(num);
    const laurent_poly den = to_laurent(grammar.parse(lx));
    if (den.is_zero()) throw parse_error(pos, "zero denominator");
    return rational_function(num, den);
}

inline matrix<rational_function> parse_rational_function_matrix(lexer& lx,
                                                                const free_abelian_group& g) {
    const source_pos start = lx.peek().pos;
    lx.expect_punct('[');
    if (lx.accept_punct(']')) return matrix<rational_function>(0, 0);
    std::vector<std::vector<rational_function>> rows;
    const bool nested = lx.peek().kind == token_kind::punct && lx.peek().text == "[";
    auto parse_row = [&] {
        std::vector<rational_function> row;
        do {
            row.push_back(parse_rational_function(lx, g));
        } while (lx.accept_punct(','));
        return row;
    };
    if (nested) {
        for (;;) {
            lx.expect_punct('[');
            if (lx.accept_punct(']')) {
                rows.emplace_back();
            } else {
                rows.push_back(parse_row());
                lx.expect_punct(']');
            }
            if (!lx.accept_punct(',')) break;
        }
        lx.expect_punct(']');
    } else {
        rows.push_back(parse_row());
        lx.expect_punct(']');
    }
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw parse_error(start, "matrix rows have different lengths");
    matrix<rational_function> out(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = std::move(rows[i][j]);
    return out;
}

// ---------------------------------------------------------------------------
// Group declarations: finite cyclic N | abelian N | free N | dihedral_inf.
// Heap-backed so ring elements can keep stable group pointers.
// ---------------------------------------------------------------------------

struct group_decl {
    enum class kind { finite, abelian, free, dihedral } which;
    std::shared_ptr<finite_group> finite;
    std::shared_ptr<free_abelian_group> abelian;
    std::shared_ptr<free_group> free;
    std::shared_ptr<crossed_product<free_abelian_group>> dihedral;
};

inline group_decl parse_group_decl(lexer& lx) {
    const source_pos pos = lx.peek().pos;
    if (!lx.accept_ident("group")) throw parse_error(pos, "expected 'group'");
    const std::string name = lx.expect_ident();
    group_decl out{};
    if (name == "finite") {
        if (!lx.accept_ident("cyclic"))
            throw parse_error(lx.peek().pos, "only 'finite cyclic N' groups are declarable");
        const long long n = lx.expect_integer();
        if (n < 1) throw parse_error(pos, "cyclic group order must be positive");
        out.which = group_decl::kind::finite;
        out.finite = std::make_shared<finite_group>(finite_group::cyclic(static_cast<unsigned>(n)));
    } else if (name == "abelian") {
        const long long n = lx.expect_integer();
        if (n < 1) throw parse_error(pos, "abelian rank must be positive");
        out.which = group_decl::kind::abelian;
        out.abelian = std::make_shared<free_abelian_group>(static_cast<int>(n));
    } else if (name == "free") {
        const long long n = lx.expect_integer();
        if (n < 1) throw parse_error(pos, "free rank must be positive");
        out.which = group_decl::kind::free;
        out.free = std::make_shared<free_group>(static_cast<int>(n));
    } else if (name == "dihedral_inf") {
        out.which = group_decl::kind::dihedral;
        out.dihedral =
            std::make_shared<crossed_product<free_abelian_group>>(dihedral_infinite());
    } else {
        throw parse_error(pos, "unknown group family '" + name + "'");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chain complex bodies: `ranks n0 n1 ...` then one `d<p>` matrix per
// positive degree, in order.
// ---------------------------------------------------------------------------

template <class Ctx>
free_chain_complex<Ctx> parse_complex_body(lexer& lx, const Ctx& ctx) {
    const source_pos pos = lx.peek().pos;
    if (!lx.accept_ident("ranks")) throw parse_error(pos, "expected 'ranks'");
    std::vector<std::size_t> ranks;
    while (lx.peek().kind == token_kind::number) {
        const long long n = lx.expect_integer();
        if (n < 0) throw parse_error(pos, "ranks must be nonnegative");
        ranks.push_back(static_cast<std::size_t>(n));
    }
    if (ranks.empty()) throw parse_error(pos, "at least one rank required");

    std::vector<matrix<ring_element_t<Ctx>>> boundaries;
    for (std::size_t p = 1; p < ranks.size(); ++p) {
        const source_pos dpos = lx.peek().pos;
        const std::string label = lx.expect_ident();
        if (label != "d" + std::to_string(p))
            throw parse_error(dpos, "expected boundary block 'd" + std::to_string(p) + "'");
        matrix<ring_element_t<Ctx>> d = parse_element_matrix(lx, ctx);
        if (d.rows() == 0 && d.cols() == 0 && (ranks[p - 1] != 0 || ranks[p] != 0)) {
            d = matrix<ring_element_t<Ctx>>(ranks[p - 1], ranks[p]);
        }
        if (d.rows() != ranks[p - 1] || d.cols() != ranks[p])
            throw parse_error(dpos, "boundary block has the wrong shape");
        boundaries.push_back(std::move(d));
    }
    try {
        return make_complex(ctx, std::move(ranks), std::move(boundaries));
    } catch (const invalid_complex& e) {
        throw parse_error(pos, e.what());
    }
}

// `module free N` or `module <matrix>`.
template <class Ctx>
presented_module<Ctx> parse_module_body(lexer& lx, const Ctx& ctx) {
    if (lx.accept_ident("free")) {
        const long long n = lx.expect_integer();
        if (n < 0) throw parse_error(lx.peek().pos, "free rank must be nonnegative");
        return free_module(ctx, static_cast<std::size_t>(n));
    }
    return make_module(ctx, parse_element_matrix(lx, ctx));
}

} // namespace l2lab

#endif
