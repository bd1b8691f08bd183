#ifndef ILLUM_EXPR_HH
#define ILLUM_EXPR_HH

// Recursive-descent parser for polynomial expressions over a Context.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*      division only by integer literals
//   factor := atom ('^' integer)?             exponents are non-negative integers
//   atom   := integer | variable | '(' expr ')' | '-' factor
//
// There is no implicit multiplication: "2x" is an error, "2*x" is not.
// Rational coefficients arise from division, e.g. "3/4*x" or "x/2".

#include "illum/polynomial.hh"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace illum {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

namespace detail {

class ExprParser {
public:
    ExprParser(std::string_view text, ContextPtr ctx, int base_line)
        : text_(text), ctx_(std::move(ctx)), line_(base_line) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col()); }

    int col() const {
        int c = 1;
        for (size_t i = line_start_; i < pos_ && i < text_.size(); ++i) ++c;
        return c;
    }

    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
                line_start_ = pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    mpz_class integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer literal");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    MultiPoly expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiPoly p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    MultiPoly term() {
        MultiPoly p = factor();
        for (;;) {
            if (eat('*')) {
                p *= factor();
            } else if (eat('/')) {
                skip_ws();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("division is only allowed by integer literals");
                mpz_class d = integer_literal();
                if (d == 0) fail("division by zero");
                p = p.scaled(Rational(mpz_class(1), d));
            } else {
                return p;
            }
        }
    }

    MultiPoly factor() {
        MultiPoly base = atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                fail("negative exponents are not allowed");
            mpz_class e = integer_literal();
            if (!e.fits_uint_p() || e > 4096) fail("exponent too large");
            return base.pow(e.get_ui());
        }
        return base;
    }

    MultiPoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return MultiPoly::constant(ctx_, Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ctx_->index(name);
            if (!idx) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return MultiPoly::variable(ctx_, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    ContextPtr ctx_;
    size_t pos_ = 0;
    size_t line_start_ = 0;
    int line_;
};

} // namespace detail

// Parse an expression over the given context. `base_line` seeds error
// positions when the text is a slice of a larger file.
inline MultiPoly parse_polynomial(std::string_view text, const ContextPtr& ctx,
                                  int base_line = 1) {
    return detail::ExprParser(text, ctx, base_line).parse();
}

} // namespace illum

#endif // ILLUM_EXPR_HH
