#ifndef KCHA_PARSER_HPP
#define KCHA_PARSER_HPP

#include <cctype>
#include <string>
#include <utility>

#include "kcha/errors.hpp"
#include "kcha/mpoly.hpp"
#include "kcha/ratfunc.hpp"

namespace kcha {

// Expression grammar shared by polynomial and rational-function inputs:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' signed-int)?
//   atom   := unsigned-int | identifier | '(' expr ')'
// Whitespace is insignificant; '^' binds tighter than unary '-', so -mu^2
// reads as -(mu^2). The Algebra policy supplies atom values and the
// power/division rules.
template <class Algebra>
class ExprParser {
public:
    using Value = typename Algebra::Value;

    ExprParser(std::string text, Algebra algebra)
        : text_(std::move(text)), alg_(std::move(algebra)) {}

    Value parse() {
        Value v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    Value expr() {
        Value acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) acc = alg_.add(acc, term());
            else if (accept('-')) acc = alg_.sub(acc, term());
            else return acc;
        }
    }

    Value term() {
        Value acc = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) acc = alg_.mul(acc, factor());
            else if (accept('/')) {
                std::size_t at = pos_;
                acc = alg_.div(acc, factor(), at);
            } else return acc;
        }
    }

    Value factor() {
        skip_ws();
        if (accept('-')) return alg_.neg(factor());  // '-' binds looser than '^'
        Value base = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool neg = accept('-');
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected integer exponent");
            long k = 0;
            std::size_t at = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                k = k * 10 + (text_[pos_] - '0');
                if (k > 1000) fail("exponent too large");
                ++pos_;
            }
            return alg_.power(base, neg ? -static_cast<int>(k) : static_cast<int>(k), at);
        }
        return base;
    }

    Value atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return alg_.integer(digits);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ident += text_[pos_++];
            return alg_.identifier(ident, at);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    std::string text_;
    std::size_t pos_ = 0;
    Algebra alg_;
};

namespace detail {

struct PolyAlgebra {
    using Value = MultiPoly;
    SymTabPtr tab;

    Value integer(const std::string& digits) const {
        return MultiPoly::constant(tab, Rational::from_string(digits));
    }
    Value identifier(const std::string& name, std::size_t at) const {
        int idx = tab->find(name);
        if (idx < 0) throw ParseError("unknown identifier '" + name + "'", at);
        return MultiPoly::variable(tab, idx);
    }
    Value neg(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, std::size_t at) const {
        // Division inside polynomial expressions is restricted to nonzero
        // rational constants (as produced by p/q coefficients).
        if (!b.is_constant() || b.is_zero())
            throw ParseError("division is only defined by nonzero integer constants here", at);
        return a * b.constant_value().inverse();
    }
    Value power(const Value& base, int k, std::size_t at) const {
        if (k >= 0) return base.pow(k);
        if (base.term_count() != 1)
            throw ParseError("negative power of a non-monomial", at);
        const auto& [e, c] = *base.terms().begin();
        for (int i = SymTab::kRingVars; i < tab->size(); ++i)
            if (e[static_cast<std::size_t>(i)] != 0)
                throw ParseError("negative chord exponent", at);
        MultiPoly inv(tab);
        ExpVec ie(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ie[i] = -e[i];
        inv.add_term(std::move(ie), c.inverse());
        return inv.pow(-k);
    }
};

struct RatFuncAlgebra {
    using Value = RatFunc;
    std::string var;

    Value integer(const std::string& digits) const {
        return RatFunc::constant(var, Rational::from_string(digits));
    }
    Value identifier(const std::string& name, std::size_t at) const {
        if (name != var)
            throw ParseError("unknown identifier '" + name + "' (expected '" + var + "')", at);
        return RatFunc::variable(var);
    }
    Value neg(const Value& v) const { return -v; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, std::size_t at) const {
        if (b.is_zero()) throw ParseError("division by zero", at);
        return a / b;
    }
    Value power(const Value& base, int k, std::size_t at) const {
        if (k < 0 && base.is_zero()) throw ParseError("negative power of zero", at);
        return base.pow(k);
    }
};

} // namespace detail

/// Parses an expression over the given symtab into an exact MultiPoly.
inline MultiPoly parse_expr(const std::string& text, SymTabPtr tab) {
    ExprParser<detail::PolyAlgebra> p(text, detail::PolyAlgebra{std::move(tab)});
    return p.parse();
}

/// Parses a univariate rational-function string such as "(mu-1)/mu^2".
inline RatFunc parse_ratfunc(const std::string& text, const std::string& var) {
    ExprParser<detail::RatFuncAlgebra> p(text, detail::RatFuncAlgebra{var});
    return p.parse();
}

} // namespace kcha

#endif
