#ifndef KCHA_RATFUNC_HPP
#define KCHA_RATFUNC_HPP

#include <string>
#include <utility>

#include "kcha/errors.hpp"
#include "kcha/unipoly.hpp"

namespace kcha {

/// Reduced univariate rational function over the rationals.
/// Invariants: gcd(num, den) = 1, den nonzero with positive leading coefficient.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::constant("", Rational(1))) {}
    RatFunc(long n)  // NOLINT(google-explicit-constructor)
        : num_(UniPoly::constant("", Rational(n))), den_(UniPoly::constant("", Rational(1))) {}
    explicit RatFunc(std::string var)
        : num_(var), den_(UniPoly::constant(var, Rational(1))) {}
    RatFunc(UniPoly num, UniPoly den) { assign(std::move(num), std::move(den)); }
    explicit RatFunc(UniPoly num)
        : RatFunc(num, UniPoly::constant(num.var(), Rational(1))) {}

    static RatFunc constant(std::string var, Rational value) {
        return RatFunc(UniPoly::constant(var, std::move(value)));
    }
    static RatFunc variable(std::string var) {
        return RatFunc(UniPoly::monomial(var, Rational(1), 1));
    }
    /// var^k for any integer k.
    static RatFunc variable_power(const std::string& var, int k) {
        if (k >= 0) return RatFunc(UniPoly::monomial(var, Rational(1), k));
        return RatFunc(UniPoly::constant(var, Rational(1)),
                       UniPoly::monomial(var, Rational(1), -k));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& var() const { return num_.var().empty() ? den_.var() : num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rational constant_value() const {
        if (!is_constant()) throw MathError("rational function is not constant");
        if (num_.is_zero()) return Rational();
        return num_.coeff(0) / den_.coeff(0);
    }

    /// The polynomial equal to this function; throws when the reduced
    /// denominator is not constant.
    UniPoly as_polynomial() const {
        if (!is_polynomial()) throw MathError("rational function is not a polynomial");
        return num_ * den_.coeff(0).inverse();
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw MathError("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    /// Value at infinity: ratio of leading coefficients when degrees are
    /// equal, 0 when the numerator degree is smaller; error when larger.
    Rational value_at_infinity() const {
        if (is_zero()) return Rational();
        if (num_.degree() > den_.degree()) throw MathError("rational function has a pole at infinity");
        if (num_.degree() < den_.degree()) return Rational();
        return num_.leading() / den_.leading();
    }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RatFunc operator-() const { return RatFunc(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw MathError("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw MathError("division by zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc pow(int k) const {
        if (k == 0) return constant(var(), Rational(1));
        RatFunc base = k > 0 ? *this : inverse();
        RatFunc acc = constant(var(), Rational(1));
        for (int i = std::abs(k); i > 0; --i) acc *= base;
        return acc;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Wire format: "num" when the denominator is 1, else "num/den" with
    /// parentheses around multi-term sides.
    std::string str() const {
        if (is_zero()) return "0";
        if (den_.is_one()) return num_.str();
        return wrap(num_, false) + "/" + wrap(den_, true);
    }

private:
    static bool single_term(const UniPoly& p) {
        int nonzero = 0;
        for (const auto& c : p.coeffs()) nonzero += !c.is_zero();
        return nonzero == 1;
    }
    static std::string wrap(const UniPoly& p, bool deny_coeff) {
        // A bare denominator must be a plain power to parse back unambiguously.
        bool bare = single_term(p) && (!deny_coeff || p.leading().is_one());
        return bare ? p.str() : "(" + p.str() + ")";
    }

    void assign(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw MathError("zero denominator");
        if (num.is_zero()) {
            num_ = UniPoly(num.var().empty() ? den.var() : num.var());
            den_ = UniPoly::constant(den.var(), Rational(1));
            return;
        }
        UniPoly g = unipoly_gcd(num, den);
        if (!g.is_one()) {
            num = num.div_exact(g);
            den = den.div_exact(g);
        }
        // Normalize: denominator monic-positive, scale folded into numerator.
        Rational lead = den.leading();
        num_ = num * lead.inverse();
        den_ = den * lead.inverse();
    }

    UniPoly num_, den_;
};

/// ratfunc_reduce of the interface: gcd-reduced, sign-normalized quotient.
inline RatFunc ratfunc_reduce(UniPoly num, UniPoly den) {
    return RatFunc(std::move(num), std::move(den));
}

} // namespace kcha

#endif
