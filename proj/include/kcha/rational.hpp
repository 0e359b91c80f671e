#ifndef KCHA_RATIONAL_HPP
#define KCHA_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "kcha/errors.hpp"

namespace kcha {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always canonical: gcd(|num|, den) = 1 and den > 0 (maintained by GMP).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw MathError("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p", "-p" or "p/q".
    static Rational from_string(const std::string& s) {
        try {
            mpq_class q(s);
            if (q.get_den() == 0) throw MathError("rational with zero denominator");
            q.canonicalize();
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw ParseError("invalid rational literal '" + s + "'");
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Exact conversion to long; throws when the value is not a small integer.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw MathError("rational is not a machine integer: " + str());
        return v_.get_num().get_si();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw MathError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? Rational(mpq_class(-v_)) : *this; }

    Rational inverse() const {
        if (is_zero()) throw MathError("division by zero");
        return Rational(mpq_class(1) / v_);
    }

    /// True iff the value is the square of a rational; stores the nonnegative
    /// root in `root` when so.
    bool is_square(Rational& root) const {
        if (v_ < 0) return false;
        if (v_ == 0) { root = Rational(); return true; }
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
            return false;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        root = Rational(mpq_class(rn, rd));
        return true;
    }

    /// Renders as "p" or "p/q".
    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline mpz_class gcd_int(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm_int(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace kcha

#endif
