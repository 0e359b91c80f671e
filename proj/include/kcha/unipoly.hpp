#ifndef KCHA_UNIPOLY_HPP
#define KCHA_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "kcha/errors.hpp"
#include "kcha/rational.hpp"

namespace kcha {

/// Dense univariate polynomial over the rationals, coefficients stored in
/// ascending degree. The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Rational> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static UniPoly constant(std::string var, Rational value) {
        return UniPoly(std::move(var), {std::move(value)});
    }
    /// The monomial c * var^k.
    static UniPoly monomial(std::string var, Rational coeff, int k) {
        std::vector<Rational> cs(static_cast<std::size_t>(k) + 1);
        cs.back() = std::move(coeff);
        return UniPoly(std::move(var), std::move(cs));
    }

    const std::string& var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational();
        return c_[static_cast<std::size_t>(k)];
    }
    Rational leading() const { return c_.empty() ? Rational() : c_.back(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Order of vanishing at 0; degree+1 convention avoided: zero poly -> -1.
    int ord_at_zero() const {
        if (c_.empty()) return -1;
        int k = 0;
        while (c_[static_cast<std::size_t>(k)].is_zero()) ++k;
        return k;
    }

    Rational eval(const Rational& x) const {
        Rational acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(var_);
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k)
            d[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return UniPoly(var_, std::move(d));
    }

    UniPoly operator-() const {
        std::vector<Rational> d(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) d[i] = -c_[i];
        return UniPoly(var_, std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
        return UniPoly(a.var_.empty() ? b.var_ : a.var_, std::move(d));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return UniPoly(a.var_.empty() ? b.var_ : a.var_);
        std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(a.var_.empty() ? b.var_ : a.var_, std::move(d));
    }

    friend UniPoly operator*(const UniPoly& a, const Rational& s) {
        std::vector<Rational> d(a.c_.size());
        for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] = a.c_[i] * s;
        return UniPoly(a.var_, std::move(d));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.c_ == b.c_;  // variable names of compatible polys agree by construction
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Euclidean division; returns (quotient, remainder).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        check_var(d);
        if (d.is_zero()) throw MathError("univariate division by zero polynomial");
        UniPoly q(var_), r = *this;
        const Rational lead_inv = d.leading().inverse();
        std::vector<Rational> qc;
        if (r.degree() >= d.degree())
            qc.assign(static_cast<std::size_t>(r.degree() - d.degree()) + 1, Rational());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational f = r.leading() * lead_inv;
            qc[static_cast<std::size_t>(k)] = f;
            r = r - UniPoly::monomial(var_, f, k) * d;
        }
        return {UniPoly(var_, std::move(qc)), r};
    }

    /// Division known to be exact; throws when a remainder survives.
    UniPoly div_exact(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw MathError("inexact univariate division");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    /// Multiplies by var^k (k >= 0).
    UniPoly shift(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Rational> d(c_.size() + static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < c_.size(); ++i) d[i + static_cast<std::size_t>(k)] = c_[i];
        return UniPoly(var_, std::move(d));
    }

    /// Divides by var^k; requires ord_at_zero() >= k.
    UniPoly unshift(int k) const {
        if (k == 0) return *this;
        if (ord_at_zero() < k) throw MathError("polynomial not divisible by variable power");
        return UniPoly(var_, std::vector<Rational>(c_.begin() + k, c_.end()));
    }

    /// Reversal mu^deg * p(1/mu), used for the Alexander symmetry check.
    UniPoly reversed() const {
        std::vector<Rational> d(c_.rbegin(), c_.rend());
        return UniPoly(var_, std::move(d));
    }

    /// Clears rational content: primitive integer coefficients, positive leading sign.
    UniPoly primitive_part() const {
        if (is_zero()) return *this;
        mpz_class den_lcm(1), num_gcd(0);
        for (const auto& c : c_) den_lcm = lcm_int(den_lcm, c.denominator());
        for (const auto& c : c_) num_gcd = gcd_int(num_gcd, c.numerator() * (den_lcm / c.denominator()));
        Rational scale(mpq_class(den_lcm, num_gcd));
        if (leading().sign() < 0) scale = -scale;
        return *this * scale;
    }

    bool integer_coefficients() const {
        for (const auto& c : c_)
            if (!c.is_integer()) return false;
        return true;
    }

    /// Renders in descending degree, e.g. "mu^2 - mu + 1" or "-2*mu + 5/3".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            Rational c = coeff(k);
            if (c.is_zero()) continue;
            bool first = out.empty();
            if (c.sign() < 0) {
                out += first ? "-" : " - ";
                c = -c;
            } else if (!first) {
                out += " + ";
            }
            const bool unit = c.is_one();
            if (k == 0) {
                out += c.str();
            } else {
                if (!unit) out += c.str() + "*";
                out += var_;
                if (k != 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    void check_var(const UniPoly& o) const {
        if (!var_.empty() && !o.var_.empty() && var_ != o.var_)
            throw MathError("univariate variable mismatch: " + var_ + " vs " + o.var_);
    }

    std::string var_;
    std::vector<Rational> c_;
};

/// Monic greatest common divisor. gcd(0, 0) is an error; gcd(p, 0) = monic(p).
inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Exact polynomial square root; returns false when no square root exists.
inline bool unipoly_sqrt(const UniPoly& p, UniPoly& root) {
    if (p.is_zero()) { root = UniPoly(p.var()); return true; }
    if (p.degree() % 2 != 0) return false;
    Rational lead_root;
    if (!p.leading().is_square(lead_root)) return false;
    const int h = p.degree() / 2;
    std::vector<Rational> r(static_cast<std::size_t>(h) + 1);
    r[static_cast<std::size_t>(h)] = lead_root;
    // Solve for coefficients top-down from (sum r_i x^i)^2 = p.
    for (int k = h - 1; k >= 0; --k) {
        Rational acc = p.coeff(k + h);
        for (int i = k + 1, j = h - 1; i < j; ++i, --j)
            acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)] * Rational(2);
        if ((k + h) % 2 == 0) {
            int m = (k + h) / 2;
            if (m > k && m < h) acc -= r[static_cast<std::size_t>(m)] * r[static_cast<std::size_t>(m)];
        }
        r[static_cast<std::size_t>(k)] = acc / (lead_root * Rational(2));
    }
    UniPoly cand(p.var(), std::move(r));
    if (cand * cand != p) return false;
    root = std::move(cand);
    return true;
}

} // namespace kcha

#endif
