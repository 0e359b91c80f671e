#ifndef KCHA_SERIES_HPP
#define KCHA_SERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "kcha/errors.hpp"
#include "kcha/rational.hpp"
#include "kcha/unipoly.hpp"

namespace kcha {

/// Formal power series truncated at order N: coefficients c_0 .. c_{N-1}.
/// Every operation discards terms of degree >= N.
class TruncSeries {
public:
    TruncSeries(std::string var, int order)
        : var_(std::move(var)), c_(check_order(order)) {}
    TruncSeries(std::string var, int order, std::vector<Rational> coeffs)
        : TruncSeries(std::move(var), order) {
        for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
    }

    static TruncSeries from_polynomial(const UniPoly& p, int order) {
        TruncSeries s(p.var(), order);
        for (int k = 0; k < order; ++k) s.c_[static_cast<std::size_t>(k)] = p.coeff(k);
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()); }
    Rational coeff(int k) const {
        if (k < 0 || k >= order()) return Rational();
        return c_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, Rational v) {
        if (k >= 0 && k < order()) c_[static_cast<std::size_t>(k)] = std::move(v);
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.var_, std::min(a.order(), b.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.var_, std::min(a.order(), b.order()));
        for (int k = 0; k < r.order(); ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries r(a.var_, std::min(a.order(), b.order()));
        for (int i = 0; i < r.order(); ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; i + j < r.order(); ++j)
                r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    /// Multiplicative inverse; requires a unit constant term.
    TruncSeries inverse() const {
        if (coeff(0).is_zero()) throw MathError("series inverse requires nonzero constant term");
        TruncSeries r(var_, order());
        Rational c0_inv = coeff(0).inverse();
        r.c_[0] = c0_inv;
        for (int n = 1; n < order(); ++n) {
            Rational acc;
            for (int k = 1; k <= n; ++k) acc += coeff(k) * r.coeff(n - k);
            r.c_[static_cast<std::size_t>(n)] = -acc * c0_inv;
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) return false;
        return a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str() const {
        std::string out;
        for (int k = 0; k < order(); ++k) {
            if (coeff(k).is_zero()) continue;
            Rational c = coeff(k);
            if (c.sign() < 0) {
                out += out.empty() ? "-" : " - ";
                c = -c;
            } else if (!out.empty()) {
                out += " + ";
            }
            if (k == 0) {
                out += c.str();
            } else {
                if (!c.is_one()) out += c.str() + "*";
                out += var_;
                if (k != 1) out += "^" + std::to_string(k);
            }
        }
        if (out.empty()) out = "0";
        return out + " + O(" + var_ + "^" + std::to_string(order()) + ")";
    }

private:
    static std::size_t check_order(int order) {
        if (order <= 0) throw MathError("series truncation order must be positive");
        return static_cast<std::size_t>(order);
    }

    std::string var_;
    std::vector<Rational> c_;
};

/// exp(f) for f with f(0) = 0, exact to the truncation order.
/// Recurrence n*g_n = sum_{k=1..n} k f_k g_{n-k} from g' = f' g.
inline TruncSeries series_exp(const TruncSeries& f) {
    if (!f.coeff(0).is_zero()) throw MathError("series_exp requires zero constant term");
    TruncSeries g(f.var(), f.order());
    g.set_coeff(0, Rational(1));
    for (int n = 1; n < f.order(); ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k) acc += Rational(k) * f.coeff(k) * g.coeff(n - k);
        g.set_coeff(n, acc / Rational(n));
    }
    return g;
}

/// log(g) for g with g(0) = 1, exact to the truncation order.
/// Recurrence n f_n = n g_n - sum_{k=1..n-1} k f_k g_{n-k}.
inline TruncSeries series_log(const TruncSeries& g) {
    if (!g.coeff(0).is_one()) throw MathError("series_log requires constant term 1");
    TruncSeries f(g.var(), g.order());
    for (int n = 1; n < g.order(); ++n) {
        Rational acc = Rational(n) * g.coeff(n);
        for (int k = 1; k < n; ++k) acc -= Rational(k) * f.coeff(k) * g.coeff(n - k);
        f.set_coeff(n, acc / Rational(n));
    }
    return f;
}

} // namespace kcha

#endif
