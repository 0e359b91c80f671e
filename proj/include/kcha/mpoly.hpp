#ifndef KCHA_MPOLY_HPP
#define KCHA_MPOLY_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kcha/errors.hpp"
#include "kcha/ratfunc.hpp"
#include "kcha/rational.hpp"
#include "kcha/symtab.hpp"

namespace kcha {

/// Exponent vector, one signed entry per symtab variable.
using ExpVec = std::vector<int>;

/// Canonical term order: descending lexicographic on exponent vectors with
/// the symtab variable order (lambda, mu, Q, chords). Used for storage,
/// iteration, rendering and equality.
struct DescLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }
inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const RatFunc& c) { return "(" + c.str() + ")"; }
} // namespace detail

/// Sparse multivariate Laurent polynomial with coefficients in C (Rational
/// for the universal coefficient object, RatFunc for branch computations).
/// Chord-variable exponents are kept nonnegative; ring variables are Laurent.
template <class C>
class MPoly {
public:
    using Terms = std::map<ExpVec, C, DescLex>;

    MPoly() = default;
    explicit MPoly(SymTabPtr tab) : tab_(std::move(tab)) {}

    static MPoly constant(SymTabPtr tab, C value) {
        MPoly p(std::move(tab));
        p.add_term(ExpVec(static_cast<std::size_t>(p.tab_->size()), 0), std::move(value));
        return p;
    }
    static MPoly variable(SymTabPtr tab, int var, int exp = 1) {
        MPoly p(std::move(tab));
        ExpVec e(static_cast<std::size_t>(p.tab_->size()), 0);
        e[static_cast<std::size_t>(var)] = exp;
        p.add_term(std::move(e), C(1));
        return p;
    }

    const SymTabPtr& symtab() const { return tab_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        const ExpVec& e = terms_.begin()->first;
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }
    C constant_value() const {
        if (terms_.empty()) return C(0);
        if (!is_constant()) throw MathError("polynomial is not constant");
        return terms_.begin()->second;
    }

    bool involves(int var) const {
        for (const auto& [e, c] : terms_)
            if (e[static_cast<std::size_t>(var)] != 0) return true;
        return false;
    }
    bool involves_chords() const {
        for (const auto& [e, c] : terms_)
            for (int i = SymTab::kRingVars; i < tab_->size(); ++i)
                if (e[static_cast<std::size_t>(i)] != 0) return true;
        return false;
    }
    bool has_negative_exponents() const {
        for (const auto& [e, c] : terms_)
            for (int x : e)
                if (x < 0) return true;
        return false;
    }

    void add_term(ExpVec e, C c) {
        if (detail::coeff_is_zero(c)) return;
        if (static_cast<int>(e.size()) != tab_->size()) throw MathError("exponent vector arity mismatch");
        for (int i = SymTab::kRingVars; i < tab_->size(); ++i)
            if (e[static_cast<std::size_t>(i)] < 0)
                throw MathError("negative exponent on chord variable '" + tab_->name(i) + "'");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(tab_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(0) - c);
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_same_symtab(a.tab_, b.tab_);
        MPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same_symtab(a.tab_, b.tab_);
        MPoly r(a.tab_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                C c = ca * cb;
                if (detail::coeff_is_zero(c)) continue;
                ExpVec e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), std::move(c));
            }
        }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const C& s) {
        MPoly r(a.tab_);
        if (detail::coeff_is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) {
            C cs = c * s;
            if (!detail::coeff_is_zero(cs)) r.terms_.emplace(e, std::move(cs));
        }
        return r;
    }

    /// Nonnegative integer power by repeated multiplication.
    MPoly pow(int k) const {
        if (k < 0) throw MathError("negative power of a polynomial");
        MPoly acc = constant(tab_, C(1));
        for (int i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        check_same_symtab(a.tab_, b.tab_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Formal partial derivative with the Laurent rule d(x^n) = n x^{n-1}.
    MPoly partial(int var) const {
        MPoly r(tab_);
        for (const auto& [e, c] : terms_) {
            int n = e[static_cast<std::size_t>(var)];
            if (n == 0) continue;
            ExpVec d = e;
            d[static_cast<std::size_t>(var)] = n - 1;
            r.add_term(std::move(d), c * C(n));
        }
        return r;
    }
    MPoly partial(const std::string& var) const { return partial(tab_->require(var)); }

    /// Full evaluation at a rational point (one value per variable).
    /// Negative exponents require a nonzero value.
    C eval(const std::vector<C>& point) const {
        if (static_cast<int>(point.size()) != tab_->size()) throw MathError("evaluation arity mismatch");
        C acc(0);
        for (const auto& [e, c] : terms_) {
            C t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                for (int k = 0; k < e[i]; ++k) t *= point[i];
                for (int k = 0; k > e[i]; --k) {
                    if (detail::coeff_is_zero(point[i]))
                        throw MathError("pole: variable '" + tab_->name(static_cast<int>(i)) +
                                        "' assigned 0 with negative exponent");
                    t /= point[i];
                }
            }
            acc += t;
        }
        return acc;
    }

private:
    SymTabPtr tab_;
    Terms terms_;
};

using MultiPoly = MPoly<Rational>;
/// Polynomial in the symtab variables with rational-function coefficients in
/// the branch parameter; the value type of partial substitutions.
using MultiPolyF = MPoly<RatFunc>;

/// Substitution of a subset of variables by univariate rational functions in
/// a common parameter; unassigned variables stay symbolic. Ring homomorphism.
/// assignment[i] is empty (default RatFunc) slot semantics: use `assigned`
/// mask to distinguish "maps to 0" from "stays symbolic".
struct RatFuncAssignment {
    std::string parameter;              // variable name of the RatFunc field
    std::vector<bool> assigned;         // per symtab index
    std::vector<RatFunc> value;         // per symtab index, valid where assigned

    static RatFuncAssignment none(const SymTabPtr& tab, std::string parameter) {
        RatFuncAssignment a;
        a.parameter = std::move(parameter);
        a.assigned.assign(static_cast<std::size_t>(tab->size()), false);
        a.value.assign(static_cast<std::size_t>(tab->size()), RatFunc());
        return a;
    }
    void set(int var, RatFunc v) {
        assigned[static_cast<std::size_t>(var)] = true;
        value[static_cast<std::size_t>(var)] = std::move(v);
    }
};

inline MultiPolyF substitute(const MultiPoly& p, const RatFuncAssignment& a) {
    MultiPolyF r(p.symtab());
    for (const auto& [e, c] : p.terms()) {
        RatFunc coeff = RatFunc::constant(a.parameter, c);
        ExpVec residual = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!a.assigned[i] || e[i] == 0) continue;
            const RatFunc& v = a.value[i];
            if (v.is_zero()) {
                if (e[i] < 0)
                    throw MathError("pole: variable '" + p.symtab()->name(static_cast<int>(i)) +
                                    "' assigned 0 with negative exponent");
                coeff = RatFunc(a.parameter);  // zero
            } else {
                coeff *= v.pow(e[i]);
            }
            residual[i] = 0;
            if (coeff.is_zero()) break;
        }
        if (!coeff.is_zero()) r.add_term(std::move(residual), std::move(coeff));
    }
    return r;
}

/// Substitution of variables by whole polynomials (used by the framing and
/// splitting transforms and variable pinning). A negative exponent is legal
/// only when the assigned value is an invertible monomial in ring variables.
inline MultiPoly substitute(const MultiPoly& p, const std::map<int, MultiPoly>& values) {
    const SymTabPtr& tab = p.symtab();
    for (const auto& [var, v] : values) check_same_symtab(tab, v.symtab());
    MultiPoly r(tab);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(tab, c);
        ExpVec residual = e;
        for (std::size_t i = 0; i < e.size(); ++i) {
            auto it = values.find(static_cast<int>(i));
            if (it == values.end() || e[i] == 0) continue;
            const MultiPoly& v = it->second;
            if (e[i] > 0) {
                term = term * v.pow(e[i]);
            } else {
                if (v.is_zero())
                    throw MathError("pole: variable '" + tab->name(static_cast<int>(i)) +
                                    "' assigned 0 with negative exponent");
                if (v.term_count() != 1)
                    throw MathError("cannot invert a non-monomial substitution value");
                const auto& [me, mc] = *v.terms().begin();
                MultiPoly inv(tab);
                ExpVec ie(me.size());
                for (std::size_t k = 0; k < me.size(); ++k) ie[k] = -me[k];
                inv.add_term(std::move(ie), mc.inverse());
                term = term * inv.pow(-e[i]);
            }
            residual[i] = 0;
        }
        MultiPoly mono(tab);
        mono.add_term(std::move(residual), Rational(1));
        r = r + term * mono;
    }
    return r;
}

/// Wire-format rendering: canonical term order, '^' exponents (negative as
/// mu^-2), explicit '*' between factors, integer or p/q coefficients.
inline std::string render(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    const SymTabPtr& tab = p.symtab();
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        bool first = out.empty();
        if (coeff.sign() < 0) {
            out += first ? "-" : " - ";
            coeff = -coeff;
        } else if (!first) {
            out += " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += tab->name(static_cast<int>(i));
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += coeff.str();
        } else {
            if (!coeff.is_one()) out += coeff.str() + "*";
            out += mono;
        }
    }
    return out;
}

template <class C>
inline std::string debug_str(const MPoly<C>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += detail::coeff_str(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*" + p.symtab()->name(static_cast<int>(i));
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

} // namespace kcha

#endif
