#ifndef KCHA_GROEBNER_HPP
#define KCHA_GROEBNER_HPP

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kcha/dga.hpp"
#include "kcha/errors.hpp"
#include "kcha/mpoly.hpp"

namespace kcha {

/// Monomial order on a fixed variable list. Block orders compare the front
/// block first (grevlex inside), so they eliminate the front variables.
struct MonomialOrder {
    enum Kind { kLex, kGrevLex, kBlock };
    Kind kind = kGrevLex;
    int front = 0;  // size of the leading block for kBlock

    static MonomialOrder lex() { return {kLex, 0}; }
    static MonomialOrder grevlex() { return {kGrevLex, 0}; }
    static MonomialOrder block(int front_vars) { return {kBlock, front_vars}; }
};

/// Ideal in the polynomial subring spanned by `vars` (indices into symtab,
/// in significance order). Generators must have nonnegative exponents and
/// involve no other variables; Laurent directions are handled by saturation.
struct Ideal {
    SymTabPtr symtab;
    std::vector<int> vars;
    std::vector<MultiPoly> generators;
};

namespace gb {

/// true iff a < b under the order (restricted exponent vectors).
inline bool exp_less(const ExpVec& a, const ExpVec& b, const MonomialOrder& ord) {
    auto grevlex_less = [](const ExpVec& x, const ExpVec& y, std::size_t lo, std::size_t hi) {
        long dx = 0, dy = 0;
        for (std::size_t i = lo; i < hi; ++i) { dx += x[i]; dy += y[i]; }
        if (dx != dy) return dx < dy;
        for (std::size_t i = hi; i-- > lo;) {
            if (x[i] != y[i]) return x[i] > y[i];  // reverse lex: larger tail exponent is smaller
        }
        return false;
    };
    switch (ord.kind) {
        case MonomialOrder::kLex:
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        case MonomialOrder::kGrevLex:
            return grevlex_less(a, b, 0, a.size());
        case MonomialOrder::kBlock: {
            std::size_t f = static_cast<std::size_t>(ord.front);
            if (grevlex_less(a, b, 0, f)) return true;
            if (grevlex_less(b, a, 0, f)) return false;
            return grevlex_less(a, b, f, a.size());
        }
    }
    return false;
}

inline bool exp_divides(const ExpVec& d, const ExpVec& m) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}
inline ExpVec exp_lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}
inline ExpVec exp_sub(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// Engine polynomial: terms sorted descending under the active order.
template <class C>
struct EPoly {
    std::vector<std::pair<ExpVec, C>> t;
    bool empty() const { return t.empty(); }
    const ExpVec& lm() const { return t.front().first; }
    const C& lc() const { return t.front().second; }
};

template <class C>
void normalize_coeffs(EPoly<C>& p);

// Rational polynomials are kept integer-primitive with positive leading sign;
// this is the content clearing that bounds coefficient growth.
template <>
inline void normalize_coeffs<Rational>(EPoly<Rational>& p) {
    if (p.empty()) return;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : p.t) den_lcm = lcm_int(den_lcm, c.denominator());
    for (const auto& [e, c] : p.t) num_gcd = gcd_int(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    Rational scale(mpq_class(den_lcm, num_gcd));
    if (p.lc().sign() < 0) scale = -scale;
    for (auto& [e, c] : p.t) c *= scale;
}

// Function-field coefficients are simply made monic.
template <>
inline void normalize_coeffs<RatFunc>(EPoly<RatFunc>& p) {
    if (p.empty()) return;
    RatFunc inv = p.lc().inverse();
    for (auto& [e, c] : p.t) c *= inv;
}

template <class C>
void make_monic(EPoly<C>& p) {
    if (p.empty()) return;
    C inv = C(1) / p.lc();
    for (auto& [e, c] : p.t) c = c * inv;
}

/// r = a - c * x^m * b, all inputs sorted descending under `ord`.
template <class C>
EPoly<C> sub_scaled(const EPoly<C>& a, const C& c, const ExpVec& m, const EPoly<C>& b,
                    const MonomialOrder& ord) {
    EPoly<C> r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    while (i < a.t.size() || j < b.t.size()) {
        if (j == b.t.size()) { r.t.push_back(a.t[i++]); continue; }
        ExpVec eb = exp_add(b.t[j].first, m);
        if (i == a.t.size()) {
            r.t.emplace_back(std::move(eb), C(0) - c * b.t[j].second);
            ++j;
            continue;
        }
        if (a.t[i].first == eb) {
            C v = a.t[i].second - c * b.t[j].second;
            if (!detail::coeff_is_zero(v)) r.t.emplace_back(a.t[i].first, std::move(v));
            ++i; ++j;
        } else if (exp_less(eb, a.t[i].first, ord)) {
            r.t.push_back(a.t[i++]);
        } else {
            r.t.emplace_back(std::move(eb), C(0) - c * b.t[j].second);
            ++j;
        }
    }
    return r;
}

/// Buchberger engine over a field C, deterministic throughout.
template <class C>
class Engine {
public:
    Engine(MonomialOrder ord, double timeout_seconds)
        : ord_(ord), deadline_(std::chrono::steady_clock::now() +
                               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(timeout_seconds))) {}

    /// Full normal form: no term of the remainder is divisible by any basis
    /// leading monomial. Scans divisors in basis order.
    EPoly<C> normal_form(EPoly<C> h, const std::vector<EPoly<C>>& basis) const {
        EPoly<C> r;
        while (!h.empty()) {
            bool divided = false;
            for (const auto& g : basis) {
                if (g.empty() || !exp_divides(g.lm(), h.lm())) continue;
                C f = h.lc() / g.lc();
                h = sub_scaled(h, f, exp_sub(h.lm(), g.lm()), g, ord_);
                divided = true;
                break;
            }
            if (!divided) {
                r.t.push_back(h.t.front());
                h.t.erase(h.t.begin());
            }
        }
        return r;
    }

    /// Computes the unique reduced Groebner basis (monic, auto-reduced,
    /// sorted by ascending leading monomial).
    std::vector<EPoly<C>> reduced_basis(std::vector<EPoly<C>> gens) {
        std::vector<EPoly<C>> basis;
        for (auto& g : gens) {
            if (g.empty()) continue;
            normalize_coeffs(g);
            basis.push_back(std::move(g));
        }
        // Pair queue under the normal strategy: minimal lcm first.
        struct Pair {
            ExpVec lcm;
            std::size_t i, j;
        };
        auto pair_less = [this](const Pair& a, const Pair& b) {
            if (a.lcm != b.lcm) return exp_less(a.lcm, b.lcm, ord_);
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        };
        std::vector<Pair> queue;
        std::set<std::pair<std::size_t, std::size_t>> pending;
        auto push_pair = [&](std::size_t i, std::size_t j) {
            // First Buchberger criterion: coprime leading monomials.
            ExpVec l = exp_lcm(basis[i].lm(), basis[j].lm());
            ExpVec prod = exp_add(basis[i].lm(), basis[j].lm());
            if (l == prod) return;
            queue.push_back(Pair{std::move(l), i, j});
            pending.insert({i, j});
        };
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

        while (!queue.empty()) {
            check_deadline();
            auto it = std::min_element(queue.begin(), queue.end(), pair_less);
            Pair p = *it;
            queue.erase(it);
            pending.erase({p.i, p.j});
            // Chain criterion: skip when some k divides the lcm and both
            // side pairs are already handled.
            bool chained = false;
            for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
                if (k == p.i || k == p.j || basis[k].empty()) continue;
                if (!exp_divides(basis[k].lm(), p.lcm)) continue;
                auto key = [](std::size_t a, std::size_t b) {
                    return std::make_pair(std::min(a, b), std::max(a, b));
                };
                if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) chained = true;
            }
            if (chained) continue;

            const EPoly<C>&f = basis[p.i], &g = basis[p.j];
            ExpVec mf = exp_sub(p.lcm, f.lm()), mg = exp_sub(p.lcm, g.lm());
            // S-polynomial: (1/lc_f) x^mf f - (1/lc_g) x^mg g.
            EPoly<C> shifted;
            shifted.t.reserve(f.t.size());
            C finv = C(1) / f.lc();
            for (const auto& [e, c] : f.t) shifted.t.emplace_back(exp_add(e, mf), c * finv);
            EPoly<C> s = sub_scaled(shifted, C(1) / g.lc(), mg, g, ord_);
            s = normal_form(std::move(s), basis);
            if (s.empty()) continue;
            normalize_coeffs(s);
            basis.push_back(std::move(s));
            for (std::size_t i = 0; i + 1 < basis.size(); ++i)
                if (!basis[i].empty()) push_pair(i, basis.size() - 1);
        }

        // Minimalize: drop members whose leading monomial is divisible by
        // another surviving leading monomial.
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) { keep[i] = false; continue; }
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[j] || basis[j].empty()) continue;
                if (exp_divides(basis[j].lm(), basis[i].lm()) &&
                    (basis[i].lm() != basis[j].lm() || j < i)) {
                    keep[i] = false;
                    break;
                }
            }
        }
        std::vector<EPoly<C>> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) minimal.push_back(std::move(basis[i]));
        // Tail-reduce each against the others and make monic.
        std::vector<EPoly<C>> reduced;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<EPoly<C>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            EPoly<C> r = normal_form(minimal[i], others);
            if (r.empty()) continue;
            make_monic(r);
            reduced.push_back(std::move(r));
        }
        std::sort(reduced.begin(), reduced.end(), [this](const EPoly<C>& a, const EPoly<C>& b) {
            return exp_less(a.lm(), b.lm(), ord_);
        });
        return reduced;
    }

private:
    void check_deadline() const {
        if (std::chrono::steady_clock::now() > deadline_)
            throw TimeoutError("Groebner basis computation exceeded its time budget");
    }

    MonomialOrder ord_;
    std::chrono::steady_clock::time_point deadline_;
};

/// Restricts a polynomial to the listed variables; throws when it involves
/// any other variable or has negative exponents.
template <class C>
EPoly<C> to_engine(const MPoly<C>& p, const std::vector<int>& vars, const MonomialOrder& ord) {
    std::vector<int> slot(static_cast<std::size_t>(p.symtab()->size()), -1);
    for (std::size_t k = 0; k < vars.size(); ++k) slot[static_cast<std::size_t>(vars[k])] = static_cast<int>(k);
    EPoly<C> out;
    for (const auto& [e, c] : p.terms()) {
        ExpVec re(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0)
                throw MathError("Laurent exponent in Groebner input on '" +
                                p.symtab()->name(static_cast<int>(i)) + "'");
            if (slot[i] < 0)
                throw MathError("generator involves variable '" + p.symtab()->name(static_cast<int>(i)) +
                                "' outside the ideal's variable list");
            re[static_cast<std::size_t>(slot[i])] = e[i];
        }
        out.t.emplace_back(std::move(re), c);
    }
    std::sort(out.t.begin(), out.t.end(),
              [&ord](const auto& a, const auto& b) { return exp_less(b.first, a.first, ord); });
    return out;
}

template <class C>
MPoly<C> from_engine(const EPoly<C>& p, const SymTabPtr& tab, const std::vector<int>& vars) {
    MPoly<C> out(tab);
    for (const auto& [e, c] : p.t) {
        ExpVec full(static_cast<std::size_t>(tab->size()), 0);
        for (std::size_t k = 0; k < vars.size(); ++k) full[static_cast<std::size_t>(vars[k])] = e[k];
        out.add_term(std::move(full), c);
    }
    return out;
}

} // namespace gb

/// Multivariate division remainder against a basis; deterministic given the
/// basis order. Inputs must have nonnegative exponents.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const std::vector<int>& vars, MonomialOrder order);

/// Reduced Groebner basis of the ideal under the order (unique).
std::vector<MultiPoly> buchberger(const Ideal& ideal, MonomialOrder order,
                                  double timeout_seconds = 120.0);

/// Elimination ideal: members of a block-order basis free of drop_vars.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_vars,
                double timeout_seconds = 120.0);

/// Saturation (ideal : f^inf) via a Rabinowitsch variable.
Ideal saturate(const Ideal& ideal, const MultiPoly& f, double timeout_seconds = 120.0);

/// Division of a by b across all variables; returns (quotient, remainder).
std::pair<MultiPoly, MultiPoly> mpoly_divmod(const MultiPoly& a, const MultiPoly& b);

/// gcd of multivariate polynomials with nonnegative exponents, normalized to
/// primitive integer coefficients with positive leading sign.
MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b);

/// Squarefree part: p divided by gcd(p, dp/dlambda, dp/dmu, dp/dQ).
MultiPoly squarefree_part(const MultiPoly& p);

struct AugPolyCandidate {
    MultiPoly poly;
    bool principal = true;
    std::string warning;  // nonempty when the elimination ideal was not principal
};

/// Augmentation-polynomial candidate by elimination: clear ring-variable
/// denominators of the degree-1 differentials, saturate by lambda*mu*Q,
/// eliminate chord and saturation variables, reduce the result.
AugPolyCandidate augpoly_from_dga(const DGA& dga, double timeout_seconds = 120.0);

} // namespace kcha

#endif
