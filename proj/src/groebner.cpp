#include "kcha/groebner.hpp"

#include <map>

namespace kcha {

using gb::EPoly;
using gb::Engine;
using gb::from_engine;
using gb::to_engine;

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const std::vector<int>& vars, MonomialOrder order) {
    Engine<Rational> engine(order, 120.0);
    std::vector<EPoly<Rational>> b;
    b.reserve(basis.size());
    for (const auto& g : basis) b.push_back(to_engine(g, vars, order));
    EPoly<Rational> r = engine.normal_form(to_engine(p, vars, order), b);
    return from_engine(r, p.symtab(), vars);
}

std::vector<MultiPoly> buchberger(const Ideal& ideal, MonomialOrder order, double timeout_seconds) {
    Engine<Rational> engine(order, timeout_seconds);
    std::vector<EPoly<Rational>> gens;
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) throw ValidationError("ideal generators must be nonzero");
        gens.push_back(to_engine(g, ideal.vars, order));
    }
    std::vector<MultiPoly> out;
    for (const auto& g : engine.reduced_basis(std::move(gens)))
        out.push_back(from_engine(g, ideal.symtab, ideal.vars));
    return out;
}

Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& drop_vars,
                double timeout_seconds) {
    std::vector<int> front, back;
    for (const auto& n : drop_vars) {
        int idx = ideal.symtab->require(n);
        if (std::find(ideal.vars.begin(), ideal.vars.end(), idx) == ideal.vars.end())
            throw MathError("eliminated variable '" + n + "' is not in the ideal's variable list");
        front.push_back(idx);
    }
    for (int v : ideal.vars)
        if (std::find(front.begin(), front.end(), v) == front.end()) back.push_back(v);
    std::vector<int> order_vars = front;
    order_vars.insert(order_vars.end(), back.begin(), back.end());

    Ideal reordered{ideal.symtab, order_vars, ideal.generators};
    std::vector<MultiPoly> basis =
        buchberger(reordered, MonomialOrder::block(static_cast<int>(front.size())), timeout_seconds);

    Ideal out{ideal.symtab, back, {}};
    for (const auto& g : basis) {
        bool free_of_front = true;
        for (int v : front)
            if (g.involves(v)) { free_of_front = false; break; }
        if (free_of_front) out.generators.push_back(g);
    }
    return out;
}

Ideal saturate(const Ideal& ideal, const MultiPoly& f, double timeout_seconds) {
    if (f.is_zero()) throw MathError("saturation by the zero polynomial");
    check_same_symtab(ideal.symtab, f.symtab());
    // Fresh Rabinowitsch variable on an extended symtab.
    std::string wname = "w_sat";
    for (int k = 0; ideal.symtab->find(wname) >= 0; ++k) wname = "w_sat" + std::to_string(k);
    std::vector<std::string> chords(ideal.symtab->names().begin() + SymTab::kRingVars,
                                    ideal.symtab->names().end());
    chords.push_back(wname);
    SymTabPtr ext = SymTab::make(chords);
    const int widx = ext->require(wname);

    auto transport = [&](const MultiPoly& p) {
        MultiPoly out(ext);
        for (const auto& [e, c] : p.terms()) {
            ExpVec ne(static_cast<std::size_t>(ext->size()), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                ne[static_cast<std::size_t>(ext->require(p.symtab()->name(static_cast<int>(i))))] = e[i];
            out.add_term(std::move(ne), c);
        }
        return out;
    };

    Ideal ext_ideal{ext, {}, {}};
    for (int v : ideal.vars) ext_ideal.vars.push_back(ext->require(ideal.symtab->name(v)));
    for (const auto& g : ideal.generators) ext_ideal.generators.push_back(transport(g));
    // w*f - 1
    MultiPoly wf = MultiPoly::variable(ext, widx) * transport(f) -
                   MultiPoly::constant(ext, Rational(1));
    ext_ideal.generators.push_back(wf);
    ext_ideal.vars.insert(ext_ideal.vars.begin(), widx);

    Ideal eliminated = eliminate(ext_ideal, {wname}, timeout_seconds);

    // Transport back to the original symtab.
    Ideal out{ideal.symtab, ideal.vars, {}};
    for (const auto& g : eliminated.generators) {
        MultiPoly p(ideal.symtab);
        for (const auto& [e, c] : g.terms()) {
            ExpVec ne(static_cast<std::size_t>(ideal.symtab->size()), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                ne[static_cast<std::size_t>(ideal.symtab->require(ext->name(static_cast<int>(i))))] = e[i];
            }
            p.add_term(std::move(ne), c);
        }
        out.generators.push_back(std::move(p));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multivariate gcd by primitive pseudo-remainder sequences.

namespace {

int degree_in(const MultiPoly& p, int var) {
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
}

/// Coefficient of var^k, as a polynomial in the remaining variables.
MultiPoly coeff_in(const MultiPoly& p, int var, int k) {
    MultiPoly out(p.symtab());
    for (const auto& [e, c] : p.terms()) {
        if (e[static_cast<std::size_t>(var)] != k) continue;
        ExpVec ne = e;
        ne[static_cast<std::size_t>(var)] = 0;
        out.add_term(std::move(ne), c);
    }
    return out;
}

MultiPoly times_power(const MultiPoly& p, int var, int k) {
    MultiPoly out(p.symtab());
    for (const auto& [e, c] : p.terms()) {
        ExpVec ne = e;
        ne[static_cast<std::size_t>(var)] += k;
        out.add_term(std::move(ne), c);
    }
    return out;
}

/// Deterministic normalization: primitive integer coefficients, leading
/// coefficient (in the canonical term order) positive.
MultiPoly make_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [e, c] : p.terms()) den_lcm = lcm_int(den_lcm, c.denominator());
    for (const auto& [e, c] : p.terms())
        num_gcd = gcd_int(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    Rational scale(mpq_class(den_lcm, num_gcd));
    if (p.terms().begin()->second.sign() < 0) scale = -scale;
    return p * scale;
}

int highest_var_present(const MultiPoly& a, const MultiPoly& b) {
    for (int v = a.symtab()->size() - 1; v >= 0; --v)
        if (a.involves(v) || b.involves(v)) return v;
    return -1;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    auto [q, r] = mpoly_divmod(a, b);
    if (!r.is_zero()) throw MathError("inexact multivariate division");
    return q;
}

/// Pseudo-remainder of a by b with respect to var, up to a rational unit:
/// integer content is stripped every round to keep coefficients small.
MultiPoly pseudo_rem(MultiPoly a, const MultiPoly& b, int var) {
    const int db = degree_in(b, var);
    const MultiPoly lb = coeff_in(b, var, db);
    int da = degree_in(a, var);
    while (!a.is_zero() && (da = degree_in(a, var)) >= db) {
        MultiPoly la = coeff_in(a, var, da);
        a = make_primitive(a * lb - times_power(la * b, var, da - db));
        if (!a.is_zero() && degree_in(a, var) >= da)
            throw MathError("pseudo-division failed to reduce degree");
    }
    return a;
}

MultiPoly content_in(const MultiPoly& p, int var);

MultiPoly gcd_rec(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return make_primitive(b);
    if (b.is_zero()) return make_primitive(a);
    a = make_primitive(a);
    b = make_primitive(b);
    int var = highest_var_present(a, b);
    if (var < 0) return MultiPoly::constant(a.symtab(), Rational(1));  // both constant
    if (!a.involves(var)) return gcd_rec(std::move(a), content_in(b, var));
    if (!b.involves(var)) return gcd_rec(content_in(a, var), std::move(b));

    MultiPoly ca = content_in(a, var), cb = content_in(b, var);
    MultiPoly cg = gcd_rec(ca, cb);
    MultiPoly pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MultiPoly r = pseudo_rem(pa, pb, var);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = MultiPoly(a.symtab());
        } else {
            pb = exact_divide(r, content_in(r, var));  // primitive part
        }
    }
    return make_primitive(cg * pa);
}

/// Content of p with respect to var: gcd of the var-coefficients.
MultiPoly content_in(const MultiPoly& p, int var) {
    MultiPoly acc(p.symtab());
    for (int k = 0; k <= degree_in(p, var); ++k) {
        MultiPoly c = coeff_in(p, var, k);
        if (c.is_zero()) continue;
        acc = acc.is_zero() ? make_primitive(c) : gcd_rec(acc, c);
        if (acc.is_constant()) break;
    }
    return acc.is_zero() ? MultiPoly::constant(p.symtab(), Rational(1)) : acc;
}

} // namespace

std::pair<MultiPoly, MultiPoly> mpoly_divmod(const MultiPoly& a, const MultiPoly& b) {
    check_same_symtab(a.symtab(), b.symtab());
    if (b.is_zero()) throw MathError("multivariate division by zero");
    if (a.has_negative_exponents() || b.has_negative_exponents())
        throw MathError("multivariate division requires nonnegative exponents");
    // Single-divisor division under the canonical descending-lex order.
    MultiPoly q(a.symtab()), r(a.symtab()), h = a;
    const ExpVec& lb = b.terms().begin()->first;
    const Rational lc = b.terms().begin()->second;
    while (!h.is_zero()) {
        const auto& [lh, ch] = *h.terms().begin();
        bool divisible = true;
        for (std::size_t i = 0; i < lh.size(); ++i)
            if (lh[i] < lb[i]) { divisible = false; break; }
        MultiPoly t(a.symtab());
        if (divisible) {
            t.add_term(gb::exp_sub(lh, lb), ch / lc);
            q = q + t;
            h = h - t * b;
        } else {
            t.add_term(lh, ch);
            r = r + t;
            h = h - t;
        }
    }
    return {q, r};
}

MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b) {
    check_same_symtab(a.symtab(), b.symtab());
    if (a.is_zero() && b.is_zero()) throw MathError("gcd of two zero polynomials");
    if (a.has_negative_exponents() || b.has_negative_exponents())
        throw MathError("multivariate gcd requires nonnegative exponents");
    return gcd_rec(a, b);
}

MultiPoly squarefree_part(const MultiPoly& p) {
    if (p.is_zero() || p.is_constant()) return p;
    MultiPoly g(p.symtab());
    for (int v : {SymTab::kLambda, SymTab::kMu, SymTab::kQ}) {
        MultiPoly d = p.partial(v);
        if (d.is_zero()) continue;
        g = g.is_zero() ? mpoly_gcd(p, d) : mpoly_gcd(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_zero() || g.is_constant()) return make_primitive(p);
    return make_primitive(exact_divide(p, g));
}

AugPolyCandidate augpoly_from_dga(const DGA& dga, double timeout_seconds) {
    std::vector<std::string> deg1 = dga.chords_of_degree(1);
    std::vector<MultiPoly> diffs;
    for (const auto& gen : deg1) {
        auto it = dga.differentials.find(gen);
        if (it != dga.differentials.end() && !it->second.is_zero()) diffs.push_back(it->second);
    }
    if (diffs.empty()) throw ValidationError("DGA has no degree-1 differentials to eliminate");

    // Work on a symtab with only the degree-0 chords (the only chord
    // variables a degree-1 differential may mention).
    std::vector<std::string> chords = dga.chords_of_degree(0);
    SymTabPtr tab = SymTab::make(chords);
    Ideal ideal{tab, {}, {}};
    for (const auto& c : chords) ideal.vars.push_back(tab->require(c));
    ideal.vars.push_back(SymTab::kLambda);
    ideal.vars.push_back(SymTab::kMu);
    ideal.vars.push_back(SymTab::kQ);

    for (const auto& d : diffs) {
        // Transport and clear ring-variable denominators by a monomial.
        int min_l = 0, min_m = 0, min_q = 0;
        for (const auto& [e, c] : d.terms()) {
            min_l = std::min(min_l, e[SymTab::kLambda]);
            min_m = std::min(min_m, e[SymTab::kMu]);
            min_q = std::min(min_q, e[SymTab::kQ]);
        }
        MultiPoly cleared(tab);
        for (const auto& [e, c] : d.terms()) {
            ExpVec ne(static_cast<std::size_t>(tab->size()), 0);
            ne[SymTab::kLambda] = e[SymTab::kLambda] - min_l;
            ne[SymTab::kMu] = e[SymTab::kMu] - min_m;
            ne[SymTab::kQ] = e[SymTab::kQ] - min_q;
            for (std::size_t i = SymTab::kRingVars; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                ne[static_cast<std::size_t>(tab->require(d.symtab()->name(static_cast<int>(i))))] = e[i];
            }
            cleared.add_term(std::move(ne), c);
        }
        ideal.generators.push_back(std::move(cleared));
    }

    MultiPoly lmq = MultiPoly::variable(tab, SymTab::kLambda) *
                    MultiPoly::variable(tab, SymTab::kMu) * MultiPoly::variable(tab, SymTab::kQ);
    Ideal saturated = saturate(ideal, lmq, timeout_seconds);
    Ideal elim = eliminate(saturated, chords, timeout_seconds);
    if (elim.generators.empty())
        throw InapplicableError("elimination ideal is zero; the augmentation polynomial may be 0");

    // The surviving members already form a reduced basis in lambda, mu, Q.
    AugPolyCandidate out{MultiPoly(tab), true, ""};
    if (elim.generators.size() == 1) {
        out.poly = squarefree_part(elim.generators.front());
    } else {
        // Lowest total degree member, ties broken by canonical rendering.
        auto total_degree = [](const MultiPoly& p) {
            long d = 0;
            for (const auto& [e, c] : p.terms()) {
                long t = 0;
                for (int x : e) t += x;
                d = std::max(d, t);
            }
            return d;
        };
        const MultiPoly* best = nullptr;
        long best_deg = 0;
        for (const auto& g : elim.generators) {
            long dg = total_degree(g);
            if (!best || dg < best_deg || (dg == best_deg && render(g) < render(*best))) {
                best = &g;
                best_deg = dg;
            }
        }
        out.poly = squarefree_part(*best);
        out.principal = false;
        out.warning = "elimination ideal is not principal; returning its lowest-degree member";
    }
    out.poly = make_primitive(out.poly);
    return out;
}

} // namespace kcha
