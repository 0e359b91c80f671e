#include "kcha/augment.hpp"

#include <algorithm>

#include "kcha/errors.hpp"
#include "kcha/groebner.hpp"

namespace kcha {

Branch Branch::from_string(const std::string& s) {
    if (s == "M") return m();
    if (s == "L") return l();
    throw ValidationError("unknown branch '" + s + "' (expected \"M\" or \"L\")");
}

namespace {

/// Assignment pinning the branch: two ring variables to 1, the parameter to
/// itself, chords to family values. Leaves any other variable symbolic.
RatFuncAssignment branch_assignment(const DGA& dga, const AugFamily& fam, bool keep_unpinned_symbolic) {
    const std::string param = fam.branch.parameter();
    RatFuncAssignment a = RatFuncAssignment::none(dga.symtab, param);
    a.set(fam.branch.parameter_index(), RatFunc::variable(param));
    if (!keep_unpinned_symbolic) {
        a.set(fam.branch.pinned_index(), RatFunc::constant(param, Rational(1)));
        a.set(SymTab::kQ, RatFunc::constant(param, Rational(1)));
    }
    for (const auto& [chord, value] : fam.values) a.set(dga.symtab->require(chord), value);
    return a;
}

RatFunc to_scalar(const MultiPolyF& p, const std::string& what) {
    if (p.is_zero()) return RatFunc();
    if (!p.is_constant())
        throw MathError(what + ": substitution left symbolic variables behind");
    return p.constant_value();
}

} // namespace

VerifyReport verify_augmentation(const DGA& dga, const AugFamily& fam) {
    for (const auto& chord : dga.chords_of_degree(0))
        if (!fam.values.count(chord))
            throw ValidationError("augmentation family missing a value for chord '" + chord + "'");
    for (const auto& [chord, value] : fam.values)
        if (dga.degree_of(chord) != 0)
            throw ValidationError("augmentation family assigns non-degree-0 chord '" + chord + "'");

    RatFuncAssignment a = branch_assignment(dga, fam, /*keep_unpinned_symbolic=*/false);
    VerifyReport report;
    report.pass = true;
    for (const auto& gen : dga.chords_of_degree(1)) {
        VerifyRow row;
        row.generator = gen;
        row.residual = to_scalar(substitute(dga.differentials.at(gen), a), "verify_augmentation");
        row.ok = row.residual.is_zero();
        report.pass = report.pass && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Matrix<RatFunc> linearized_matrix(const DGA& dga, const AugFamily& fam, int from_degree) {
    if (from_degree != 1 && from_degree != 2)
        throw ValidationError("from_degree must be 1 or 2");
    std::vector<std::string> rows = dga.chords_of_degree(from_degree - 1);
    std::vector<std::string> cols = dga.chords_of_degree(from_degree);
    if (from_degree == 2) {
        for (const auto& gen : cols)
            if (!dga.differentials.count(gen))
                throw InapplicableError("degree-2 differentials absent: missing differential of '" + gen + "'");
    }
    RatFuncAssignment a = branch_assignment(dga, fam, /*keep_unpinned_symbolic=*/false);
    Matrix<RatFunc> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        const MultiPoly& diff = dga.differentials.at(cols[static_cast<std::size_t>(j)]);
        for (int i = 0; i < m.rows(); ++i) {
            MultiPoly d = diff.partial(rows[static_cast<std::size_t>(i)]);
            m(i, j) = to_scalar(substitute(d, a), "linearized_matrix");
        }
    }
    return m;
}

BranchFunction compute_branch_function(const DGA& dga, const AugFamily& fam, const Cycle& y) {
    // Membership in the kernel is part of the contract.
    {
        Matrix<RatFunc> m = linearized_matrix(dga, fam, 1);
        std::vector<std::string> cols = dga.chords_of_degree(1);
        for (int i = 0; i < m.rows(); ++i) {
            RatFunc acc;
            for (int j = 0; j < m.cols(); ++j) {
                auto it = y.coords.find(cols[static_cast<std::size_t>(j)]);
                if (it != y.coords.end()) acc += m(i, j) * it->second;
            }
            if (!acc.is_zero()) throw MathError("cycle is not in the kernel of the linearized differential");
        }
    }

    RatFuncAssignment a = branch_assignment(dga, fam, /*keep_unpinned_symbolic=*/true);
    MultiPolyF f(dga.symtab);
    for (const auto& [gen, coeff] : y.coords) {
        if (coeff.is_zero()) continue;
        if (dga.degree_of(gen) != 1)
            throw ValidationError("cycle coordinate on non-degree-1 chord '" + gen + "'");
        f = f + substitute(dga.differentials.at(gen), a) * coeff;
    }

    BranchFunction bf;
    bf.branch = fam.branch;
    bf.dga_name = dga.name;
    const int sym = fam.branch.pinned_index();  // the unpinned symbolic ring var of this branch
    for (const auto& [e, c] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (static_cast<int>(i) != sym && static_cast<int>(i) != SymTab::kQ)
                throw MathError("branch function involves unexpected variable '" +
                                dga.symtab->name(static_cast<int>(i)) + "'");
        }
        bf.terms[{e[static_cast<std::size_t>(sym)], e[SymTab::kQ]}] += c;
    }
    for (auto it = bf.terms.begin(); it != bf.terms.end();)
        it = it->second.is_zero() ? bf.terms.erase(it) : std::next(it);

    // F restricted to the pinned line must vanish identically.
    RatFunc at_one;
    for (const auto& [e, c] : bf.terms) at_one += c;
    if (!at_one.is_zero())
        throw MathError("branch function does not vanish at (1,1); inconsistent augmentation data");
    return bf;
}

std::pair<RatFunc, RatFunc> branch_derivatives(const BranchFunction& bf) {
    RatFunc f_first, f_t;
    for (const auto& [e, c] : bf.terms) {
        f_first += c * RatFunc(e.first);
        f_t += c * RatFunc(e.second);
    }
    return {f_first, f_t};
}

bool branch_l_identity_holds(const RatFunc& f_p, const RatFunc& f_t) {
    RatFunc lam = RatFunc::variable("lambda");
    RatFunc one = RatFunc::constant("lambda", Rational(1));
    return (lam * f_p - (lam - one) * f_t).is_zero();
}

std::vector<Cycle> find_generating_cycles(const DGA& dga, const AugFamily& fam) {
    Matrix<RatFunc> m1 = linearized_matrix(dga, fam, 1);
    std::vector<std::string> deg1 = dga.chords_of_degree(1);
    if (deg1.empty()) throw InapplicableError("no degree-1 chords: nothing to take cycles from");
    std::vector<std::vector<RatFunc>> kernel = matrix_kernel(m1);
    if (kernel.empty()) throw InapplicableError("empty kernel (signals inconsistent input)");

    if (dga.has_degree2_differentials()) {
        // Quotient by the image of the degree-2 linearized differential:
        // keep kernel vectors that extend the image greedily, in order.
        Matrix<RatFunc> m2 = linearized_matrix(dga, fam, 2);
        std::vector<std::vector<RatFunc>> selected;
        auto rank_with = [&](const std::vector<std::vector<RatFunc>>& extra) {
            Matrix<RatFunc> probe(static_cast<int>(deg1.size()),
                                  m2.cols() + static_cast<int>(extra.size()));
            for (int i = 0; i < probe.rows(); ++i) {
                for (int j = 0; j < m2.cols(); ++j) probe(i, j) = m2(i, j);
                for (std::size_t k = 0; k < extra.size(); ++k)
                    probe(i, m2.cols() + static_cast<int>(k)) = extra[k][static_cast<std::size_t>(i)];
            }
            return matrix_rank(probe);
        };
        int base_rank = rank_with({});
        for (const auto& v : kernel) {
            auto trial = selected;
            trial.push_back(v);
            if (rank_with(trial) > base_rank + static_cast<int>(selected.size()))
                selected.push_back(v);
        }
        kernel = std::move(selected);
        if (kernel.empty())
            throw InapplicableError("degree-1 linearized homology is zero; no generating cycle");
    }

    std::vector<Cycle> out;
    for (const auto& v : kernel) {
        Cycle c;
        for (std::size_t j = 0; j < deg1.size(); ++j)
            if (!v[j].is_zero()) c.coords[deg1[j]] = v[j];
        BranchFunction bf = compute_branch_function(dga, fam, c);
        auto [f_first, f_t] = branch_derivatives(bf);
        c.f_first = f_first;
        c.f_t = f_t;
        c.usable = !f_first.is_zero();
        c.branch_identity_ok = fam.branch.tag == Branch::M || branch_l_identity_holds(f_first, f_t);
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Augmentation solver.

namespace {

using FPoly = MPoly<RatFunc>;

FPoly substitute_chord(const FPoly& p, int var, const RatFunc& value) {
    FPoly out(p.symtab());
    for (const auto& [e, c] : p.terms()) {
        int k = e[static_cast<std::size_t>(var)];
        ExpVec ne = e;
        ne[static_cast<std::size_t>(var)] = 0;
        out.add_term(std::move(ne), c * value.pow(k));
    }
    return out;
}

/// Univariate view of p in `var`: coefficient list (ascending) when p
/// involves no other chord variable; empty optional otherwise.
bool univariate_in(const FPoly& p, int var, std::vector<RatFunc>& coeffs) {
    int deg = 0;
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = SymTab::kRingVars; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0) return false;
        deg = std::max(deg, e[static_cast<std::size_t>(var)]);
    }
    coeffs.assign(static_cast<std::size_t>(deg) + 1, RatFunc());
    for (const auto& [e, c] : p.terms())
        coeffs[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += c;
    return true;
}

/// Monic gcd of univariate polynomials with RatFunc coefficients.
std::vector<RatFunc> gcd_over_field(std::vector<std::vector<RatFunc>> polys) {
    auto trim = [](std::vector<RatFunc>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    auto rem = [&](std::vector<RatFunc> a, const std::vector<RatFunc>& b) {
        RatFunc lead_inv = b.back().inverse();
        while (a.size() >= b.size()) {
            RatFunc f = a.back() * lead_inv;
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        return a;
    };
    std::vector<RatFunc> g;
    for (auto& p : polys) {
        trim(p);
        if (p.empty()) continue;
        if (g.empty()) { g = std::move(p); continue; }
        while (!p.empty()) {
            auto r = rem(g, p);
            g = std::move(p);
            p = std::move(r);
        }
    }
    if (!g.empty()) {
        RatFunc inv = g.back().inverse();
        for (auto& c : g) c *= inv;
    }
    return g;
}

void solve_recursive(const SymTabPtr& tab, std::vector<FPoly> equations,
                     std::vector<int> remaining_vars, const std::string& param,
                     std::map<std::string, RatFunc>& partial,
                     std::vector<std::map<std::string, RatFunc>>& solutions) {
    // Drop vanished equations; a surviving nonzero constant kills the branch.
    std::vector<FPoly> eqs;
    for (auto& e : equations) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return;
        eqs.push_back(std::move(e));
    }
    if (remaining_vars.empty()) {
        if (eqs.empty()) solutions.push_back(partial);
        return;
    }
    // Solve for the lex-smallest remaining variable first.
    int var = remaining_vars.back();
    remaining_vars.pop_back();

    std::vector<std::vector<RatFunc>> univariate;
    for (const auto& e : eqs) {
        std::vector<RatFunc> coeffs;
        if (univariate_in(e, var, coeffs)) univariate.push_back(std::move(coeffs));
    }
    if (univariate.empty())
        throw InapplicableError("unsolvable at desk scale: no univariate relation for chord '" +
                                tab->name(var) + "' (underdetermined system)");
    std::vector<RatFunc> g = gcd_over_field(std::move(univariate));
    if (g.empty())
        throw InapplicableError("unsolvable at desk scale: chord '" + tab->name(var) +
                                "' is unconstrained (positive-dimensional solution set)");
    const int deg = static_cast<int>(g.size()) - 1;
    std::vector<RatFunc> roots;
    if (deg == 0) return;  // inconsistent: nonzero constant gcd
    if (deg == 1) {
        roots.push_back(RatFunc() - g[0] / g[1]);
    } else if (deg == 2) {
        RatFunc disc = g[1] * g[1] - RatFunc(4) * g[2] * g[0];
        UniPoly rn, rd;
        if (!unipoly_sqrt(disc.num(), rn) || !unipoly_sqrt(disc.den(), rd))
            throw InapplicableError(
                "unsolvable at desk scale: quadratic for chord '" + tab->name(var) +
                "' has a non-square discriminant (solution leaves Q(" + param + "))");
        RatFunc s(rn, rd);
        RatFunc two_a = RatFunc(2) * g[2];
        roots.push_back((RatFunc() - g[1] + s) / two_a);
        roots.push_back((RatFunc() - g[1] - s) / two_a);
        if (s.is_zero()) roots.pop_back();
    } else {
        throw InapplicableError("unsolvable at desk scale: chord '" + tab->name(var) +
                                "' satisfies a degree-" + std::to_string(deg) + " relation");
    }

    for (const auto& r : roots) {
        std::vector<FPoly> next;
        next.reserve(eqs.size());
        for (const auto& e : eqs) next.push_back(substitute_chord(e, var, r));
        partial[tab->name(var)] = r;
        solve_recursive(tab, std::move(next), remaining_vars, param, partial, solutions);
        partial.erase(tab->name(var));
    }
}

} // namespace

std::vector<AugFamily> solve_augmentation_family(const DGA& dga, Branch branch,
                                                 double timeout_seconds) {
    const std::string param = branch.parameter();
    std::vector<std::string> chords = dga.chords_of_degree(0);

    // Pin the branch; chords stay symbolic.
    RatFuncAssignment pin = RatFuncAssignment::none(dga.symtab, param);
    pin.set(branch.parameter_index(), RatFunc::variable(param));
    pin.set(branch.pinned_index(), RatFunc::constant(param, Rational(1)));
    pin.set(SymTab::kQ, RatFunc::constant(param, Rational(1)));

    std::vector<FPoly> system;
    for (const auto& gen : dga.chords_of_degree(1)) {
        FPoly eq = substitute(dga.differentials.at(gen), pin);
        if (eq.is_zero()) continue;
        if (eq.is_constant()) return {};  // no augmentation on this branch
        system.push_back(std::move(eq));
    }
    if (chords.empty()) {
        if (!system.empty()) return {};
        AugFamily fam;
        fam.branch = branch;
        return {fam};
    }

    std::vector<int> vars;
    for (const auto& c : chords) vars.push_back(dga.symtab->require(c));

    std::vector<std::map<std::string, RatFunc>> assignments;
    if (system.empty()) {
        throw InapplicableError("unsolvable at desk scale: chords are unconstrained on branch " +
                                std::string(branch.str()));
    }
    gb::Engine<RatFunc> engine(MonomialOrder::lex(), timeout_seconds);
    std::vector<gb::EPoly<RatFunc>> gens;
    for (const auto& e : system) gens.push_back(gb::to_engine(e, vars, MonomialOrder::lex()));
    std::vector<FPoly> basis;
    for (const auto& g : engine.reduced_basis(std::move(gens)))
        basis.push_back(gb::from_engine(g, dga.symtab, vars));

    std::map<std::string, RatFunc> partial;
    solve_recursive(dga.symtab, basis, vars, param, partial, assignments);

    std::vector<AugFamily> out;
    for (auto& values : assignments) {
        AugFamily fam;
        fam.branch = branch;
        fam.values = std::move(values);
        if (verify_augmentation(dga, fam).pass) out.push_back(std::move(fam));
    }
    std::sort(out.begin(), out.end(), [&](const AugFamily& a, const AugFamily& b) {
        std::string ra, rb;
        for (const auto& [k, v] : a.values) ra += k + "=" + v.str() + ";";
        for (const auto& [k, v] : b.values) rb += k + "=" + v.str() + ";";
        return ra < rb;
    });
    return out;
}

} // namespace kcha
