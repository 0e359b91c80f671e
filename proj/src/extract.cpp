#include "kcha/extract.hpp"

#include "kcha/errors.hpp"
#include "kcha/matrix.hpp"

namespace kcha {

namespace {

RatFunc mu_over_one_minus_mu() {
    UniPoly num = UniPoly::monomial("mu", Rational(1), 1);
    UniPoly den("mu", {Rational(1), Rational(-1)});  // 1 - mu
    return RatFunc(num, den);
}

} // namespace

RatFunc integrand(const RatFunc& f_x, const RatFunc& f_t) {
    if (f_x.is_zero())
        throw InapplicableError("unusable cycle (0/0): f_x is identically zero");
    return (RatFunc() - f_t) / f_x;
}

UniPoly normalize_alexander(const UniPoly& raw) {
    if (raw.is_zero()) throw MathError("normalize_alexander of the zero polynomial");
    UniPoly p = raw.unshift(raw.ord_at_zero()).primitive_part();
    Rational at_one = p.eval(Rational(1));
    if (at_one != Rational(1) && at_one != Rational(-1))
        throw InapplicableError("not an Alexander polynomial: value at 1 is " + at_one.str() +
                                ", expected +1 or -1");
    if (at_one == Rational(-1)) p = -p;
    return p;
}

bool verify_logderivative(const RatFunc& R, const UniPoly& delta) {
    if (delta.is_zero()) throw MathError("verify_logderivative with zero delta");
    RatFunc logderiv(UniPoly::monomial(delta.var(), Rational(1), 1) * delta.derivative(), delta);
    return (R - logderiv - mu_over_one_minus_mu()).is_zero();
}

AlexReport recover_alexander(const RatFunc& R, const std::string& route) {
    const std::string var = "mu";
    RatFunc S = R - mu_over_one_minus_mu();

    const UniPoly& u = S.num();
    const UniPoly& v = S.den();
    if (!S.is_zero() && u.degree() > v.degree())
        throw InapplicableError(
            "integrand is not a polynomial logarithmic derivative: S grows at infinity");

    // S = mu*delta'/delta for a (possibly mu-shifted) polynomial delta:
    // the value at 0 is the shift, the value at infinity the total degree.
    if (v.eval(Rational(0)).is_zero())
        throw InapplicableError("integrand is not a polynomial logarithmic derivative: S has a pole at 0");
    Rational at_zero = S.is_zero() ? Rational(0) : u.eval(Rational(0)) / v.eval(Rational(0));
    Rational at_inf = S.is_zero() ? Rational(0) : S.value_at_infinity();
    if (!at_zero.is_integer() || !at_inf.is_integer())
        throw InapplicableError(
            "integrand is not a polynomial logarithmic derivative: non-integer residue data");
    const long shift = at_zero.to_long();
    const long d_inf = at_inf.to_long();
    const long core_degree = d_inf - shift;
    if (core_degree < 0)
        throw InapplicableError(
            "integrand is not a polynomial logarithmic derivative: negative core degree");

    // Solve mu*core'*v = core*(u - shift*v) for core of degree core_degree
    // with core(0) != 0 (forced by the choice of shift).
    UniPoly w = u - v * Rational(shift);
    const int unknowns = static_cast<int>(core_degree) + 1;
    const int max_k = static_cast<int>(core_degree) + std::max(v.degree(), w.degree()) + 1;
    Matrix<Rational> sys(max_k + 1, unknowns);
    for (int k = 0; k <= max_k; ++k)
        for (int i = 0; i < unknowns; ++i)
            sys(k, i) = Rational(i) * v.coeff(k - i) - w.coeff(k - i);
    std::vector<std::vector<Rational>> kernel = matrix_kernel(sys);
    if (kernel.size() != 1)
        throw InapplicableError("no consistent Alexander polynomial: solution space has dimension " +
                                std::to_string(kernel.size()));
    UniPoly core(var, kernel.front());
    core = core.primitive_part();

    AlexReport report;
    report.route = route;
    report.integrand = R;
    if (shift >= 0) {
        report.raw = core.shift(static_cast<int>(shift));
        if (!verify_logderivative(R, report.raw))
            throw MathError("logarithmic-derivative verification failed after recovery");
    } else {
        // Laurent shift: raw is the polynomial part, the residual integer
        // offset is folded into the verification identity.
        report.raw = core;
        RatFunc shifted = R - RatFunc::constant(var, Rational(shift));
        if (!verify_logderivative(shifted, report.raw))
            throw MathError("logarithmic-derivative verification failed after recovery");
    }
    report.delta = normalize_alexander(report.raw);
    report.degree_at_infinity = report.raw.degree();
    return report;
}

std::pair<RatFunc, RatFunc> augpoly_derivatives(const AugPoly& aug) {
    if (aug.poly.involves_chords())
        throw ValidationError("augmentation polynomial must involve ring variables only");
    RatFuncAssignment pin = RatFuncAssignment::none(aug.poly.symtab(), "mu");
    pin.set(SymTab::kLambda, RatFunc::constant("mu", Rational(1)));
    pin.set(SymTab::kQ, RatFunc::constant("mu", Rational(1)));
    pin.set(SymTab::kMu, RatFunc::variable("mu"));
    RatFunc f_x = substitute(aug.poly.partial(SymTab::kLambda), pin).constant_value();
    RatFunc f_t = substitute(aug.poly.partial(SymTab::kQ), pin).constant_value();
    return {f_x, f_t};
}

bool detect_degenerate_branch(const AugPoly& aug) {
    auto [f_x, f_t] = augpoly_derivatives(aug);
    return f_x.is_zero() && f_t.is_zero();
}

AlexReport alexander_from_augpoly(const AugPoly& aug) {
    if (aug.poly.is_zero()) throw ValidationError("augmentation polynomial is zero");
    auto [f_x, f_t] = augpoly_derivatives(aug);
    if (f_x.is_zero()) {
        if (f_t.is_zero())
            throw InapplicableError(
                "branch formula inapplicable; a different branch of V_K is required "
                "(both restricted partials vanish identically)");
        throw InapplicableError("branch formula inapplicable: d_lambda vanishes identically on the branch");
    }
    return recover_alexander(integrand(f_x, f_t), "Aug-route");
}

AugPolyValidation validate_augpoly(const AugPoly& aug) {
    if (aug.poly.involves_chords())
        throw ValidationError("augmentation polynomial must involve ring variables only");
    const SymTabPtr& tab = aug.poly.symtab();
    AugPolyValidation out;

    RatFuncAssignment on_lambda = RatFuncAssignment::none(tab, "lambda");
    on_lambda.set(SymTab::kLambda, RatFunc::variable("lambda"));
    on_lambda.set(SymTab::kMu, RatFunc::constant("lambda", Rational(1)));
    on_lambda.set(SymTab::kQ, RatFunc::constant("lambda", Rational(1)));
    out.vanishes_on_lambda_line = substitute(aug.poly, on_lambda).is_zero();

    RatFuncAssignment on_mu = RatFuncAssignment::none(tab, "mu");
    on_mu.set(SymTab::kLambda, RatFunc::constant("mu", Rational(1)));
    on_mu.set(SymTab::kMu, RatFunc::variable("mu"));
    on_mu.set(SymTab::kQ, RatFunc::constant("mu", Rational(1)));
    out.vanishes_on_mu_line = substitute(aug.poly, on_mu).is_zero();

    out.mu_partial_vanishes = substitute(aug.poly.partial(SymTab::kMu), on_mu).is_zero();
    return out;
}

MultiPoly framing_transform(const MultiPoly& p, int k) {
    if (p.involves_chords()) throw MathError("framing transform applies to ring variables only");
    const SymTabPtr& tab = p.symtab();
    MultiPoly lam_k_mu(tab);
    ExpVec e(static_cast<std::size_t>(tab->size()), 0);
    e[SymTab::kLambda] = k;
    e[SymTab::kMu] = 1;
    lam_k_mu.add_term(std::move(e), Rational(1));
    return substitute(p, {{SymTab::kMu, lam_k_mu}});
}

MultiPoly splitting_transform(const MultiPoly& p, int l, int m) {
    if (p.involves_chords()) throw MathError("splitting transform applies to ring variables only");
    const SymTabPtr& tab = p.symtab();
    auto times_q_power = [&](int var, int qpow) {
        MultiPoly v(tab);
        ExpVec e(static_cast<std::size_t>(tab->size()), 0);
        e[static_cast<std::size_t>(var)] = 1;
        e[SymTab::kQ] = qpow;
        v.add_term(std::move(e), Rational(1));
        return v;
    };
    return substitute(p, {{SymTab::kLambda, times_q_power(SymTab::kLambda, l)},
                          {SymTab::kMu, times_q_power(SymTab::kMu, m)}});
}

} // namespace kcha
