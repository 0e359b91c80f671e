#include "kcha/novikov.hpp"

#include "kcha/errors.hpp"

namespace kcha {

namespace {

const std::string kMuVar = "mu";

void require_integer_entries(const Matrix<Rational>& m, const char* name) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_integer())
                throw ValidationError(std::string("NovikovData.") + name + " must have integer entries");
}

UniPoly entry_poly(Rational constant, Rational mu_coeff) {
    return UniPoly(kMuVar, {std::move(constant), std::move(mu_coeff)});
}

/// Adjugate of a square UniPoly matrix by cofactor expansion.
std::vector<std::vector<UniPoly>> adjugate(const std::vector<std::vector<UniPoly>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<UniPoly>> adj(static_cast<std::size_t>(n),
                                          std::vector<UniPoly>(static_cast<std::size_t>(n), UniPoly(kMuVar)));
    if (n == 0) return adj;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<UniPoly>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<UniPoly> row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                minor.push_back(std::move(row));
            }
            UniPoly cof = det_bareiss(std::move(minor), kMuVar);
            if ((i + j) % 2 != 0) cof = -cof;
            adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = std::move(cof);
        }
    }
    return adj;
}

} // namespace

void validate_novikov(const NovikovData& nov) {
    const int r = nov.psiF.rows(), s = nov.d0.rows();
    if (nov.psiF.cols() != r) throw ValidationError("psiF must be square");
    if (nov.d0.cols() != s) throw ValidationError("d0 must be square");
    if (nov.psiC.rows() != r || nov.psiC.cols() != s)
        throw ValidationError("psiC must be r x s");
    if (nov.eta.rows() != s || nov.eta.cols() != r)
        throw ValidationError("eta must be s x r");
    require_integer_entries(nov.psiF, "psiF");
    require_integer_entries(nov.psiC, "psiC");
    require_integer_entries(nov.eta, "eta");
    require_integer_entries(nov.d0, "d0");
}

Matrix<RatFunc> assemble_D(const NovikovData& nov) {
    validate_novikov(nov);
    const int r = nov.r(), s = nov.s();
    Matrix<RatFunc> d(r + s, r + s);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            d(i, j) = RatFunc(entry_poly(Rational(i == j ? 1 : 0), -nov.psiF(i, j)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j)
            d(i, r + j) = RatFunc(entry_poly(Rational(0), -nov.psiC(i, j)));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < r; ++j)
            d(r + i, j) = RatFunc(UniPoly::constant(kMuVar, nov.eta(i, j)));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            d(r + i, r + j) = RatFunc(UniPoly::constant(kMuVar, nov.d0(i, j)));
    return d;
}

UniPoly novikov_determinant(const NovikovData& nov) {
    Matrix<RatFunc> d = assemble_D(nov);
    return matrix_det(d).as_polynomial();
}

AlexReport novikov_alexander(const NovikovData& nov) {
    UniPoly det = novikov_determinant(nov);
    if (det.is_zero()) throw InapplicableError("Novikov differential is singular (det D = 0)");
    AlexReport report;
    report.route = "Novikov";
    report.raw = det.primitive_part();
    report.delta = normalize_alexander(report.raw);
    report.degree_at_infinity = report.raw.degree();
    RatFunc logderiv(UniPoly::monomial(kMuVar, Rational(1), 1) * report.delta.derivative(),
                     report.delta);
    report.integrand = logderiv + RatFunc(UniPoly::monomial(kMuVar, Rational(1), 1),
                                          UniPoly(kMuVar, {Rational(1), Rational(-1)}));
    return report;
}

UniPoly det_one_minus_mu_psiF(const Matrix<Rational>& psiF) {
    if (psiF.rows() != psiF.cols()) throw MathError("psiF must be square");
    const int r = psiF.rows();
    std::vector<std::vector<UniPoly>> b(static_cast<std::size_t>(r),
                                        std::vector<UniPoly>(static_cast<std::size_t>(r), UniPoly(kMuVar)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                entry_poly(Rational(i == j ? 1 : 0), -psiF(i, j));
    return det_bareiss(std::move(b), kMuVar);
}

TruncSeries zeta_from_traces(const Matrix<Rational>& psiF, int order) {
    if (psiF.rows() != psiF.cols()) throw MathError("psiF must be square");
    TruncSeries f(kMuVar, order);
    Matrix<Rational> power = Matrix<Rational>::identity(psiF.rows());
    for (int n = 1; n < order; ++n) {
        power = power * psiF;
        Rational trace;
        for (int i = 0; i < psiF.rows(); ++i) trace += power(i, i);
        f.set_coeff(n, -trace / Rational(n));
    }
    return series_exp(f);
}

TruncSeries zeta_from_orbits(const OrbitData& orbits, int order) {
    TruncSeries f(kMuVar, order);
    for (const auto& o : orbits) {
        if (o.sigma != 1 && o.sigma != -1) throw ValidationError("orbit sign must be +1 or -1");
        if (o.m <= 0 || o.d <= 0) throw ValidationError("orbit multiplicity and degree must be positive");
        if (o.d < order)
            f.set_coeff(o.d, f.coeff(o.d) + Rational(o.sigma) / Rational(o.m));
    }
    return series_exp(f);
}

bool factorization_check(const NovikovData& nov) {
    validate_novikov(nov);
    const int r = nov.r(), s = nov.s();

    // B = 1 - mu*psiF over Q[mu]; det B has constant term 1, never zero.
    std::vector<std::vector<UniPoly>> b(static_cast<std::size_t>(r),
                                        std::vector<UniPoly>(static_cast<std::size_t>(r), UniPoly(kMuVar)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                entry_poly(Rational(i == j ? 1 : 0), -nov.psiF(i, j));
    UniPoly det_b = det_bareiss(b, kMuVar);
    std::vector<std::vector<UniPoly>> adj = adjugate(b);

    // tau = det(d0 + mu * eta * B^{-1} * psiC) over Q(mu), adjugate route.
    Matrix<RatFunc> t(s, s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            UniPoly acc(kMuVar);
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l)
                    acc = acc + UniPoly::constant(kMuVar, nov.eta(i, k)) *
                                    adj[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] *
                                    UniPoly::constant(kMuVar, nov.psiC(l, j));
            RatFunc inner(UniPoly::monomial(kMuVar, Rational(1), 1) * acc, det_b);
            t(i, j) = RatFunc(UniPoly::constant(kMuVar, nov.d0(i, j))) + inner;
        }
    }
    RatFunc tau = matrix_det(t);
    RatFunc lhs(novikov_determinant(nov));
    return (lhs - RatFunc(det_b) * tau).is_zero();
}

bool series_product_check(const NovikovData& nov, int order) {
    validate_novikov(nov);
    const int r = nov.r(), s = nov.s();

    // zeta_loop = det(1 - mu*psiF) / (1 - mu), via the trace identity.
    TruncSeries zeta = zeta_from_traces(nov.psiF, order);
    UniPoly one_minus_mu(kMuVar, {Rational(1), Rational(-1)});
    TruncSeries zeta_loop = zeta * TruncSeries::from_polynomial(one_minus_mu, order).inverse();

    // tau as a series: the second determinant factor.
    std::vector<std::vector<UniPoly>> b(static_cast<std::size_t>(r),
                                        std::vector<UniPoly>(static_cast<std::size_t>(r), UniPoly(kMuVar)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                entry_poly(Rational(i == j ? 1 : 0), -nov.psiF(i, j));
    UniPoly det_b = det_bareiss(b, kMuVar);
    std::vector<std::vector<UniPoly>> adj = adjugate(b);
    Matrix<RatFunc> t(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            UniPoly acc(kMuVar);
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l)
                    acc = acc + UniPoly::constant(kMuVar, nov.eta(i, k)) *
                                    adj[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] *
                                    UniPoly::constant(kMuVar, nov.psiC(l, j));
            t(i, j) = RatFunc(UniPoly::constant(kMuVar, nov.d0(i, j))) +
                      RatFunc(UniPoly::monomial(kMuVar, Rational(1), 1) * acc, det_b);
        }
    RatFunc tau = matrix_det(t);
    TruncSeries tau_series = TruncSeries::from_polynomial(tau.num(), order) *
                             TruncSeries::from_polynomial(tau.den(), order).inverse();

    TruncSeries delta = TruncSeries::from_polynomial(novikov_determinant(nov), order);
    TruncSeries rhs = TruncSeries::from_polynomial(one_minus_mu, order) * zeta_loop * tau_series;
    return delta == rhs;
}

} // namespace kcha
