#include "kcha/oracle.hpp"

#include <numeric>

#include "kcha/errors.hpp"

namespace kcha {

namespace {

const std::string kMuVar = "mu";

RatFunc rf(long c) { return RatFunc::constant(kMuVar, Rational(c)); }
RatFunc mu() { return RatFunc::variable(kMuVar); }

/// Reduced Burau matrix of the positive generator sigma_i on n strands.
Matrix<RatFunc> generator_matrix(int n, int i) {
    Matrix<RatFunc> m = Matrix<RatFunc>::identity(n - 1);
    // Column i-1 (0-based k) carries the action: mu above, -mu on the
    // diagonal, 1 below; all other columns are standard basis vectors.
    const int k = i - 1;
    m(k, k) = rf(0) - mu();
    if (k - 1 >= 0) m(k - 1, k) = mu();
    if (k + 1 <= n - 2) m(k + 1, k) = rf(1);
    return m;
}

} // namespace

void validate_braid(const BraidWord& b) {
    if (b.strands < 1) throw ValidationError("braid must have at least one strand");
    for (int letter : b.word) {
        if (letter == 0) throw ValidationError("braid letters must be nonzero");
        if (std::abs(letter) > b.strands - 1)
            throw ValidationError("braid letter " + std::to_string(letter) + " out of range for " +
                                  std::to_string(b.strands) + " strands");
    }
}

bool closure_is_knot(const BraidWord& b) {
    validate_braid(b);
    std::vector<int> perm(static_cast<std::size_t>(b.strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : b.word) {
        int i = std::abs(letter) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    }
    // Count cycles of the permutation.
    std::vector<bool> seen(perm.size(), false);
    int cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
    }
    return cycles == 1;
}

Matrix<RatFunc> reduced_burau(const BraidWord& b) {
    validate_braid(b);
    if (b.strands < 2) throw ValidationError("reduced Burau requires at least two strands");
    Matrix<RatFunc> acc = Matrix<RatFunc>::identity(b.strands - 1);
    for (int letter : b.word) {
        Matrix<RatFunc> g = generator_matrix(b.strands, std::abs(letter));
        if (letter < 0) g = matrix_inverse(g);
        acc = acc * g;
    }
    return acc;
}

AlexReport alexander_from_braid(const BraidWord& b) {
    validate_braid(b);
    if (!closure_is_knot(b))
        throw InapplicableError("braid closure is not a knot (multiple link components)");

    AlexReport report;
    report.route = "Burau";
    if (b.strands == 1) {
        report.raw = UniPoly::constant(kMuVar, Rational(1));
        report.delta = report.raw;
        report.degree_at_infinity = 0;
        report.integrand = RatFunc(UniPoly::monomial(kMuVar, Rational(1), 1),
                                   UniPoly(kMuVar, {Rational(1), Rational(-1)}));
        return report;
    }

    Matrix<RatFunc> rho = reduced_burau(b);
    Matrix<RatFunc> id = Matrix<RatFunc>::identity(b.strands - 1);
    RatFunc det = det_gauss(id - rho);

    // (1 - mu) / (1 - mu^n)
    UniPoly one_minus_mu(kMuVar, {Rational(1), Rational(-1)});
    std::vector<Rational> pow_coeffs(static_cast<std::size_t>(b.strands) + 1);
    pow_coeffs[0] = Rational(1);
    pow_coeffs.back() = Rational(-1);
    RatFunc factor(one_minus_mu, UniPoly(kMuVar, std::move(pow_coeffs)));

    RatFunc delta_rf = det * factor;
    if (delta_rf.is_zero())
        throw MathError("Burau determinant vanished for a knot closure (implementation bug)");
    // The reduced quotient must be a Laurent monomial times a polynomial:
    // a non-monomial denominator signals a bug, not bad input.
    const UniPoly& den = delta_rf.den();
    int nonzero = 0;
    for (const auto& c : den.coeffs()) nonzero += !c.is_zero();
    if (nonzero != 1)
        throw MathError("Burau quotient is not polynomial up to units (implementation bug)");

    report.raw = delta_rf.num().primitive_part();
    report.delta = normalize_alexander(report.raw);
    report.degree_at_infinity = report.raw.degree();
    RatFunc logderiv(UniPoly::monomial(kMuVar, Rational(1), 1) * report.delta.derivative(),
                     report.delta);
    report.integrand = logderiv + RatFunc(UniPoly::monomial(kMuVar, Rational(1), 1),
                                          UniPoly(kMuVar, {Rational(1), Rational(-1)}));
    return report;
}

} // namespace kcha
