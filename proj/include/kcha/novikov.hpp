#ifndef KCHA_NOVIKOV_HPP
#define KCHA_NOVIKOV_HPP

#include <vector>

#include "kcha/extract.hpp"
#include "kcha/matrix.hpp"
#include "kcha/series.hpp"

namespace kcha {

/// Integer matrices presenting the Novikov differential D(mu):
/// psiF (r x r), psiC (r x s), eta (s x r), d0 (s x s).
struct NovikovData {
    Matrix<Rational> psiF, psiC, eta, d0;

    int r() const { return psiF.rows(); }
    int s() const { return d0.rows(); }
};

/// Closed-orbit data: sign, multiplicity, homology degree.
struct Orbit {
    int sigma = 1;  // +1 or -1
    int m = 1;      // largest cover multiplicity, positive
    int d = 1;      // class in H_1, positive
};
using OrbitData = std::vector<Orbit>;

void validate_novikov(const NovikovData& nov);

/// Block matrix D(mu) = [[1 - mu*psiF, -mu*psiC], [eta, d0]] over Q[mu].
Matrix<RatFunc> assemble_D(const NovikovData& nov);

/// det D(mu) normalized to a canonical Alexander representative.
AlexReport novikov_alexander(const NovikovData& nov);

/// The raw determinant of D(mu), exact (fraction-free elimination).
UniPoly novikov_determinant(const NovikovData& nov);

/// exp(-sum_{n<N} mu^n tr(psiF^n)/n), equal to det(1 - mu*psiF) as a series.
TruncSeries zeta_from_traces(const Matrix<Rational>& psiF, int order);

/// det(1 - mu*psiF) as an exact polynomial.
UniPoly det_one_minus_mu_psiF(const Matrix<Rational>& psiF);

/// exp(sum sigma/m * mu^d) over the given finite orbit list, truncated.
TruncSeries zeta_from_orbits(const OrbitData& orbits, int order);

/// Exact identity det D = det(1 - mu*psiF) * det(d0 + mu*eta*(1-mu*psiF)^{-1}*psiC),
/// the inverse computed by the adjugate over Q[mu].
bool factorization_check(const NovikovData& nov);

/// Series form of the product formula Delta = (1-mu) * zeta_loop * tau with
/// zeta_loop = det(1-mu*psiF)/(1-mu), checked to the given order.
bool series_product_check(const NovikovData& nov, int order);

} // namespace kcha

#endif
