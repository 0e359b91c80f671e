#ifndef KCHA_EXTRACT_HPP
#define KCHA_EXTRACT_HPP

#include <string>

#include "kcha/mpoly.hpp"
#include "kcha/ratfunc.hpp"
#include "kcha/unipoly.hpp"

namespace kcha {

/// Augmentation polynomial: a Laurent polynomial in lambda, mu, Q only.
struct AugPoly {
    std::string name;
    MultiPoly poly;
};

/// Result of an Alexander-polynomial computation along any route.
struct AlexReport {
    std::string route;        // "F-route" | "Aug-route" | "Burau" | "Novikov"
    UniPoly delta;            // canonical: integer, primitive, delta(0) != 0, delta(1) = 1
    UniPoly raw;              // pre-normalization solution (primitive integer)
    RatFunc integrand;        // R = -f_t/f_x (or the log-derivative for oracle routes)
    int degree_at_infinity = 0;  // degree of raw
};

/// R = -f_t/f_x, reduced. f_x identically zero means the cycle was unusable.
RatFunc integrand(const RatFunc& f_x, const RatFunc& f_t);

/// Inverts the logarithmic-derivative identity mu*delta'/delta = R - mu/(1-mu)
/// by a finite linear system; no symbolic antiderivatives. The recovered
/// polynomial is verified against R before it is returned.
AlexReport recover_alexander(const RatFunc& R, const std::string& route = "F-route");

/// Canonical representative of the unit ambiguity: strip the mu-power,
/// clear content to primitive integer coefficients, fix the sign by
/// delta(1) = +1. Rejects input with |delta(1)| != 1.
UniPoly normalize_alexander(const UniPoly& raw);

/// Exact check of R = mu*delta'/delta + mu/(1-mu).
bool verify_logderivative(const RatFunc& R, const UniPoly& delta);

/// Augmentation-polynomial route: f_x and f_t are the lambda- and Q-partials of the
/// augmentation polynomial restricted to (lambda,Q) = (1,1).
AlexReport alexander_from_augpoly(const AugPoly& aug);

/// The two restricted partials used by the augmentation-polynomial route.
std::pair<RatFunc, RatFunc> augpoly_derivatives(const AugPoly& aug);

struct AugPolyValidation {
    bool vanishes_on_lambda_line = false;  // aug(lambda, 1, 1) == 0
    bool vanishes_on_mu_line = false;      // aug(1, mu, 1) == 0
    bool mu_partial_vanishes = false;      // d_mu aug |_(lambda,Q)=(1,1) == 0
    bool pass() const { return vanishes_on_lambda_line && vanishes_on_mu_line && mu_partial_vanishes; }
};

/// The three exact identities every augmentation polynomial satisfies.
AugPolyValidation validate_augpoly(const AugPoly& aug);

/// Change of framing: mu -> lambda^k * mu.
MultiPoly framing_transform(const MultiPoly& p, int k);

/// Change of splitting: lambda -> lambda*Q^l, mu -> mu*Q^m.
MultiPoly splitting_transform(const MultiPoly& p, int l, int m);

/// True iff both restricted partials vanish identically, so formula (1.2)
/// is inapplicable and a different branch of the variety is required.
bool detect_degenerate_branch(const AugPoly& aug);

} // namespace kcha

#endif
