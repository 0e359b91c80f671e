#ifndef KCHA_ORACLE_HPP
#define KCHA_ORACLE_HPP

#include <vector>

#include "kcha/extract.hpp"
#include "kcha/matrix.hpp"

namespace kcha {

/// Braid word on n strands; letters are nonzero integers i with |i| <= n-1,
/// negative for inverse generators.
struct BraidWord {
    int strands = 1;
    std::vector<int> word;
};

void validate_braid(const BraidWord& b);

/// True iff the closure of the braid is a knot (induced permutation is a
/// single cycle).
bool closure_is_knot(const BraidWord& b);

/// Product of the standard (n-1)x(n-1) reduced Burau matrices of the
/// letters; identity for the empty word. Requires n >= 2.
Matrix<RatFunc> reduced_burau(const BraidWord& b);

/// Classical oracle: Delta(mu) = det(1 - rho(b)) * (1-mu)/(1-mu^n) up to
/// units, canonicalized by normalize_alexander.
AlexReport alexander_from_braid(const BraidWord& b);

} // namespace kcha

#endif
