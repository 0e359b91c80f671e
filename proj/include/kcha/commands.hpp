#ifndef KCHA_COMMANDS_HPP
#define KCHA_COMMANDS_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "kcha/augment.hpp"
#include "kcha/dga.hpp"
#include "kcha/extract.hpp"
#include "kcha/novikov.hpp"
#include "kcha/oracle.hpp"

namespace kcha {

using json = nlohmann::json;

// Document parsers for the wire formats.
AugFamily parse_augfamily_doc(const std::string& doc);
AugPoly parse_augpoly_doc(const std::string& doc);
NovikovData parse_novikov_doc(const std::string& doc, OrbitData* orbits = nullptr);
BraidWord parse_braid_doc(const std::string& doc);

json to_json(const AlexReport& report);
json to_json(const VerifyReport& report);

/// End-to-end F-route: solve (or verify) the branch-M augmentation family,
/// take usable cycles, recover one Alexander report per cycle, and require
/// pairwise agreement.
json run_alex_dga(const DGA& dga, const std::optional<AugFamily>& supplied);

/// Augmentation-polynomial route, with validation and
/// degenerate-branch detection.
json run_alex_aug(const AugPoly& aug);

/// Reduced Groebner basis (and elimination ideal) of an ideal document.
json run_groebner_cmd(const std::string& doc, double timeout_seconds);

/// Elimination candidate for the augmentation polynomial, with an optional
/// divisibility verdict against a reference polynomial.
json run_augpoly_cmd(const DGA& dga, const std::optional<AugPoly>& reference,
                     double timeout_seconds);

/// Novikov determinant plus all identity verdicts.
json run_novikov_cmd(const std::string& doc, int order);

json run_burau_cmd(const BraidWord& braid);

/// Three-route agreement check for a built-in knot.
json run_check(const std::string& knot);

} // namespace kcha

#endif
