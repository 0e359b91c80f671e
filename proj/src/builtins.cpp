#include <string>

#include "kcha/dga.hpp"
#include "kcha/errors.hpp"

namespace kcha {

// Built-in documents are byte-stable: the copies under data/ must match
// these strings exactly (checked by the test suite).

static const std::string kTrefoilDoc = R"({
  "name": "rh_trefoil",
  "generators": [
    {"name": "a12", "degree": 0},
    {"name": "a21", "degree": 0},
    {"name": "b12", "degree": 1},
    {"name": "b21", "degree": 1},
    {"name": "c11", "degree": 1},
    {"name": "c12", "degree": 1},
    {"name": "c21", "degree": 1},
    {"name": "c22", "degree": 1},
    {"name": "e11", "degree": 2},
    {"name": "e12", "degree": 2},
    {"name": "e21", "degree": 2},
    {"name": "e22", "degree": 2}
  ],
  "differentials": {
    "b12": "lambda^-1*mu^3*a12 - a21",
    "b21": "-a12 + lambda*mu^-3*a21",
    "c11": "lambda*mu^-2 - lambda*mu^-3 - (2*Q - mu)*a12 - Q*a12^2*a21",
    "c12": "Q - mu + mu*a12 + Q*a12*a21",
    "c21": "Q - mu + lambda*mu^-2*a21 + Q*a12*a21",
    "c22": "mu - 1 - Q*a21 + mu*a12*a21"
  },
  "augmentation_polynomial": "lambda^2*(mu - 1) + lambda*(mu^4 - mu^3*Q + 2*mu^2*Q^2 - 2*mu^2*Q - mu*Q^2 + Q^2) + mu^3*Q^4 - mu^4*Q^3"
}
)";

static const std::string kUnknotDoc = R"({
  "name": "unknot",
  "generators": [
    {"name": "b11", "degree": 1},
    {"name": "e11", "degree": 2}
  ],
  "differentials": {
    "b11": "1 - lambda - mu + lambda*mu*Q"
  },
  "augmentation_polynomial": "1 - lambda - mu + lambda*mu*Q"
}
)";

const std::string& builtin_dga_document(const std::string& name) {
    if (name == "rh_trefoil") return kTrefoilDoc;
    if (name == "unknot") return kUnknotDoc;
    throw ValidationError("unknown built-in DGA '" + name + "' (known: unknot, rh_trefoil)");
}

DGA builtin_dga(const std::string& name) {
    return parse_dga(builtin_dga_document(name));
}

} // namespace kcha
