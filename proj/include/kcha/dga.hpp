#ifndef KCHA_DGA_HPP
#define KCHA_DGA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcha/mpoly.hpp"
#include "kcha/symtab.hpp"

namespace kcha {

struct Generator {
    std::string name;
    int degree = 0;  // 0, 1 or 2
};

/// Knot-contact-homology presentation: generators with degrees plus the
/// differentials of the degree-1 (and optionally degree-2) generators,
/// stored as commutative polynomials in ring and chord variables.
struct DGA {
    std::string name;
    std::vector<Generator> generators;                 // declaration order
    std::map<std::string, MultiPoly> differentials;    // generator -> boundary
    SymTabPtr symtab;                                  // ring vars + all generators
    std::optional<MultiPoly> aug_metadata;             // known augmentation polynomial

    std::vector<std::string> chords_of_degree(int d) const {
        std::vector<std::string> out;
        for (const auto& g : generators)
            if (g.degree == d) out.push_back(g.name);
        return out;
    }
    int degree_of(const std::string& gen) const;
    bool has_degree2_differentials() const {
        for (const auto& g : generators)
            if (g.degree == 2 && differentials.count(g.name)) return true;
        return false;
    }
};

/// Parses and validates a DGA JSON document:
/// {"name": str, "generators": [{"name": str, "degree": int}, ...],
///  "differentials": {gen: exprstring, ...}}
DGA parse_dga(const std::string& document);

/// Checks every structural invariant; throws ValidationError naming the
/// offending generator.
void dga_validate(const DGA& dga);

/// Built-in examples; knows "unknot" and "rh_trefoil".
DGA builtin_dga(const std::string& name);

/// The byte-stable JSON document of a built-in.
const std::string& builtin_dga_document(const std::string& name);

std::string render_dga(const DGA& dga);

} // namespace kcha

#endif
