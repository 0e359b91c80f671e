#include "kcha/dga.hpp"

#include <json.hpp>

#include <cctype>

#include "kcha/errors.hpp"
#include "kcha/parser.hpp"

namespace kcha {

using nlohmann::json;

int DGA::degree_of(const std::string& gen) const {
    for (const auto& g : generators)
        if (g.name == gen) return g.degree;
    throw ValidationError("unknown generator '" + gen + "'");
}

static bool valid_identifier(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return s != "lambda" && s != "mu" && s != "Q";
}

void dga_validate(const DGA& dga) {
    std::map<std::string, int> degree;
    for (const auto& g : dga.generators) {
        if (!valid_identifier(g.name))
            throw ValidationError("generator '" + g.name + "': invalid identifier");
        if (g.degree < 0 || g.degree > 2)
            throw ValidationError("generator '" + g.name + "': degree must be 0, 1 or 2");
        if (!degree.emplace(g.name, g.degree).second)
            throw ValidationError("generator '" + g.name + "': duplicate name");
    }
    for (const auto& [gen, diff] : dga.differentials) {
        auto it = degree.find(gen);
        if (it == degree.end())
            throw ValidationError("differential on undeclared generator '" + gen + "'");
        if (it->second == 0)
            throw ValidationError("generator '" + gen + "': degree-0 generators have no differential");
        const int max_chord_degree = it->second - 1;
        for (const auto& [e, c] : diff.terms()) {
            for (int i = SymTab::kRingVars; i < dga.symtab->size(); ++i) {
                if (e[static_cast<std::size_t>(i)] == 0) continue;
                const std::string& chord = dga.symtab->name(i);
                if (degree.at(chord) > max_chord_degree)
                    throw ValidationError("generator '" + gen + "': differential uses chord '" + chord +
                                          "' of degree " + std::to_string(degree.at(chord)) +
                                          " > " + std::to_string(max_chord_degree));
            }
        }
    }
    for (const auto& g : dga.generators) {
        if (g.degree == 1 && !dga.differentials.count(g.name))
            throw ValidationError("generator '" + g.name + "': missing degree-1 differential");
    }
    if (dga.aug_metadata && dga.aug_metadata->involves_chords())
        throw ValidationError("augmentation_polynomial metadata must involve ring variables only");
}

DGA parse_dga(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed DGA document: ") + e.what());
    }
    DGA dga;
    try {
        dga.name = doc.at("name").get<std::string>();
        std::vector<std::string> chord_names;
        for (const auto& g : doc.at("generators")) {
            Generator gen;
            gen.name = g.at("name").get<std::string>();
            gen.degree = g.at("degree").get<int>();
            if (!valid_identifier(gen.name))
                throw ValidationError("generator '" + gen.name + "': invalid identifier");
            dga.generators.push_back(gen);
            chord_names.push_back(gen.name);
        }
        dga.symtab = SymTab::make(chord_names);
        if (doc.contains("differentials")) {
            for (const auto& [gen, expr] : doc.at("differentials").items()) {
                try {
                    dga.differentials.emplace(gen, parse_expr(expr.get<std::string>(), dga.symtab));
                } catch (const ParseError& e) {
                    throw ParseError("differential of '" + gen + "': " + e.what());
                }
            }
        }
        if (doc.contains("augmentation_polynomial"))
            dga.aug_metadata = parse_expr(doc.at("augmentation_polynomial").get<std::string>(), dga.symtab);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed DGA document: ") + e.what());
    }
    dga_validate(dga);
    return dga;
}

std::string render_dga(const DGA& dga) {
    json doc;
    doc["name"] = dga.name;
    doc["generators"] = json::array();
    for (const auto& g : dga.generators)
        doc["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    json diffs = json::object();
    for (const auto& [gen, diff] : dga.differentials) diffs[gen] = render(diff);
    doc["differentials"] = diffs;
    if (dga.aug_metadata) doc["augmentation_polynomial"] = render(*dga.aug_metadata);
    return doc.dump(2);
}

} // namespace kcha
