#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kcha/commands.hpp"
#include "kcha/errors.hpp"

namespace {

using kcha::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw kcha::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// alex-dga and augpoly accept either a file path or a built-in DGA name.
kcha::DGA load_dga(const std::string& input) {
    if (input == "unknot" || input == "rh_trefoil") {
        std::ifstream probe(input);
        if (!probe) return kcha::builtin_dga(input);
    }
    return kcha::parse_dga(read_file(input));
}

void emit(const json& out, const std::string& output_path, bool compact) {
    std::string text = compact ? out.dump() : out.dump(2);
    text += "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) throw kcha::ValidationError("cannot open output file '" + output_path + "'");
        f << text;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Alexander polynomials from knot contact homology data"};
    app.require_subcommand(1);

    std::string input, aug_path, reference_path, output;
    std::string knot = "rh_trefoil";
    int order = 12;
    double timeout = 120.0;
    bool compact = false;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input, "input file")->required();
        cmd->add_option("--output", output, "write JSON here instead of stdout");
        cmd->add_flag("--json", compact, "compact single-line JSON");
        cmd->add_option("--timeout", timeout, "Groebner time budget in seconds");
        cmd->add_option("--order", order, "series truncation order");
    };

    CLI::App* alex_dga = app.add_subcommand("alex-dga", "Alexander polynomial from a DGA (F-route)");
    add_common(alex_dga, true);
    alex_dga->add_option("--aug", aug_path, "augmentation family file (otherwise solved)");

    CLI::App* alex_aug = app.add_subcommand("alex-aug", "Alexander polynomial from an augmentation polynomial");
    add_common(alex_aug, true);

    CLI::App* groebner = app.add_subcommand("groebner", "reduced Groebner basis of an ideal");
    add_common(groebner, true);

    CLI::App* augpoly = app.add_subcommand("augpoly", "augmentation polynomial candidate by elimination");
    add_common(augpoly, true);
    augpoly->add_option("--reference-aug", reference_path, "reference polynomial for the divisibility verdict");

    CLI::App* novikov = app.add_subcommand("novikov", "Novikov determinant and identity checks");
    add_common(novikov, true);

    CLI::App* burau = app.add_subcommand("burau", "Alexander polynomial from a braid word");
    add_common(burau, true);

    CLI::App* check = app.add_subcommand("check", "three-route agreement for a built-in knot");
    add_common(check, false);
    check->add_option("--knot", knot, "built-in knot name (unknot, rh_trefoil)");

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        if (alex_dga->parsed()) {
            std::optional<kcha::AugFamily> fam;
            if (!aug_path.empty()) fam = kcha::parse_augfamily_doc(read_file(aug_path));
            out = kcha::run_alex_dga(load_dga(input), fam);
        } else if (alex_aug->parsed()) {
            out = kcha::run_alex_aug(kcha::parse_augpoly_doc(read_file(input)));
        } else if (groebner->parsed()) {
            out = kcha::run_groebner_cmd(read_file(input), timeout);
        } else if (augpoly->parsed()) {
            std::optional<kcha::AugPoly> reference;
            if (!reference_path.empty())
                reference = kcha::parse_augpoly_doc(read_file(reference_path));
            out = kcha::run_augpoly_cmd(load_dga(input), reference, timeout);
        } else if (novikov->parsed()) {
            out = kcha::run_novikov_cmd(read_file(input), order);
        } else if (burau->parsed()) {
            out = kcha::run_burau_cmd(kcha::parse_braid_doc(read_file(input)));
        } else if (check->parsed()) {
            out = kcha::run_check(knot);
        }
        emit(out, output, compact);
        return 0;
    } catch (const kcha::TimeoutError& e) {
        std::cerr << "error (budget): " << e.what() << "\n";
        return 4;
    } catch (const kcha::InapplicableError& e) {
        std::cerr << "error (inapplicable): " << e.what() << "\n";
        return 3;
    } catch (const kcha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
