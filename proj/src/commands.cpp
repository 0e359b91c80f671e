#include "kcha/commands.hpp"

#include "kcha/errors.hpp"
#include "kcha/groebner.hpp"
#include "kcha/parser.hpp"

namespace kcha {

namespace {

json parse_json(const std::string& doc, const char* what) {
    try {
        return json::parse(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ") + what + " document: " + e.what());
    }
}

Matrix<Rational> parse_int_matrix(const json& rows, int force_rows, int force_cols) {
    if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    if (r == 0) r = force_rows >= 0 ? force_rows : 0;
    if (c == 0 && force_cols >= 0) c = force_cols;
    Matrix<Rational> m(r, c);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != c && !(row.empty() && c == 0))
            throw ParseError("matrix rows have inconsistent lengths");
        for (int j = 0; j < static_cast<int>(row.size()); ++j)
            m(i, j) = Rational(row[static_cast<std::size_t>(j)].get<long>());
    }
    return m;
}

} // namespace

AugFamily parse_augfamily_doc(const std::string& doc) {
    json j = parse_json(doc, "augmentation family");
    AugFamily fam;
    try {
        fam.branch = Branch::from_string(j.at("branch").get<std::string>());
        for (const auto& [chord, value] : j.at("values").items())
            fam.values.emplace(chord, parse_ratfunc(value.get<std::string>(), fam.branch.parameter()));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed augmentation family document: ") + e.what());
    }
    return fam;
}

AugPoly parse_augpoly_doc(const std::string& doc) {
    json j = parse_json(doc, "augmentation polynomial");
    AugPoly aug;
    try {
        aug.name = j.value("name", "");
        aug.poly = parse_expr(j.at("polynomial").get<std::string>(), SymTab::make({}));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed augmentation polynomial document: ") + e.what());
    }
    if (aug.poly.is_zero()) throw ValidationError("augmentation polynomial must be nonzero");
    return aug;
}

NovikovData parse_novikov_doc(const std::string& doc, OrbitData* orbits) {
    json j = parse_json(doc, "Novikov data");
    NovikovData nov;
    try {
        nov.psiF = parse_int_matrix(j.at("psiF"), -1, -1);
        nov.d0 = parse_int_matrix(j.at("d0"), -1, -1);
        const int r = nov.psiF.rows(), s = nov.d0.rows();
        nov.psiC = parse_int_matrix(j.at("psiC"), r, s);
        nov.eta = parse_int_matrix(j.at("eta"), s, r);
        if (orbits && j.contains("orbits")) {
            for (const auto& row : j.at("orbits")) {
                if (!row.is_array() || row.size() != 3)
                    throw ParseError("orbit entries must be [sigma, m, d] triples");
                orbits->push_back(Orbit{row[0].get<int>(), row[1].get<int>(), row[2].get<int>()});
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed Novikov data document: ") + e.what());
    }
    validate_novikov(nov);
    return nov;
}

BraidWord parse_braid_doc(const std::string& doc) {
    json j = parse_json(doc, "braid");
    BraidWord b;
    try {
        b.strands = j.at("strands").get<int>();
        for (const auto& x : j.at("word")) b.word.push_back(x.get<int>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed braid document: ") + e.what());
    }
    validate_braid(b);
    return b;
}

json to_json(const AlexReport& report) {
    return json{{"route", report.route},
                {"delta", report.delta.str()},
                {"raw", report.raw.str()},
                {"integrand", {{"num", report.integrand.num().str()}, {"den", report.integrand.den().str()}}},
                {"degree_at_infinity", report.degree_at_infinity}};
}

json to_json(const VerifyReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows)
        rows.push_back(json{{"generator", row.generator}, {"residual", row.residual.str()}, {"ok", row.ok}});
    return json{{"pass", report.pass}, {"residuals", rows}};
}

json run_alex_dga(const DGA& dga, const std::optional<AugFamily>& supplied) {
    json out;
    out["name"] = dga.name;
    out["branch"] = "M";

    AugFamily fam;
    if (supplied) {
        fam = *supplied;
        VerifyReport verify = verify_augmentation(dga, fam);
        out["verification"] = to_json(verify);
        if (!verify.pass)
            throw ValidationError("supplied augmentation family fails verification: " +
                                  to_json(verify).dump());
    } else {
        std::vector<AugFamily> families = solve_augmentation_family(dga, Branch::m());
        if (families.empty())
            throw InapplicableError("no rational augmentation family found on branch M");
        fam = families.front();
        out["families_found"] = families.size();
    }
    json values = json::object();
    for (const auto& [chord, value] : fam.values) values[chord] = value.str();
    out["family"] = values;

    std::vector<Cycle> cycles = find_generating_cycles(dga, fam);
    json cycle_list = json::array();
    std::vector<AlexReport> reports;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const Cycle& c = cycles[i];
        json entry;
        entry["index"] = i;
        entry["usable"] = c.usable;
        json coords = json::object();
        for (const auto& [chord, value] : c.coords) coords[chord] = value.str();
        entry["coordinates"] = coords;
        if (c.usable) {
            AlexReport r = recover_alexander(integrand(c.f_first, c.f_t), "F-route");
            entry["delta"] = r.delta.str();
            reports.push_back(std::move(r));
        }
        cycle_list.push_back(std::move(entry));
    }
    out["cycles"] = cycle_list;
    if (reports.empty()) throw InapplicableError("no usable cycle (every kernel vector has f_x = 0)");
    for (const auto& r : reports) {
        if (r.delta != reports.front().delta)
            throw InapplicableError("disagreement between usable cycles: " + reports.front().delta.str() +
                                    " vs " + r.delta.str());
    }
    out["delta"] = reports.front().delta.str();
    out["reports"] = json::array();
    for (const auto& r : reports) out["reports"].push_back(to_json(r));
    return out;
}

json run_alex_aug(const AugPoly& aug) {
    json out;
    out["name"] = aug.name;
    AugPolyValidation validation = validate_augpoly(aug);
    out["validation"] = json{{"vanishes_on_lambda_line", validation.vanishes_on_lambda_line},
                             {"vanishes_on_mu_line", validation.vanishes_on_mu_line},
                             {"mu_partial_vanishes", validation.mu_partial_vanishes},
                             {"pass", validation.pass()}};
    if (detect_degenerate_branch(aug))
        throw InapplicableError("branch formula inapplicable; a different branch of V_K is required");
    AlexReport report = alexander_from_augpoly(aug);
    out["delta"] = report.delta.str();
    out["report"] = to_json(report);
    return out;
}

json run_groebner_cmd(const std::string& doc, double timeout_seconds) {
    json j = parse_json(doc, "ideal");
    std::vector<std::string> variables;
    std::vector<std::string> generators;
    std::vector<std::string> elim;
    MonomialOrder order = MonomialOrder::lex();
    std::string order_name = "lex";
    try {
        for (const auto& v : j.at("variables")) variables.push_back(v.get<std::string>());
        for (const auto& g : j.at("generators")) generators.push_back(g.get<std::string>());
        if (j.contains("order")) {
            const auto& o = j.at("order");
            if (o.is_string()) {
                order_name = o.get<std::string>();
                if (order_name == "lex") order = MonomialOrder::lex();
                else if (order_name == "grevlex") order = MonomialOrder::grevlex();
                else throw ParseError("unknown order '" + order_name + "'");
            } else if (o.is_object() && o.contains("eliminate")) {
                for (const auto& v : o.at("eliminate")) elim.push_back(v.get<std::string>());
                order_name = "eliminate";
            } else {
                throw ParseError("order must be \"lex\", \"grevlex\" or {\"eliminate\": [...]}");
            }
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed ideal document: ") + e.what());
    }

    std::vector<std::string> chords;
    for (const auto& v : variables)
        if (v != "lambda" && v != "mu" && v != "Q") chords.push_back(v);
    SymTabPtr tab = SymTab::make(chords);
    Ideal ideal{tab, {}, {}};
    for (const auto& v : variables) ideal.vars.push_back(tab->require(v));
    for (const auto& g : generators) {
        MultiPoly p = parse_expr(g, tab);
        if (p.is_zero()) throw ValidationError("ideal generators must be nonzero");
        ideal.generators.push_back(std::move(p));
    }

    json out;
    out["variables"] = variables;
    out["order"] = order_name;
    if (!elim.empty()) {
        out["eliminate"] = elim;
        // Full block-order basis plus the elimination ideal.
        std::vector<int> front, back;
        for (const auto& n : elim) front.push_back(tab->require(n));
        for (int v : ideal.vars)
            if (std::find(front.begin(), front.end(), v) == front.end()) back.push_back(v);
        std::vector<int> order_vars = front;
        order_vars.insert(order_vars.end(), back.begin(), back.end());
        Ideal reordered{tab, order_vars, ideal.generators};
        std::vector<MultiPoly> basis =
            buchberger(reordered, MonomialOrder::block(static_cast<int>(front.size())), timeout_seconds);
        json basis_json = json::array(), elim_json = json::array();
        for (const auto& b : basis) {
            basis_json.push_back(render(b));
            bool free_of_front = true;
            for (int v : front)
                if (b.involves(v)) { free_of_front = false; break; }
            if (free_of_front) elim_json.push_back(render(b));
        }
        out["basis"] = basis_json;
        out["elimination_ideal"] = elim_json;
    } else {
        std::vector<MultiPoly> basis = buchberger(ideal, order, timeout_seconds);
        json basis_json = json::array();
        for (const auto& b : basis) basis_json.push_back(render(b));
        out["basis"] = basis_json;
    }
    return out;
}

json run_augpoly_cmd(const DGA& dga, const std::optional<AugPoly>& reference,
                     double timeout_seconds) {
    AugPolyCandidate candidate = augpoly_from_dga(dga, timeout_seconds);
    json out;
    out["name"] = dga.name;
    out["candidate"] = render(candidate.poly);
    out["principal"] = candidate.principal;
    if (!candidate.warning.empty()) out["warning"] = candidate.warning;

    if (reference) {
        // Transport both polynomials to the plain ring symtab and clear any
        // Laurent monomial from the reference (divisibility up to units).
        SymTabPtr ring = SymTab::make({});
        auto to_ring = [&](const MultiPoly& p) {
            MultiPoly q(ring);
            for (const auto& [e, c] : p.terms()) {
                ExpVec ne(static_cast<std::size_t>(ring->size()), 0);
                for (std::size_t i = 0; i < e.size(); ++i) {
                    if (e[i] == 0) continue;
                    if (static_cast<int>(i) >= SymTab::kRingVars)
                        throw ValidationError("candidate involves chord variables");
                    ne[i] = e[i];
                }
                q.add_term(std::move(ne), c);
            }
            return q;
        };
        MultiPoly cand = to_ring(candidate.poly);
        MultiPoly ref = to_ring(reference->poly);
        int min_l = 0, min_m = 0, min_q = 0;
        for (const auto& [e, c] : ref.terms()) {
            min_l = std::min(min_l, e[SymTab::kLambda]);
            min_m = std::min(min_m, e[SymTab::kMu]);
            min_q = std::min(min_q, e[SymTab::kQ]);
        }
        MultiPoly ref_cleared(ring);
        for (const auto& [e, c] : ref.terms()) {
            ExpVec ne = e;
            ne[SymTab::kLambda] -= min_l;
            ne[SymTab::kMu] -= min_m;
            ne[SymTab::kQ] -= min_q;
            ref_cleared.add_term(std::move(ne), c);
        }
        auto [q, r] = mpoly_divmod(cand, ref_cleared);
        json verdict;
        verdict["divisible"] = r.is_zero();
        if (r.is_zero()) {
            long qdeg = 0;
            for (const auto& [e, c] : q.terms()) {
                long d = 0;
                for (int x : e) d += x;
                qdeg = std::max(qdeg, d);
            }
            verdict["quotient_total_degree"] = qdeg;
            verdict["quotient"] = render(q);
        } else {
            verdict["remainder"] = render(r);
        }
        out["reference"] = reference->name;
        out["divisibility"] = verdict;
    }
    return out;
}

json run_novikov_cmd(const std::string& doc, int order) {
    OrbitData orbits;
    NovikovData nov = parse_novikov_doc(doc, &orbits);
    json out;
    UniPoly det = novikov_determinant(nov);
    out["det"] = det.str();
    out["det_at_0"] = det.eval(Rational(0)).str();
    out["det_d0"] = matrix_det(nov.d0).str();
    out["factorization_check"] = factorization_check(nov);
    UniPoly det_b = det_one_minus_mu_psiF(nov.psiF);
    out["det_tr_identity"] =
        (zeta_from_traces(nov.psiF, order) == TruncSeries::from_polynomial(det_b, order));
    out["series_product_check"] = series_product_check(nov, order);
    out["order"] = order;
    if (!orbits.empty()) out["zeta_from_orbits"] = zeta_from_orbits(orbits, order).str();
    AlexReport report = novikov_alexander(nov);
    out["delta"] = report.delta.str();
    out["report"] = to_json(report);
    return out;
}

json run_burau_cmd(const BraidWord& braid) {
    AlexReport report = alexander_from_braid(braid);
    json out;
    out["strands"] = braid.strands;
    out["word"] = braid.word;
    out["delta"] = report.delta.str();
    out["report"] = to_json(report);
    return out;
}

json run_check(const std::string& knot) {
    DGA dga = builtin_dga(knot);
    json out;
    out["knot"] = knot;

    json f_route = run_alex_dga(dga, std::nullopt);
    std::string delta_f = f_route.at("delta").get<std::string>();

    if (!dga.aug_metadata)
        throw ValidationError("built-in '" + knot + "' carries no augmentation polynomial metadata");
    AugPoly aug{knot, *dga.aug_metadata};
    json aug_route = run_alex_aug(aug);
    std::string delta_aug = aug_route.at("delta").get<std::string>();

    BraidWord braid;
    if (knot == "rh_trefoil") braid = BraidWord{2, {-1, -1, -1}};
    else if (knot == "unknot") braid = BraidWord{1, {}};
    else throw ValidationError("no built-in braid for '" + knot + "'");
    json burau = run_burau_cmd(braid);
    std::string delta_burau = burau.at("delta").get<std::string>();

    out["routes"] = json{{"F-route", delta_f}, {"Aug-route", delta_aug}, {"Burau", delta_burau}};
    bool agree = delta_f == delta_aug && delta_aug == delta_burau;
    out["agree"] = agree;
    out["delta"] = delta_f;
    if (!agree)
        throw InapplicableError("route disagreement for '" + knot + "': " + out["routes"].dump());
    return out;
}

} // namespace kcha
