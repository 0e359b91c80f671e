#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using std::string;

namespace {

struct RunResult {
    int exit_code;
    string stdout_text;
};

string temp_path(const string& name) { return "/tmp/kcha_test_" + name; }

void write_file(const string& path, const string& content) {
    std::ofstream f(path, std::ios::binary);
    REQUIRE(f.good());
    f << content;
}

RunResult run_cli(const string& args) {
    string out_file = temp_path("stdout.json");
    string cmd = string(KCHA_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.stdout_text = buf.str();
    return r;
}

} // namespace

TEST_CASE("alex-dga on the built-in trefoil") {
    RunResult r = run_cli("alex-dga --input rh_trefoil --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"delta\":\"mu^2 - mu + 1\"") != string::npos);
}

TEST_CASE("alex-dga with the published family supplied") {
    write_file(temp_path("fam.json"),
               R"json({"branch": "M", "values": {"a12": "(mu-1)/mu^2", "a21": "mu*(mu-1)"}})json");
    RunResult r = run_cli("alex-dga --input rh_trefoil --aug " + temp_path("fam.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("mu^2 - mu + 1") != string::npos);
}

TEST_CASE("alex-dga with a corrupted family exits 2 with a report") {
    write_file(temp_path("bad_fam.json"),
               R"json({"branch": "M", "values": {"a12": "(mu-1)/mu^2", "a21": "mu"}})json");
    RunResult r = run_cli("alex-dga --input rh_trefoil --aug " + temp_path("bad_fam.json"));
    CHECK(r.exit_code == 2);
}

TEST_CASE("alex-aug on the trefoil polynomial file") {
    write_file(temp_path("aug.json"),
               R"json({"name": "rh_trefoil", "polynomial": "lambda^2*(mu - 1) + lambda*(mu^4 - mu^3*Q + 2*mu^2*Q^2 - 2*mu^2*Q - mu*Q^2 + Q^2) + mu^3*Q^4 - mu^4*Q^3"})json");
    RunResult r = run_cli("alex-aug --input " + temp_path("aug.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"delta\":\"mu^2 - mu + 1\"") != string::npos);
}

TEST_CASE("alex-aug on a degenerate polynomial exits 3") {
    write_file(temp_path("degen.json"),
               R"json({"name": "degenerate", "polynomial": "(lambda - 1)^2*(mu - 1) + (Q - 1)^2*mu"})json");
    RunResult r = run_cli("alex-aug --input " + temp_path("degen.json"));
    CHECK(r.exit_code == 3);
}

TEST_CASE("check asserts three-route agreement") {
    for (const char* knot : {"rh_trefoil", "unknot"}) {
        RunResult r = run_cli(string("check --knot ") + knot + " --json");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("\"agree\":true") != string::npos);
    }
}

TEST_CASE("identical inputs produce byte-identical output") {
    RunResult a = run_cli("check --knot rh_trefoil --json");
    RunResult b = run_cli("check --knot rh_trefoil --json");
    CHECK(a.stdout_text == b.stdout_text);
    RunResult c = run_cli("alex-dga --input rh_trefoil");
    RunResult d = run_cli("alex-dga --input rh_trefoil");
    CHECK(c.stdout_text == d.stdout_text);
}

TEST_CASE("groebner subcommand on the toy ideal") {
    write_file(temp_path("ideal.json"),
               R"json({"variables": ["x", "y"], "generators": ["x^2 + y^2 - 1", "x - y"], "order": "lex"})json");
    RunResult r = run_cli("groebner --input " + temp_path("ideal.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("x - y") != string::npos);
    CHECK(r.stdout_text.find("y^2 - 1/2") != string::npos);
}

TEST_CASE("groebner timeout exits 4") {
    write_file(temp_path("hard.json"),
               R"json({"variables": ["x", "y", "z"], "generators": ["x^3*y - z", "y^3*z - x", "z^3*x - y"], "order": "lex"})json");
    RunResult r = run_cli("groebner --input " + temp_path("hard.json") + " --timeout 0.0");
    CHECK(r.exit_code == 4);
}

TEST_CASE("augpoly with reference reports the divisibility verdict") {
    write_file(temp_path("ref.json"),
               R"json({"name": "rh_trefoil", "polynomial": "lambda^2*(mu - 1) + lambda*(mu^4 - mu^3*Q + 2*mu^2*Q^2 - 2*mu^2*Q - mu*Q^2 + Q^2) + mu^3*Q^4 - mu^4*Q^3"})json");
    RunResult r = run_cli("augpoly --input rh_trefoil --reference-aug " + temp_path("ref.json") +
                          " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"divisible\":true") != string::npos);
    CHECK(r.stdout_text.find("\"quotient_total_degree\":0") != string::npos);
}

TEST_CASE("novikov subcommand reports all verdicts") {
    write_file(temp_path("nov.json"), R"json({"psiF": [[1]], "psiC": [[1]], "eta": [[1]], "d0": [[2]]})json");
    RunResult r = run_cli("novikov --input " + temp_path("nov.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"factorization_check\":true") != string::npos);
    CHECK(r.stdout_text.find("\"det_tr_identity\":true") != string::npos);
    CHECK(r.stdout_text.find("\"delta\":\"-mu + 2\"") != string::npos);
}

TEST_CASE("malformed matrix file exits 2") {
    write_file(temp_path("badnov.json"), R"json({"psiF": [[1, 2]], "psiC": [[1]], "eta": [[1]], "d0": [[2]]})json");
    RunResult r = run_cli("novikov --input " + temp_path("badnov.json"));
    CHECK(r.exit_code == 2);
    write_file(temp_path("badjson.json"), "{");
    CHECK(run_cli("novikov --input " + temp_path("badjson.json")).exit_code == 2);
}

TEST_CASE("burau subcommand") {
    write_file(temp_path("braid.json"), R"json({"strands": 2, "word": [-1, -1, -1]})json");
    RunResult r = run_cli("burau --input " + temp_path("braid.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("mu^2 - mu + 1") != string::npos);

    write_file(temp_path("link.json"), R"json({"strands": 2, "word": [1, 1]})json");
    CHECK(run_cli("burau --input " + temp_path("link.json")).exit_code == 3);
}

TEST_CASE("output lands in the requested file") {
    string out = temp_path("delta_out.json");
    std::remove(out.c_str());
    RunResult r = run_cli("burau --input " + temp_path("braid.json") + " --output " + out);
    CHECK(r.exit_code == 0);
    std::ifstream f(out);
    CHECK(f.good());
}

TEST_CASE("groebner subcommand with an elimination order") {
    write_file(temp_path("elim.json"),
               R"json({"variables": ["x", "y", "z"], "generators": ["x - y^2", "y - z"], "order": {"eliminate": ["y"]}})json");
    RunResult r = run_cli("groebner --input " + temp_path("elim.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("elimination_ideal") != string::npos);
    CHECK(r.stdout_text.find("-x + z^2") != string::npos);
}

TEST_CASE("novikov subcommand reports orbit zeta when orbits are supplied") {
    write_file(temp_path("nov_orbits.json"),
               R"json({"psiF": [[1]], "psiC": [[1]], "eta": [[1]], "d0": [[2]], "orbits": [[1, 1, 1], [-1, 2, 4]]})json");
    RunResult r = run_cli("novikov --input " + temp_path("nov_orbits.json") + " --json");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("zeta_from_orbits") != string::npos);
}
