#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "support/json_schema.hpp"
#include "triplecover/cli_app.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = triplecover::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

testsupport::SchemaValidator& validator() {
    static testsupport::SchemaValidator instance = [] {
        std::ifstream file(TRIPLECOVER_SCHEMA_PATH);
        REQUIRE_MESSAGE(file.good(), "schema file must exist at " TRIPLECOVER_SCHEMA_PATH);
        json schema;
        file >> schema;
        return testsupport::SchemaValidator(std::move(schema));
    }();
    return instance;
}

// Parses, validates against the shipped schema and checks the byte round trip.
json checked_report(const std::string& text) {
    const json report = json::parse(text);
    const std::string problem = validator().validate(report);
    CHECK_MESSAGE(problem.empty(), problem);
    return report;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("analyze emits the worked profile as JSON") {
    const CliResult res = run_cli({"analyze", "--dim", "3", "--degree", "2", "--json"});
    CHECK(res.exit_code == 0);
    const json report = checked_report(res.out);

    CHECK(report["command"] == "analyze");
    CHECK(report["status"] == "ok");
    CHECK(report["results"]["splitting"]["a1"] == 4);
    CHECK(report["results"]["splitting"]["a2"] == 8);
    CHECK(report["results"]["generators"] == json({{"1", 5}, {"2", 1}}));
    CHECK(report["results"]["n0"]["1"] == "Fails");
    CHECK(report["results"]["n0"]["2"] == "Holds");

    // Every table names the statement it instantiates.
    const auto& tags = report["provenance"];
    const auto has = [&](const std::string& tag) {
        for (const json& t : tags) {
            if (t == tag) return true;
        }
        return false;
    };
    CHECK(has("Prop 2.4 (1.1)"));
    CHECK(has("Theorem 2.6"));
    CHECK(has("Theorem 2.9"));
    CHECK(has("Theorem 3.1 (2)"));
}

TEST_CASE("analyze text carries the same numbers as the JSON") {
    const CliResult text = run_cli({"analyze", "--dim", "4", "--degree", "3"});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("degree 3: 3") != std::string::npos);
    CHECK(text.out.find("degree 5: 2") != std::string::npos);
    CHECK(text.out.find("a1 = 7") != std::string::npos);

    const CliResult machine = run_cli({"analyze", "--dim", "4", "--degree", "3", "--json"});
    const json report = checked_report(machine.out);
    CHECK(report["results"]["generators"] == json({{"1", 7}, {"3", 3}, {"5", 2}}));
    CHECK(report["results"]["splitting"]["a1"] == 7);
}

TEST_CASE("analyze rejects parity-invalid input with the theorem message") {
    const CliResult res = run_cli({"analyze", "--dim", "3", "--degree", "3", "--json"});
    CHECK(res.exit_code == 2);
    const json report = checked_report(res.out);
    CHECK(report["status"] == "error");
    const std::string error = report["results"]["error"].get<std::string>();
    CHECK(error.find("Theorem 3.1: r must be even") != std::string::npos);
}

TEST_CASE("classify covers the admissible and rejected targets") {
    const CliResult p4 = run_cli({"classify", "--target", "pm:4", "--json"});
    CHECK(p4.exit_code == 0);
    const json jp4 = checked_report(p4.out);
    CHECK(jp4["results"]["allowed"] == true);
    CHECK(jp4["results"]["L"] == json({{"O", 3}}));
    CHECK(jp4["results"]["pushforward"] ==
          json::array({{{"O", 0}}, {{"O", -3}}, {{"O", -6}}}));
    CHECK(jp4["results"]["example"]["branch_class"] == json({{"O", 9}}));

    const CliResult scroll = run_cli({"classify", "--target", "scroll:1,1,2", "--json"});
    CHECK(scroll.exit_code == 0);
    const json js = checked_report(scroll.out);
    CHECK(js["results"]["L"] == json({{"H", 2}, {"F", -1}}));
    CHECK(js["results"]["example"]["branch_class"] == json({{"H", 6}, {"F", -3}}));
    CHECK(js["results"]["example"].contains("note"));

    const CliResult veronese = run_cli({"classify", "--target", "veronese", "--json"});
    CHECK(veronese.exit_code == 2);
    const json jv = checked_report(veronese.out);
    CHECK(jv["results"]["allowed"] == false);

    const CliResult rejected = run_cli({"classify", "--target", "pm:3", "--json"});
    CHECK(rejected.exit_code == 2);

    const CliResult malformed = run_cli({"classify", "--target", "torus:3"});
    CHECK(malformed.exit_code == 1);
    CHECK(malformed.err.find("usage") != std::string::npos);
}

TEST_CASE("verify certifies a grid and reports through the schema") {
    const CliResult res =
        run_cli({"verify", "--dim", "3", "--degree", "2", "--max-total", "6", "--json"});
    CHECK(res.exit_code == 0);
    const json report = checked_report(res.out);
    CHECK(report["results"]["all_match"] == true);
    CHECK(report["results"]["genus"]["riemann_hurwitz"] == 10);
    CHECK(report["results"]["cover"]["branch_degree"] == 12);
    CHECK(report["results"]["grid"].size() == 9);
    for (const json& row : report["results"]["grid"]) {
        CHECK(row["match"] == true);
        CHECK(row["oracle_rank"].is_number_integer());
    }
}

TEST_CASE("verify rejects parity-invalid input") {
    const CliResult res = run_cli({"verify", "--dim", "3", "--degree", "1", "--json"});
    CHECK(res.exit_code == 2);
    const json report = checked_report(res.out);
    CHECK(report["status"] == "error");
}

TEST_CASE("n0 statuses with provenance") {
    const CliResult unknown =
        run_cli({"n0", "--dim", "4", "--degree", "2", "--power", "4", "--json"});
    CHECK(unknown.exit_code == 0);
    const json ju = checked_report(unknown.out);
    CHECK(ju["results"]["n0"] == "Unknown");
    CHECK(ju["results"]["provenance"] == "Question 2.14");
    CHECK(ju["results"].contains("note"));

    const CliResult fails =
        run_cli({"n0", "--dim", "3", "--degree", "2", "--power", "1", "--json"});
    CHECK(checked_report(fails.out)["results"]["n0"] == "Fails");

    const CliResult holds =
        run_cli({"n0", "--dim", "4", "--degree", "1", "--power", "3", "--json"});
    const json jh = checked_report(holds.out);
    CHECK(jh["results"]["n0"] == "Holds");
    CHECK(jh["results"]["provenance"] == "Theorem 2.13 (1)");
}

TEST_CASE("repeated invocations emit identical bytes") {
    const std::vector<std::string> args = {"verify", "--dim",       "3",
                                           "--degree", "2",         "--max-total",
                                           "6",       "--json"};
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("reports round trip byte-for-byte through the serializer") {
    const CliResult res = run_cli({"analyze", "--dim", "3", "--degree", "2", "--json"});
    checked_report(res.out);
    CHECK(nlohmann::ordered_json::parse(res.out).dump(2) + "\n" == res.out);
}

TEST_CASE("--out writes the JSON report verbatim") {
    const std::string path = "cli_out_report.json";
    const CliResult res =
        run_cli({"n0", "--dim", "3", "--degree", "2", "--power", "2", "--json", "--out", path});
    CHECK(res.exit_code == 0);
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == res.out);
    file.close();
    std::remove(path.c_str());
}

TEST_CASE("golden text reports") {
    const CliResult n0 = run_cli({"n0", "--dim", "4", "--degree", "2", "--power", "4"});
    CHECK(n0.out ==
          "n0: K_X^4 with m = 4, r = 2: Unknown        [Question 2.14]\n"
          "  Question 2.14: whether K_X^n satisfies N0 for (m+2)/2 <= n <= m (m even, r > 1) "
          "is open; the tool reports Unknown rather than guessing\n");

    const CliResult q3 = run_cli({"classify", "--target", "quadric:3"});
    CHECK(q3.out ==
          "classify: Q^3  (dimension 3, degree 2)\n"
          "  allowed        [Theorem 3.3 (3): smooth quadric hypersurface of odd dimension]\n"
          "  L = O(2)        [(3.3.2)]\n"
          "  pushforward of O_X: O + O(-2) + O(-4)        [(3.3.1)]\n"
          "  complete canonical series: yes        [Theorem 3.3]\n"
          "  pluriregular: yes        [Theorem 3.3]\n"
          "  cyclic example        [Prop 3.4 b)]\n"
          "    branch class: O(6) (= 3L)\n"
          "    K_X = pullback of O(1): yes\n"
          "    h0(K_X) = 5\n"
          "    ample K_X assumed\n");
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli({}).exit_code == 1);
    CHECK(run_cli({"analyze"}).exit_code == 1);                       // missing required flags
    CHECK(run_cli({"analyze", "--dim", "3"}).exit_code == 1);         // missing degree
    CHECK(run_cli({"frobnicate"}).exit_code == 1);
    CHECK(run_cli({"n0", "--dim", "4", "--degree", "2", "--power", "0"}).exit_code == 1);
    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_SUITE_END();
