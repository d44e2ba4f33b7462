#include "triplecover/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include "triplecover/cohomology.hpp"
#include "triplecover/cover_analyzer.hpp"
#include "triplecover/cyclic_oracle.hpp"
#include "triplecover/target_classifier.hpp"

namespace triplecover::cli {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Report envelope
// ---------------------------------------------------------------------------

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> provenance;
    bool ok = true;

    void cite(const std::string& tag) {
        for (const auto& t : provenance) {
            if (t == tag) return;
        }
        provenance.push_back(tag);
    }

    Json to_json() const {
        Json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["provenance"] = provenance;
        j["status"] = ok ? "ok" : "error";
        return j;
    }
};

struct OutputOptions {
    bool json = false;
    std::string out_path;
};

int emit(const Report& report, const OutputOptions& opts, std::ostream& out, std::ostream& err,
         const std::string& text, int exit_code) {
    const std::string json_text = report.to_json().dump(2) + "\n";
    if (opts.json) {
        out << json_text;
    } else {
        out << text;
    }
    if (!opts.out_path.empty()) {
        std::ofstream file(opts.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write report to " << opts.out_path << "\n";
            return kUsageError;
        }
        file << json_text;
    }
    return exit_code;
}

// ---------------------------------------------------------------------------
// Formatting helpers
// ---------------------------------------------------------------------------

Json divisor_json(const TargetSpec& target, const DivisorClass& c) {
    Json j;
    if (target.kind() == TargetKind::Scroll) {
        j["H"] = c.h;
        j["F"] = c.f;
    } else {
        j["O"] = c.h;
    }
    return j;
}

std::string divisor_str(const TargetSpec& target, const DivisorClass& c) {
    if (target.kind() != TargetKind::Scroll) {
        return "O(" + std::to_string(c.h) + ")";
    }
    std::string s;
    if (c.h != 0) {
        if (c.h == 1) s += "H";
        else if (c.h == -1) s += "-H";
        else s += std::to_string(c.h) + "H";
    }
    if (c.f != 0) {
        if (!s.empty()) s += c.f > 0 ? " + " : " - ";
        else if (c.f < 0) s += "-";
        const long long af = c.f > 0 ? c.f : -c.f;
        s += (af == 1 ? "F" : std::to_string(af) + "F");
    }
    return s.empty() ? "0" : s;
}

std::string bundle_str(const TargetSpec& target, const DivisorClass& c) {
    if (target.kind() != TargetKind::Scroll) {
        return "O(" + std::to_string(c.h) + ")";
    }
    return "O(" + divisor_str(target, c) + ")";
}

std::string covers_str(const ImageProfile& p) {
    std::string s;
    s += p.covers_a ? 'A' : '-';
    s += p.covers_b ? 'B' : '-';
    s += p.covers_c ? 'C' : '-';
    return s;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int cmd_analyze(int m, long long r, int max_power, const OutputOptions& opts, std::ostream& out,
                std::ostream& err) {
    Report report;
    report.command = "analyze";
    report.inputs["dim"] = m;
    report.inputs["degree"] = r;

    std::unique_ptr<CoverParams> params;
    try {
        params = std::make_unique<CoverParams>(m, r);
    } catch (const std::domain_error& e) {
        report.inputs["max_power"] = max_power;
        report.ok = false;
        report.results["error"] = e.what();
        report.cite("Theorem 3.1 (1)");
        return emit(report, opts, out, err, std::string("error: ") + e.what() + "\n",
                    kMathRejection);
    }
    const int n_max = max_power > 0 ? max_power : params->m + 2;
    report.inputs["max_power"] = n_max;

    const bool odd = params->m % 2 == 1;
    const std::string splitting_tag = odd ? "Prop 2.4 (1.1)" : "Prop 2.10 (1.1)";
    const std::string blocks_tag = odd ? "Prop 2.4 (2.5)" : "Prop 2.10 (1.1)";
    const std::string images_tag = odd ? "Prop 2.4 (2.5.1)" : "Prop 2.10 (2)";
    const std::string generators_tag = odd ? "Theorem 2.6" : "Theorem 2.11";

    const SplittingType split = splitting(*params);
    Json jsplit;
    jsplit["a1"] = split.a1;
    jsplit["a2"] = split.a2;
    jsplit["pushforward_twists"] = {0, -split.a1, -split.a2};
    jsplit["provenance"] = splitting_tag;
    report.results["splitting"] = jsplit;
    report.cite(splitting_tag);

    Json jblocks = Json::array();
    for (int n = 0; n <= n_max; ++n) {
        const BlockDims b = block_dims(*params, n);
        Json row;
        row["n"] = n;
        row["degA"] = b.deg_a;
        row["dimA"] = b.dim_a;
        row["degB"] = b.deg_b;
        row["dimB"] = b.dim_b;
        row["degC"] = b.deg_c;
        row["dimC"] = b.dim_c;
        row["h0"] = b.h0();
        jblocks.push_back(std::move(row));
    }
    report.results["blocks"] = jblocks;
    report.results["blocks_provenance"] = blocks_tag;
    report.cite(blocks_tag);

    Json jimages = Json::array();
    for (int total = 2; total <= n_max; ++total) {
        for (int s1 = 1; 2 * s1 <= total; ++s1) {
            const ImageProfile p = beta_image(*params, s1, total - s1);
            Json row;
            row["s1"] = p.s1;
            row["s2"] = p.s2;
            row["covers"] = covers_str(p);
            row["image_dim"] = p.image_dim;
            row["codim"] = p.codim;
            jimages.push_back(std::move(row));
        }
    }
    report.results["images"] = jimages;
    report.results["images_provenance"] = images_tag;
    report.cite(images_tag);

    const GeneratorProfile profile = generator_profile(*params);
    Json jgen = Json::object();
    for (const auto& [degree, count] : profile.new_generators) {
        jgen[std::to_string(degree)] = count;
    }
    report.results["generators"] = jgen;
    report.results["generators_provenance"] = generators_tag;
    report.results["generators_degree_1_provenance"] = "Theorem 3.1 (2)";
    report.cite(generators_tag);
    report.cite("Theorem 3.1 (2)");

    Json jn0 = Json::object();
    Json jn0prov = Json::object();
    for (int n = 1; n <= n_max; ++n) {
        const N0Verdict v = n0_status(*params, n);
        jn0[std::to_string(n)] = to_string(v.status);
        jn0prov[std::to_string(n)] = v.provenance;
        report.cite(v.provenance);
    }
    report.results["n0"] = jn0;
    report.results["n0_provenance"] = jn0prov;
    report.results["n0_hypothesis"] = "K_X ample assumed";

    // Text rendering reads the same numbers that went into the JSON payload.
    std::ostringstream text;
    text << "analyze: dimension m = " << m << ", target degree r = " << r
         << ", cover degree 3\n\n";
    text << "splitting of the pushforward of O_X        [" << splitting_tag << "]\n";
    text << "  O + O(-" << split.a1 << ") + O(-" << split.a2 << ")   (a1 = " << split.a1
         << ", a2 = " << split.a2 << ")\n\n";

    text << "blocks of H^0(theta^n), n <= " << n_max << "        [" << blocks_tag << "]\n";
    text << "    n   degA  dimA   degB  dimB   degC  dimC     h0\n";
    for (const auto& row : report.results["blocks"]) {
        text << std::setw(5) << row["n"].get<long long>() << std::setw(7)
             << row["degA"].get<long long>() << std::setw(6) << row["dimA"].get<long long>()
             << std::setw(7) << row["degB"].get<long long>() << std::setw(6)
             << row["dimB"].get<long long>() << std::setw(7) << row["degC"].get<long long>()
             << std::setw(6) << row["dimC"].get<long long>() << std::setw(7)
             << row["h0"].get<long long>() << "\n";
    }

    text << "\nimages of beta(s1, s2), s1 + s2 <= " << n_max << "        [" << images_tag
         << "]\n";
    text << "   s1   s2  covers   image_dim  codim\n";
    for (const auto& row : report.results["images"]) {
        text << std::setw(5) << row["s1"].get<long long>() << std::setw(5)
             << row["s2"].get<long long>() << "  " << std::setw(6)
             << row["covers"].get<std::string>() << std::setw(12)
             << row["image_dim"].get<long long>() << std::setw(7) << row["codim"].get<long long>()
             << "\n";
    }

    text << "\nnew minimal generators of the canonical ring        [" << generators_tag
         << "; degree 1 via Theorem 3.1 (2)]\n";
    for (const auto& [key, value] : report.results["generators"].items()) {
        text << "  degree " << key << ": " << value.get<long long>() << "\n";
    }

    text << "\nN0 status of K_X^n (K_X ample assumed)\n";
    for (const auto& [key, value] : report.results["n0"].items()) {
        text << "  n = " << key << ": " << value.get<std::string>() << "        ["
             << report.results["n0_provenance"][key].get<std::string>() << "]\n";
    }

    return emit(report, opts, out, err, text.str(), kOk);
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

bool parse_target(const std::string& spec, std::unique_ptr<TargetSpec>& target,
                  std::string& parse_error) {
    try {
        if (spec == "veronese") {
            target = std::make_unique<TargetSpec>(TargetSpec::veronese());
            return true;
        }
        const auto colon = spec.find(':');
        const std::string kind = spec.substr(0, colon);
        if (kind == "pm" || kind == "quadric") {
            if (colon == std::string::npos) {
                parse_error = "missing dimension in target '" + spec + "'";
                return false;
            }
            const int m = std::stoi(spec.substr(colon + 1));
            target = std::make_unique<TargetSpec>(kind == "pm" ? TargetSpec::proj_space(m)
                                                               : TargetSpec::quadric(m));
            return true;
        }
        if (kind == "scroll") {
            if (colon == std::string::npos) {
                parse_error = "missing twists in target '" + spec + "'";
                return false;
            }
            std::vector<int> e;
            std::istringstream list(spec.substr(colon + 1));
            std::string item;
            while (std::getline(list, item, ',')) {
                e.push_back(std::stoi(item));
            }
            target = std::make_unique<TargetSpec>(TargetSpec::scroll(std::move(e)));
            return true;
        }
        parse_error = "unknown target kind '" + kind +
                      "' (expected pm:<m>, quadric:<m>, scroll:<e1,e2,...> or veronese)";
        return false;
    } catch (const std::exception& e) {
        parse_error = std::string("malformed target '") + spec + "': " + e.what();
        return false;
    }
}

int cmd_classify(const std::string& target_str, const OutputOptions& opts, std::ostream& out,
                 std::ostream& err) {
    std::unique_ptr<TargetSpec> target;
    std::string parse_error;
    if (!parse_target(target_str, target, parse_error)) {
        err << "error: " << parse_error << "\n";
        err << "usage: classify --target pm:<m> | quadric:<m> | scroll:<e1,e2,...> | veronese\n";
        return kUsageError;
    }

    Report report;
    report.command = "classify";
    report.inputs["target"] = target_str;

    const TargetVerdict verdict = classify(*target);
    report.results["target"] = target->name();
    report.results["dim"] = target->dim();
    report.results["degree"] = target->degree();
    report.results["allowed"] = verdict.allowed;
    report.results["reason"] = verdict.reason;
    report.cite("Theorem 3.3");

    std::ostringstream text;
    text << "classify: " << target->name() << "  (dimension " << target->dim() << ", degree "
         << target->degree() << ")\n";

    if (verdict.allowed) {
        report.results["L"] = divisor_json(*target, *verdict.L);
        Json jpf = Json::array();
        for (const DivisorClass& c : *verdict.pushforward) {
            jpf.push_back(divisor_json(*target, c));
        }
        report.results["pushforward"] = jpf;
        report.results["complete_series"] = verdict.complete_series;
        report.results["pluriregular"] = verdict.pluriregular;
        report.cite("(3.3.1)");
        report.cite("(3.3.2)");

        const CyclicExample ex = cyclic_example(*target);
        Json jex;
        jex["branch_class"] = divisor_json(*target, ex.branch_class);
        if (ex.stated_ramification_class) {
            jex["stated_ramification_class"] =
                divisor_json(*target, *ex.stated_ramification_class);
        }
        jex["canonical_pullback_check"] = ex.canonical_pullback_check;
        jex["h0_KX"] = ex.h0_kx;
        jex["ample_canonical_assumed"] = ex.ample_canonical_assumed;
        if (!ex.note.empty()) {
            jex["note"] = ex.note;
        }
        const std::string example_tag = target->kind() == TargetKind::ProjSpace ? "Prop 3.4 a)"
                                        : target->kind() == TargetKind::Quadric ? "Prop 3.4 b)"
                                                                                : "Prop 3.4 c)";
        jex["provenance"] = example_tag;
        report.results["example"] = jex;
        report.cite(example_tag);

        text << "  allowed        [" << verdict.reason << "]\n";
        text << "  L = " << divisor_str(*target, *verdict.L) << "        [(3.3.2)]\n";
        text << "  pushforward of O_X: O";
        text << " + " << bundle_str(*target, (*verdict.pushforward)[1]);
        text << " + " << bundle_str(*target, (*verdict.pushforward)[2])
             << "        [(3.3.1)]\n";
        text << "  complete canonical series: " << (verdict.complete_series ? "yes" : "no")
             << "        [Theorem 3.3]\n";
        text << "  pluriregular: " << (verdict.pluriregular ? "yes" : "no")
             << "        [Theorem 3.3]\n";
        text << "  cyclic example        [" << example_tag << "]\n";
        text << "    branch class: " << divisor_str(*target, ex.branch_class) << " (= 3L)\n";
        if (ex.stated_ramification_class) {
            text << "    stated ramification class: "
                 << divisor_str(*target, *ex.stated_ramification_class) << " (= L)\n";
        }
        text << "    K_X = pullback of O(1): " << (ex.canonical_pullback_check ? "yes" : "no")
             << "\n";
        text << "    h0(K_X) = " << ex.h0_kx << "\n";
        text << "    ample K_X assumed\n";
        if (!ex.note.empty()) {
            text << "    note: " << ex.note << "\n";
        }
        return emit(report, opts, out, err, text.str(), kOk);
    }

    text << "  rejected        [" << verdict.reason << "]\n";
    return emit(report, opts, out, err, text.str(), kMathRejection);
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(int m, long long r, int max_total, const std::string& coeffs, unsigned long seed,
               const OutputOptions& opts, std::ostream& out, std::ostream& err) {
    Report report;
    report.command = "verify";
    report.inputs["dim"] = m;
    report.inputs["degree"] = r;
    report.inputs["coeffs"] = coeffs;
    report.inputs["seed"] = seed;

    const CoeffMode mode =
        coeffs == "random" ? CoeffMode::SeededRandom : CoeffMode::DistinctRoots;

    std::unique_ptr<OracleCover> cover;
    try {
        cover = std::make_unique<OracleCover>(build_cover(m, r, mode, seed));
    } catch (const std::domain_error& e) {
        report.inputs["max_total"] = max_total;
        report.ok = false;
        report.results["error"] = e.what();
        report.cite("Theorem 3.1 (1)");
        return emit(report, opts, out, err, std::string("error: ") + e.what() + "\n",
                    kMathRejection);
    }
    const int total = max_total > 0 ? max_total : cover->params.m + 3;
    report.inputs["max_total"] = total;

    const SplittingType split = splitting(cover->params);
    Json jcover;
    jcover["branch_degree"] = cover->branch_degree;
    jcover["a1"] = split.a1;
    jcover["a2"] = split.a2;
    jcover["f_squarefree"] = true;
    jcover["provenance"] = "Prop 3.4";
    report.results["cover"] = jcover;
    report.cite("Prop 3.4");

    const GenusCheck genus = genus_check(*cover);
    Json jgenus;
    jgenus["riemann_hurwitz"] = genus.genus_hurwitz;
    jgenus["from_sections"] = genus.genus_sections;
    jgenus["three_mr"] = genus.three_mr;
    jgenus["pass"] = genus.pass;
    jgenus["provenance"] = "oracle";
    report.results["genus"] = jgenus;
    report.cite("oracle");

    std::vector<RankReport> grid;
    try {
        grid = verify_grid(*cover, total);
    } catch (const std::domain_error& e) {
        report.ok = false;
        report.results["error"] = e.what();
        return emit(report, opts, out, err, std::string("error: ") + e.what() + "\n",
                    kUsageError);
    }

    bool all_match = genus.pass;
    Json jgrid = Json::array();
    for (const RankReport& rep : grid) {
        Json row;
        row["s1"] = rep.s1;
        row["s2"] = rep.s2;
        row["oracle_rank"] = rep.oracle_rank;
        row["predicted_dim"] = rep.predicted_dim;
        row["match"] = rep.match;
        jgrid.push_back(std::move(row));
        all_match = all_match && rep.match;
    }
    report.results["grid"] = jgrid;
    report.results["grid_provenance"] = "oracle";
    report.results["all_match"] = all_match;

    std::ostringstream text;
    text << "verify: m = " << m << ", r = " << r << ", branch degree " << cover->branch_degree
         << ", coeffs " << coeffs << "\n";
    text << "  splitting: O + O(-" << split.a1 << ") + O(-" << split.a2
         << ")        [Prop 3.4]\n";
    text << "  genus: " << genus.genus_hurwitz << " (Hurwitz) vs " << genus.genus_sections
         << " (sections), 2g-2 = " << genus.three_mr << " = 3mr: "
         << (genus.pass ? "pass" : "FAIL") << "        [oracle]\n";
    text << "  rank grid (s1 <= s2, s1+s2 <= " << total << ")        [oracle]\n";
    text << "   s1   s2   oracle  predicted  match\n";
    for (const RankReport& rep : grid) {
        text << std::setw(5) << rep.s1 << std::setw(5) << rep.s2 << std::setw(9)
             << rep.oracle_rank << std::setw(11) << rep.predicted_dim << "   "
             << (rep.match ? "yes" : "NO") << "\n";
    }
    text << (all_match ? "all ranks match the closed forms\n"
                       : "MISMATCH between oracle and closed forms\n");

    return emit(report, opts, out, err, text.str(), all_match ? kOk : kOracleMismatch);
}

// ---------------------------------------------------------------------------
// n0
// ---------------------------------------------------------------------------

int cmd_n0(int m, long long r, int power, const OutputOptions& opts, std::ostream& out,
           std::ostream& err) {
    Report report;
    report.command = "n0";
    report.inputs["dim"] = m;
    report.inputs["degree"] = r;
    report.inputs["power"] = power;

    std::unique_ptr<CoverParams> params;
    try {
        params = std::make_unique<CoverParams>(m, r);
    } catch (const std::domain_error& e) {
        report.ok = false;
        report.results["error"] = e.what();
        report.cite("Theorem 3.1 (1)");
        return emit(report, opts, out, err, std::string("error: ") + e.what() + "\n",
                    kMathRejection);
    }

    const N0Verdict verdict = n0_status(*params, power);
    report.results["n0"] = to_string(verdict.status);
    report.results["provenance"] = verdict.provenance;
    report.results["hypothesis"] = "K_X ample assumed";
    if (verdict.status == N0Status::Unknown) {
        report.results["note"] =
            "Question 2.14: whether K_X^n satisfies N0 for (m+2)/2 <= n <= m (m even, r > 1) "
            "is open; the tool reports Unknown rather than guessing";
    }
    report.cite(verdict.provenance);

    std::ostringstream text;
    text << "n0: K_X^" << power << " with m = " << m << ", r = " << r << ": "
         << to_string(verdict.status) << "        [" << verdict.provenance << "]\n";
    if (verdict.status == N0Status::Unknown) {
        text << "  " << report.results["note"].get<std::string>() << "\n";
    }
    return emit(report, opts, out, err, text.str(), kOk);
}

}  // namespace

// ---------------------------------------------------------------------------
// argument parsing
// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analyzer and verifier for triple canonical covers of varieties of "
                 "minimal degree"};
    app.require_subcommand(1);

    int dim = 0;
    long long degree = 0;
    int max_power = 0;
    int max_total = 0;
    int power = 0;
    std::string target;
    std::string coeffs = "distinct";
    unsigned long seed = 0;
    OutputOptions analyze_opts, classify_opts, verify_opts, n0_opts;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "splitting type, block dimensions, image profiles, generators, N0 table");
    analyze->add_option("--dim", dim, "dimension m of the cover")->required();
    analyze->add_option("--degree", degree, "degree r of the minimal-degree target")->required();
    analyze->add_option("--max-power", max_power, "largest power of theta tabulated (default m+2)")
        ->check(CLI::Range(1, 1 << 12));
    analyze->add_flag("--json", analyze_opts.json, "machine-readable report on stdout");
    analyze->add_option("--out", analyze_opts.out_path, "write the JSON report to a file");

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "admissibility of a minimal-degree target, with the cyclic example");
    classify_cmd
        ->add_option("--target", target, "pm:<m> | quadric:<m> | scroll:<e1,e2,...> | veronese")
        ->required();
    classify_cmd->add_flag("--json", classify_opts.json, "machine-readable report on stdout");
    classify_cmd->add_option("--out", classify_opts.out_path, "write the JSON report to a file");

    CLI::App* verify = app.add_subcommand(
        "verify", "certify the closed forms against the exact cyclic-cover oracle");
    verify->add_option("--dim", dim, "dimension m of the cover")->required();
    verify->add_option("--degree", degree, "degree r of the minimal-degree target")->required();
    verify->add_option("--max-total", max_total, "largest s1+s2 certified (default m+3)")
        ->check(CLI::Range(2, 1 << 10));
    verify->add_option("--coeffs", coeffs, "branch form coefficients: distinct | random")
        ->check(CLI::IsMember({"distinct", "random"}));
    verify->add_option("--seed", seed, "seed for --coeffs random");
    verify->add_flag("--json", verify_opts.json, "machine-readable report on stdout");
    verify->add_option("--out", verify_opts.out_path, "write the JSON report to a file");

    CLI::App* n0 = app.add_subcommand("n0", "projective normality status of one power of K_X");
    n0->add_option("--dim", dim, "dimension m of the cover")->required();
    n0->add_option("--degree", degree, "degree r of the minimal-degree target")->required();
    n0->add_option("--power", power, "power n of the canonical bundle")
        ->required()
        ->check(CLI::PositiveNumber);
    n0->add_flag("--json", n0_opts.json, "machine-readable report on stdout");
    n0->add_option("--out", n0_opts.out_path, "write the JSON report to a file");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("triplecover");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return kUsageError;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(dim, degree, max_power, analyze_opts, out, err);
        }
        if (classify_cmd->parsed()) {
            return cmd_classify(target, classify_opts, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(dim, degree, max_total, coeffs, seed, verify_opts, out, err);
        }
        if (n0->parsed()) {
            return cmd_n0(dim, degree, power, n0_opts, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    err << "error: no command given\n";
    return kUsageError;
}

}  // namespace triplecover::cli
