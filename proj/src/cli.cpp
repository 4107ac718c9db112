#include "jointkit/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jointkit/certify.hpp"
#include "jointkit/generate.hpp"
#include "jointkit/suites.hpp"

namespace jointkit {

namespace {

Json joints_report(const LineSystem& ls) {
    Json j;
    j["p"] = ls.field().modulus();
    j["d"] = ls.dim();
    j["N"] = ls.total_multiplicity();
    std::vector<Point> joints = find_joints(ls);
    j["joint_count"] = joints.size();
    const std::size_t d = ls.dim();
    double n = static_cast<double>(ls.total_multiplicity());
    j["joints_over_N_power"] =
        static_cast<double>(joints.size()) / std::pow(n, static_cast<double>(d) / (d - 1));
    Json rows = Json::array();
    for (const Point& p : joints) {
        Json row;
        row["point"] = p.coords;
        row["M"] = joint_multiplicity(ls, p);
        if (ls.has_families()) row["mu"] = multijoint_multiplicity(ls, p);
        row["r"] = successive_minima(ls, p);
        rows.push_back(std::move(row));
    }
    j["joints"] = std::move(rows);
    return j;
}

std::string ratios_csv(const Json& report) {
    std::ostringstream os;
    std::size_t d = report.at("d").get<std::size_t>();
    os << "point,M";
    for (std::size_t j = 1; j <= d; ++j) os << ",r" << j;
    os << ",prod_r,M_over_prod\n";
    for (const Json& row : report.at("joints")) {
        Vec pt = row.at("point").get<Vec>();
        os << "\"(";
        for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? " " : "") << pt[i];
        os << ")\"," << row.at("M").get<u64>();
        u64 prod = 1;
        for (u64 r : row.at("r").get<Vec>()) {
            os << "," << r;
            prod *= r;
        }
        u64 m = row.at("M").get<u64>();
        os << "," << prod << ","
           << (prod ? static_cast<double>(m) / static_cast<double>(prod) : 0.0) << "\n";
    }
    return os.str();
}

int dispatch(const std::vector<std::string>& args) {
    CLI::App app{"exact finite-field joints toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a line system");
    std::string kind, gen_out;
    u64 gp = 5, gn = 10, gseed = 1, gplanted = 0;
    std::size_t gd = 3;
    std::vector<u64> gsizes;
    gen->add_option("--kind", kind, "axes | grid | random | families-random")->required();
    gen->add_option("--p", gp, "prime modulus");
    gen->add_option("--d", gd, "dimension");
    gen->add_option("--n", gn, "line count (random)");
    gen->add_option("--sizes", gsizes, "family sizes (families-random)");
    gen->add_option("--planted", gplanted, "planted joints / multijoints");
    gen->add_option("--seed", gseed, "seed");
    gen->add_option("--out", gen_out, "output file")->required();

    // joints
    auto* jts = app.add_subcommand("joints", "detect joints and tabulate M, mu, r");
    std::string jts_in, jts_out;
    jts->add_option("file", jts_in, "line system file")->required();
    jts->add_option("--out", jts_out, "report file");

    // certify
    auto* cert = app.add_subcommand("certify", "run a proof trace");
    std::string cert_kind, cert_in, cert_out;
    i64 cb = 1;
    u64 cfloor = 1, cgrowth = 1, cbudget = 2000;
    cert->add_option("theorem", cert_kind, "joints | multijoints | carbery")->required();
    cert->add_option("file", cert_in, "line system file")->required();
    cert->add_option("--B", cb, "threshold multiplier (carbery)");
    cert->add_option("--floor", cfloor, "threshold floor (carbery)");
    cert->add_option("--growth", cgrowth, "threshold growth base (carbery; 100 = full strength)");
    cert->add_option("--row-budget", cbudget, "constraint row budget");
    cert->add_option("--out", cert_out, "report file");

    // verify
    auto* ver = app.add_subcommand("verify", "run an invariant suite");
    std::string suite;
    SuiteConfig cfg;
    ver->add_option("--suite", suite, "multiplicity | bezout | minima | flags | sandwich | reduction")
        ->required();
    ver->add_option("--p", cfg.p, "prime modulus");
    ver->add_option("--p2", cfg.p2, "second prime for mixed suites");
    ver->add_option("--d", cfg.d, "dimension");
    ver->add_option("--cases", cfg.cases, "case count");
    ver->add_option("--seed", cfg.seed, "seed");

    // report
    auto* rep = app.add_subcommand("report", "emit bound ratios");
    std::string rep_in, rep_out, rep_format = "json";
    rep->add_option("file", rep_in, "line system file")->required();
    rep->add_option("--out", rep_out, "output file")->required();
    rep->add_option("--format", rep_format, "csv | json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, os, os);
        std::cerr << os.str();
        return code == 0 ? 0 : 2;
    }

    if (gen->parsed()) {
        PrimeField f(gp);
        if (kind == "axes") {
            save_line_system(generate_axes(f, gd), gen_out);
        } else if (kind == "grid") {
            save_line_system(generate_grid(f, gd), gen_out);
        } else if (kind == "random") {
            LineSystem ls = gplanted == 0 ? generate_random(f, gd, gn, gseed)
                                          : generate_random_with_joints(f, gd, gn, gplanted, gseed);
            save_line_system(ls, gen_out);
        } else if (kind == "families-random") {
            if (gsizes.empty()) throw BadParams("families-random needs --sizes");
            save_line_system(
                generate_families(f, gd, gsizes, gplanted == 0 ? 1 : gplanted, gseed), gen_out);
        } else {
            throw BadParams("unknown generator kind: " + kind);
        }
        std::cout << "wrote " << gen_out << "\n";
        return 0;
    }

    if (jts->parsed()) {
        LineSystem ls = load_line_system(jts_in);
        Json report = joints_report(ls);
        std::cout << "joints: " << report.at("joint_count").get<u64>() << "\n";
        if (!jts_out.empty()) write_text(jts_out, report.dump(2) + "\n");
        return 0;
    }

    if (cert->parsed()) {
        LineSystem ls = load_line_system(cert_in);
        Json out;
        bool passed = false;
        if (cert_kind == "joints") {
            ProofTrace tr = joints_proof_trace(ls);
            passed = tr.passed();
            out = trace_to_json(tr);
        } else if (cert_kind == "multijoints") {
            ProofTrace tr = multijoints_proof_trace(ls);
            passed = tr.passed();
            out = trace_to_json(tr);
        } else if (cert_kind == "carbery") {
            if (cb <= 0) throw BadParams("B must be positive");
            ThresholdOptions opt{static_cast<u64>(cb), cfloor, cgrowth, cbudget};
            CarberyAudit audit = carbery_audit(ls, opt);
            passed = audit.trace.passed();
            out = audit_to_json(audit);
        } else {
            throw BadParams("unknown theorem: " + cert_kind);
        }
        if (!cert_out.empty()) write_text(cert_out, out.dump(2) + "\n");
        std::cout << (passed ? "PASS" : "FAIL") << " " << cert_kind << "\n";
        return passed ? 0 : 1;
    }

    if (ver->parsed()) {
        SuiteResult res = run_named_suite(suite, cfg);
        std::cout << res.summary() << "\n    config: p=" << cfg.p << " p2=" << cfg.p2
                  << " d=" << cfg.d << " cases=" << cfg.cases << " seed=" << cfg.seed << "\n";
        return res.passed ? 0 : 1;
    }

    if (rep->parsed()) {
        LineSystem ls = load_line_system(rep_in);
        Json report = joints_report(ls);
        if (rep_format == "csv") {
            write_text(rep_out, ratios_csv(report));
        } else if (rep_format == "json") {
            write_text(rep_out, report.dump(2) + "\n");
        } else {
            throw BadParams("unknown format: " + rep_format);
        }
        std::cout << "wrote " << rep_out << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int run_command(const std::vector<std::string>& args) {
    try {
        return dispatch(args);
    } catch (const AssertionFailed& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace jointkit
