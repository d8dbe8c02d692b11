// Command-line front end: exact tradeoff points and regions, plus
// construction/verification of the concrete glued codes.

#include "regen/codes.hpp"
#include "regen/output.hpp"
#include "regen/simulate.hpp"
#include "regen/tradeoff.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

using namespace regen;

struct CommonFlags {
    int n = 0, k = 0, d = 0;
    std::string format = "csv";
    std::string out_path;
    bool raw = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--n", f.n, "number of storage nodes")->required();
    cmd->add_option("--k", f.k, "reconstruction degree")->required();
    cmd->add_option("--d", f.d, "repair degree")->required();
    cmd->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out_path, "write output to this path instead of stdout");
}

std::ostream& open_sink(const CommonFlags& f, std::ofstream& file) {
    if (f.out_path.empty()) return std::cout;
    file.open(f.out_path);
    if (!file) throw std::runtime_error("cannot open output path: " + f.out_path);
    return file;
}

void emit(const CommonFlags& f, const std::vector<SeriesPoint>& pts) {
    std::ofstream file;
    auto& os = open_sink(f, file);
    if (f.format == "json")
        os << points_to_json(pts).dump(2) << "\n";
    else
        write_points_csv(os, pts);
}

SeriesPoint to_series(const std::string& series, const TradeoffPoint& p) {
    return {series, p.k_hat, p.alpha, p.gamma};
}

SeriesPoint raw_series(const std::string& series, int k_hat, const detail::RawPoint& p) {
    return {series, k_hat, p.alpha, p.gamma};
}

int run_point(const CommonFlags& f, const std::string& construction, int k_hat) {
    SystemParams params(f.n, f.k, f.d);
    std::vector<SeriesPoint> pts;
    if (construction == "msr") {
        pts.push_back(to_series("msr", msr_point(params)));
    } else if (construction == "mbr") {
        pts.push_back(to_series("mbr", mbr_point(params)));
    } else if (construction == "c1") {
        pts.push_back(f.raw ? raw_series("c1", k_hat, construction1_raw(params, k_hat))
                            : to_series("c1", construction1_point(params, k_hat)));
    } else if (construction == "c2") {
        pts.push_back(f.raw ? raw_series("c2", k_hat, construction2_raw(params, k_hat))
                            : to_series("c2", construction2_point(params, k_hat)));
    } else {
        pts.push_back(f.raw ? raw_series("baseline", k_hat, baseline_raw(params, k_hat))
                            : to_series("baseline", baseline_point(params, k_hat)));
    }
    emit(f, pts);
    return 0;
}

int run_region(const CommonFlags& f, std::vector<std::string> series) {
    SystemParams params(f.n, f.k, f.d);
    if (series.empty() || (series.size() == 1 && series[0] == "all"))
        series = {"functional", "space-share", "baseline", "c1", "c2", "hull"};
    std::vector<SeriesPoint> pts;
    for (const auto& s : series) {
        if (s == "functional") {
            for (const auto& v : functional_curve_vertices(params))
                pts.push_back(to_series("functional", v));
        } else if (s == "space-share") {
            pts.push_back(to_series("space-share", msr_point(params)));
            pts.push_back(to_series("space-share", mbr_point(params)));
        } else if (s == "baseline") {
            for (int kh = 1; kh <= params.d; ++kh)
                pts.push_back(to_series("baseline", baseline_point(params, kh)));
        } else if (s == "c1") {
            for (int kh = 1; kh <= params.k; ++kh)
                pts.push_back(to_series("c1", construction1_point(params, kh)));
        } else if (s == "c2") {
            for (int kh = 1; kh <= params.d; ++kh)
                pts.push_back(to_series("c2", construction2_point(params, kh)));
        } else if (s == "hull") {
            const Region region =
                params.d == params.k ? theorem1_region(params) : theorem2_region(params);
            for (const auto& v : region.hull()) pts.push_back(to_series("hull", v));
        } else {
            throw CLI::ValidationError("--series",
                                       "unknown series '" + s +
                                           "' (expected functional, space-share, baseline, c1, "
                                           "c2, hull, or all)");
        }
    }
    emit(f, pts);
    return 0;
}

int run_verify(const CommonFlags& f, int k_hat, std::uint64_t seed, std::uint32_t field,
               bool cap_override, bool tamper, const std::string& ledger_path,
               const std::string& dump_path) {
    SystemParams params(f.n, f.k, f.d);
    std::cout << "build: (" << f.n << "," << f.k << "," << f.d << ") k_hat=" << k_hat
              << " field=GF(" << field << ") seed=" << seed << "\n";
    auto code = codes::build_glued(params, k_hat, field, seed, cap_override);
    std::cout << "glued: " << code.copies() << " copies, "
              << code.total_file_subsymbols() << " file subsymbols total\n";
    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw std::runtime_error("cannot open output path: " + dump_path);
        code.serialize(dump);
    }
    if (tamper) {
        code.tamper(0);
        std::cout << "tamper: corrupted one stored subsymbol of node 0 (negative control)\n";
    }
    bool ok = true;

    // Reconstruction from every k-subset of nodes.
    int recon_ok = 0, recon_total = 0;
    codes::detail::for_each_subset(params.n, params.k, [&](const std::vector<int>& idx) {
        ++recon_total;
        try {
            const auto got = code.reconstruct(idx);
            bool match = true;
            for (int c = 0; c < code.copies(); ++c)
                if (got[c] != code.file(c)) match = false;
            if (match)
                ++recon_ok;
            else
                ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
    });
    std::cout << "reconstruction: " << recon_ok << "/" << recon_total << " k-subsets exact\n";

    try {
        const auto ledger = simulate::sweep_repairs(code);
        const auto analytic = construction1_point(params, k_hat);
        const auto gamma1 = construction1_gamma_nonempty(params, k_hat);
        auto line = [&](const char* name, const Rational& measured, const Rational& expected) {
            const bool match = measured == expected;
            ok = ok && match;
            std::cout << name << ": measured " << to_fraction_string(measured) << " analytic "
                      << to_fraction_string(expected) << (match ? "  OK" : "  MISMATCH") << "\n";
        };
        line("alpha", ledger.alpha, analytic.alpha);
        line("gamma", ledger.gamma, analytic.gamma);
        line("gamma_nonempty", ledger.gamma_nonempty_per_copy, gamma1);
        if (!ledger_path.empty()) {
            std::ofstream lf(ledger_path);
            if (!lf) throw std::runtime_error("cannot open output path: " + ledger_path);
            if (f.format == "json")
                lf << ledger.to_json().dump(2) << "\n";
            else
                ledger.to_csv(lf);
        }
    } catch (const codes::RepairMismatch& e) {
        std::cout << "repair sweep: " << e.what() << "\n";
        ok = false;
    }

    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int run_oracle(const CommonFlags& f, int k_hat, int cap) {
    SystemParams params(f.n, f.k, f.d);
    const Rational brute = simulate::mk_oracle(params, k_hat, cap);
    const Rational closed =
        construction2_file_size(params, match_small_code(params, k_hat, ParityRule::Repair));
    std::ofstream file;
    auto& os = open_sink(f, file);
    if (f.format == "json") {
        nlohmann::json j{{"khat", k_hat},
                         {"mk_oracle_exact", to_fraction_string(brute)},
                         {"mk_oracle", to_decimal_string(brute)},
                         {"mk_formula_exact", to_fraction_string(closed)},
                         {"agrees", brute == closed}};
        os << j.dump(2) << "\n";
    } else {
        os << "khat,mk_oracle_exact,mk_oracle,mk_formula_exact,agrees\n";
        os << k_hat << "," << to_fraction_string(brute) << "," << to_decimal_string(brute) << ","
           << to_fraction_string(closed) << "," << (brute == closed ? "true" : "false") << "\n";
    }
    return brute == closed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact storage/repair-bandwidth tradeoff toolkit for regenerating codes"};
    app.require_subcommand(1);

    CommonFlags pf, rf, vf, of;
    std::string construction = "c1";
    int point_khat = 1;
    auto* point = app.add_subcommand("point", "print a single tradeoff point");
    add_common(point, pf);
    point->add_option("--construction", construction, "which point to evaluate")
        ->check(CLI::IsMember({"msr", "mbr", "c1", "c2", "baseline"}));
    point->add_option("--khat", point_khat, "small-code reconstruction degree");
    point->add_flag("--raw", pf.raw, "emit unnormalized values");

    std::vector<std::string> series;
    auto* region = app.add_subcommand("region", "emit point series and hulls");
    add_common(region, rf);
    region->add_option("--series", series, "series to emit (default: all)")->delimiter(',');

    int verify_khat = 2, oracle_khat = 1, oracle_cap = 20;
    std::uint64_t seed = 1;
    std::uint32_t field = 5;
    bool cap_override = false, tamper = false;
    std::string ledger_path, dump_path;
    auto* verify = app.add_subcommand("verify", "build, glue and exhaustively verify a code");
    add_common(verify, vf);
    verify->add_option("--khat", verify_khat, "small-code reconstruction degree");
    verify->add_option("--seed", seed, "file-content seed");
    verify->add_option("--field", field, "prime field order");
    verify->add_flag("--cap-override", cap_override, "lift the n! desk-scale cap");
    verify->add_flag("--tamper", tamper, "corrupt one subsymbol first (negative control)");
    verify->add_option("--ledger", ledger_path, "write the repair ledger to this path");
    verify->add_option("--dump-code", dump_path, "serialize the glued code to this path");

    auto* oracle = app.add_subcommand("oracle", "brute-force M_k versus the closed form");
    add_common(oracle, of);
    oracle->add_option("--khat", oracle_khat, "small-code reconstruction degree")->required();
    oracle->add_option("--cap", oracle_cap, "enumeration cap on n");

    CLI11_PARSE(app, argc, argv);

    try {
        if (point->parsed()) return run_point(pf, construction, point_khat);
        if (region->parsed()) return run_region(rf, series);
        if (verify->parsed())
            return run_verify(vf, verify_khat, seed, field, cap_override, tamper, ledger_path,
                              dump_path);
        return run_oracle(of, oracle_khat, oracle_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
