// Command-line front end: capacity bounds, SIC rates, symbol-error-rate
// sweeps, coded PNC chain sweeps, and relay-function checking.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twrc/capacity.hpp"
#include "twrc/netfn.hpp"
#include "twrc/sweep.hpp"

namespace {

struct BoundsArgs {
    double p1_db = 0.0, p2_db = 0.0, p3_db = 0.0;
    std::string csv_path, json_path;
};

struct RatesArgs {
    double p1_db = 0.0, p2_db = 0.0;
    std::optional<double> p3_db;
    std::string csv_path, json_path;
};

struct SweepArgs {
    std::string mode = "p2p";
    int q = 2;
    std::vector<double> snr_db;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string code = "rep";
    int rep_l = 3;
    int spc_k = 2;
    std::string csv_path, json_path;
};

struct NetFnArgs {
    int q = 2;
    std::string builtin;
    std::string table_path;
    double tol = 1e-9;
    std::string csv_path, json_path;
};

const char* regime_name(twrc::SicRegime r) {
    return r == twrc::SicRegime::StrongDominates ? "strong-dominates" : "intermediate";
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw std::domain_error("cannot open '" + path + "' for writing");
    out << body;
}

int run_bounds(const BoundsArgs& a) {
    const auto pp = twrc::PowerProfile::from_db(a.p1_db, a.p2_db, a.p3_db);
    const auto rep = twrc::upper_bound(pp);
    std::printf("powers (linear, unit noise): p1=%.6g  p2=%.6g  p3=%.6g\n",
                pp.p1, pp.p2, pp.p3);
    std::printf("uplink rate    %.12g bits/use\n", rep.uplink_rate);
    std::printf("downlink rate  %.12g bits/use\n", rep.downlink_rate);
    std::printf("upper bound    %.12g bits/use\n", rep.upper_bound);
    std::printf("t1 (uplink time share)  %.12g%s\n", rep.t1_opt,
                rep.degenerate ? "  [degenerate: both phase rates zero]" : "");
    if (!a.csv_path.empty()) {
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "p1,p2,p3,uplink_rate,downlink_rate,upper_bound,t1_opt,degenerate\n"
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n",
                      pp.p1, pp.p2, pp.p3, rep.uplink_rate, rep.downlink_rate,
                      rep.upper_bound, rep.t1_opt, rep.degenerate ? 1 : 0);
        write_text_file(a.csv_path, buf);
    }
    if (!a.json_path.empty()) {
        nlohmann::json j{{"powers", {{"p1", pp.p1}, {"p2", pp.p2}, {"p3", pp.p3}}},
                         {"uplink_rate", rep.uplink_rate},
                         {"downlink_rate", rep.downlink_rate},
                         {"upper_bound", rep.upper_bound},
                         {"t1_opt", rep.t1_opt},
                         {"degenerate", rep.degenerate}};
        write_text_file(a.json_path, j.dump(2) + "\n");
    }
    return 0;
}

int run_rates(const RatesArgs& a) {
    const double p1 = twrc::db_to_linear(a.p1_db);
    const double p2 = twrc::db_to_linear(a.p2_db);
    const double p3 = a.p3_db ? twrc::db_to_linear(*a.p3_db) : 0.0;
    const auto rep = twrc::sic_rates(twrc::PowerProfile(p1, p2, p3));
    std::printf("uplink powers (linear): p1=%.6g  p2=%.6g\n", p1, p2);
    std::printf("sic rate, first decode   %.12g bits/use\n", rep.rate_strong);
    std::printf("sic rate, clean decode   %.12g bits/use\n", rep.rate_weak);
    std::printf("sic min rate             %.12g bits/use\n", rep.min_rate);
    std::printf("regime                   %s\n", regime_name(rep.regime));

    double exchange = std::numeric_limits<double>::quiet_NaN();
    double t1 = std::numeric_limits<double>::quiet_NaN();
    double bound = std::numeric_limits<double>::quiet_NaN();
    if (a.p3_db) {
        const auto combined = twrc::combine_rates(rep.min_rate, twrc::shannon_rate(p3));
        const auto ub = twrc::upper_bound(twrc::PowerProfile(p1, p2, p3));
        exchange = combined.rate;
        t1 = combined.t1;
        bound = ub.upper_bound;
        std::printf("downlink power (linear): p3=%.6g\n", p3);
        std::printf("exchange rate (sic + broadcast)  %.12g bits/use at t1=%.12g\n",
                    exchange, t1);
        std::printf("cut-set upper bound              %.12g bits/use\n", bound);
    }
    if (!a.csv_path.empty()) {
        char buf[320];
        std::snprintf(buf, sizeof(buf),
                      "p1,p2,p3,rate_strong,rate_weak,min_rate,regime,exchange_rate,t1,upper_bound\n"
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s,%.17g,%.17g,%.17g\n",
                      p1, p2, a.p3_db ? p3 : std::numeric_limits<double>::quiet_NaN(),
                      rep.rate_strong, rep.rate_weak, rep.min_rate,
                      regime_name(rep.regime), exchange, t1, bound);
        write_text_file(a.csv_path, buf);
    }
    if (!a.json_path.empty()) {
        nlohmann::json j{{"p1", p1}, {"p2", p2},
                         {"rate_strong", rep.rate_strong},
                         {"rate_weak", rep.rate_weak},
                         {"min_rate", rep.min_rate},
                         {"regime", regime_name(rep.regime)}};
        if (a.p3_db) {
            j["p3"] = p3;
            j["exchange_rate"] = exchange;
            j["t1"] = t1;
            j["upper_bound"] = bound;
        }
        write_text_file(a.json_path, j.dump(2) + "\n");
    }
    return 0;
}

int run_sweep_cmd(const SweepArgs& a, bool chain) {
    twrc::ExperimentConfig cfg;
    cfg.mode = chain ? twrc::SweepMode::Chain : twrc::sweep_mode_from_string(a.mode);
    cfg.q = a.q;
    cfg.snr_db_grid = a.snr_db;
    cfg.trials = a.trials;
    cfg.seed = a.seed;
    if (chain) {
        twrc::CodeSpec spec;
        if (a.code == "rep") {
            spec.kind = twrc::CodeKind::Repetition;
            spec.size = a.rep_l;
        } else {
            spec.kind = twrc::CodeKind::SingleParityCheck;
            spec.size = a.spc_k;
        }
        cfg.code = spec;
    }

    const auto rows = twrc::run_sweep(cfg);
    std::printf("mode=%s q=%d trials=%llu seed=%llu%s\n",
                std::string(twrc::to_string(cfg.mode)).c_str(), cfg.q,
                static_cast<unsigned long long>(cfg.trials),
                static_cast<unsigned long long>(cfg.seed),
                chain ? (a.code == "rep" ? " code=rep" : " code=spc") : "");
    std::printf("%10s %14s %14s %12s %10s\n", "snr_db", "analytic", "empirical",
                "stderr", "trials");
    for (const auto& r : rows) {
        std::printf("%10.4g %14.8g %14.8g %12.4g %10llu\n", r.snr_db, r.analytic,
                    r.empirical, r.standard_error,
                    static_cast<unsigned long long>(r.trials));
    }
    if (!a.csv_path.empty()) write_text_file(a.csv_path, twrc::to_csv(rows));
    if (!a.json_path.empty()) twrc::write_json_report(cfg, rows, a.json_path);
    return 0;
}

int run_netfn(const NetFnArgs& a) {
    const twrc::NetFn f = a.table_path.empty()
                              ? twrc::netfn_builtin(a.builtin, a.q)
                              : twrc::load_netfn_file(a.table_path);
    const auto rep = twrc::check_conditions(f, a.tol);
    std::printf("relay function: q=%d output-alphabet=%d (%s)\n", f.q, f.output_size,
                a.table_path.empty() ? a.builtin.c_str() : a.table_path.c_str());
    std::printf("H(W2|W1,W3) = %.12g bits\n", rep.h_w2_given_w1w3);
    std::printf("H(W1|W2,W3) = %.12g bits\n", rep.h_w1_given_w2w3);
    std::printf("I(W3;W1)    = %.12g bits\n", rep.i_w3_w1);
    std::printf("I(W3;W2)    = %.12g bits\n", rep.i_w3_w2);
    std::printf("recoverability: %s\n", rep.satisfies_recoverability ? "yes" : "no");
    std::printf("independence:   %s\n", rep.satisfies_independence ? "yes" : "no");
    std::printf("valid:          %s\n", rep.valid ? "yes" : "no");
    if (!a.csv_path.empty()) {
        char buf[320];
        std::snprintf(buf, sizeof(buf),
                      "q,m,h_w2_given_w1w3,h_w1_given_w2w3,i_w3_w1,i_w3_w2,"
                      "recoverability,independence,valid\n"
                      "%d,%d,%.17g,%.17g,%.17g,%.17g,%d,%d,%d\n",
                      f.q, f.output_size, rep.h_w2_given_w1w3, rep.h_w1_given_w2w3,
                      rep.i_w3_w1, rep.i_w3_w2, rep.satisfies_recoverability ? 1 : 0,
                      rep.satisfies_independence ? 1 : 0, rep.valid ? 1 : 0);
        write_text_file(a.csv_path, buf);
    }
    if (!a.json_path.empty()) {
        nlohmann::json j{{"q", f.q},
                         {"output_size", f.output_size},
                         {"h_w2_given_w1w3", rep.h_w2_given_w1w3},
                         {"h_w1_given_w2w3", rep.h_w1_given_w2w3},
                         {"i_w3_w1", rep.i_w3_w1},
                         {"i_w3_w2", rep.i_w3_w2},
                         {"satisfies_recoverability", rep.satisfies_recoverability},
                         {"satisfies_independence", rep.satisfies_independence},
                         {"valid", rep.valid}};
        write_text_file(a.json_path, j.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-way relay channel toolkit: capacity bounds, SIC and PNC "
                 "rates, SER sweeps, and relay-function checking"};
    app.require_subcommand(1);

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "cut-set capacity upper bound");
    bounds->add_option("--p1-db", bounds_args.p1_db, "N1 power in dB")->required();
    bounds->add_option("--p2-db", bounds_args.p2_db, "N2 power in dB")->required();
    bounds->add_option("--p3-db", bounds_args.p3_db, "relay power in dB")->required();
    bounds->add_option("--csv", bounds_args.csv_path, "write CSV to this path");
    bounds->add_option("--json", bounds_args.json_path, "write JSON to this path");

    RatesArgs rates_args;
    double rates_p3_db = 0.0;
    auto* rates = app.add_subcommand("rates", "SIC achievable rates");
    rates->add_option("--p1-db", rates_args.p1_db, "N1 power in dB")->required();
    rates->add_option("--p2-db", rates_args.p2_db, "N2 power in dB")->required();
    auto* p3_opt = rates->add_option("--p3-db", rates_p3_db,
                                     "relay power in dB (adds downlink combining)");
    rates->add_option("--csv", rates_args.csv_path, "write CSV to this path");
    rates->add_option("--json", rates_args.json_path, "write JSON to this path");

    SweepArgs ser_args;
    auto* ser = app.add_subcommand("ser", "Monte Carlo symbol error rate sweep");
    ser->add_option("--mode", ser_args.mode, "p2p | sum | pnc")
        ->check(CLI::IsMember({"p2p", "sum", "pnc"}))
        ->required();
    ser->add_option("--q", ser_args.q, "modulation order")->required();
    ser->add_option("--snr-db", ser_args.snr_db, "SNR grid in dB")->required()->expected(-1);
    ser->add_option("--trials", ser_args.trials, "trials per grid point");
    ser->add_option("--seed", ser_args.seed, "RNG seed");
    ser->add_option("--csv", ser_args.csv_path, "write CSV to this path");
    ser->add_option("--json", ser_args.json_path, "write JSON report to this path");

    SweepArgs chain_args;
    auto* chain = app.add_subcommand("chain", "coded PNC uplink packet error sweep");
    chain->add_option("--code", chain_args.code, "rep | spc")
        ->check(CLI::IsMember({"rep", "spc"}))
        ->required();
    chain->add_option("--q", chain_args.q, "symbol modulus")->required();
    chain->add_option("--l", chain_args.rep_l, "repetition block length");
    chain->add_option("--k", chain_args.spc_k, "single-parity-check message length");
    chain->add_option("--snr-db", chain_args.snr_db, "SNR grid in dB")->required()->expected(-1);
    chain->add_option("--trials", chain_args.trials, "trials per grid point");
    chain->add_option("--seed", chain_args.seed, "RNG seed");
    chain->add_option("--csv", chain_args.csv_path, "write CSV to this path");
    chain->add_option("--json", chain_args.json_path, "write JSON report to this path");

    NetFnArgs netfn_args;
    auto* netfn = app.add_subcommand("netfn", "relay-function validity check");
    netfn->add_option("--q", netfn_args.q, "input alphabet size (builtins)");
    auto* builtin_opt =
        netfn->add_option("--builtin", netfn_args.builtin, "xor | modq-add | int-sum | const")
            ->check(CLI::IsMember({"xor", "modq-add", "int-sum", "const"}));
    auto* table_opt =
        netfn->add_option("--table", netfn_args.table_path, "table file: 'q m' then q rows");
    builtin_opt->excludes(table_opt);
    netfn->add_option("--tol", netfn_args.tol, "zero-test tolerance in bits");
    netfn->add_option("--csv", netfn_args.csv_path, "write CSV to this path");
    netfn->add_option("--json", netfn_args.json_path, "write JSON to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*bounds) return run_bounds(bounds_args);
        if (*rates) {
            if (*p3_opt) rates_args.p3_db = rates_p3_db;
            return run_rates(rates_args);
        }
        if (*ser) return run_sweep_cmd(ser_args, false);
        if (*chain) return run_sweep_cmd(chain_args, true);
        if (*netfn) {
            if (netfn_args.builtin.empty() && netfn_args.table_path.empty())
                throw std::domain_error("netfn: need --builtin or --table");
            return run_netfn(netfn_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
