#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "twrc/sweep.hpp"

namespace twrc {

namespace {

// Shortest exact decimal form; 17 significant digits round-trip a double.
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string_view to_string(SweepMode mode) {
    switch (mode) {
        case SweepMode::SerP2p: return "p2p";
        case SweepMode::SerSum: return "sum";
        case SweepMode::SerPnc: return "pnc";
        case SweepMode::Chain: return "chain";
        case SweepMode::Bounds: return "bounds";
        case SweepMode::Rates: return "rates";
        case SweepMode::NetFnCheck: return "netfn";
    }
    return "unknown";
}

SweepMode sweep_mode_from_string(std::string_view name) {
    if (name == "p2p") return SweepMode::SerP2p;
    if (name == "sum") return SweepMode::SerSum;
    if (name == "pnc") return SweepMode::SerPnc;
    if (name == "chain") return SweepMode::Chain;
    if (name == "bounds") return SweepMode::Bounds;
    if (name == "rates") return SweepMode::Rates;
    if (name == "netfn") return SweepMode::NetFnCheck;
    throw std::domain_error("unknown sweep mode '" + std::string(name) + "'");
}

std::string_view to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::Repetition: return "repetition";
        case CodeKind::SingleParityCheck: return "single-parity-check";
    }
    return "unknown";
}

CodeKind code_kind_from_string(std::string_view name) {
    if (name == "repetition") return CodeKind::Repetition;
    if (name == "single-parity-check") return CodeKind::SingleParityCheck;
    throw std::domain_error("unknown code kind '" + std::string(name) + "'");
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "snr_db,analytic,empirical,stderr,trials\n";
    for (const auto& r : rows) {
        out << fmt_double(r.snr_db) << ',' << fmt_double(r.analytic) << ','
            << fmt_double(r.empirical) << ',' << fmt_double(r.standard_error)
            << ',' << r.trials << '\n';
    }
}

std::string to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    write_csv(rows, out);
    return out.str();
}

namespace {

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
    nlohmann::json j{
        {"mode", to_string(cfg.mode)},
        {"q", cfg.q},
        {"snr_db_grid", cfg.snr_db_grid},
        {"trials", cfg.trials},
        {"seed", cfg.seed},
    };
    if (cfg.code)
        j["code"] = {{"kind", to_string(cfg.code->kind)}, {"size", cfg.code->size}};
    if (cfg.powers)
        j["powers"] = {{"p1", cfg.powers->p1}, {"p2", cfg.powers->p2}, {"p3", cfg.powers->p3}};
    return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    cfg.mode = sweep_mode_from_string(j.at("mode").get<std::string>());
    cfg.q = j.at("q").get<int>();
    cfg.snr_db_grid = j.at("snr_db_grid").get<std::vector<double>>();
    cfg.trials = j.at("trials").get<std::uint64_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("code")) {
        CodeSpec spec;
        spec.kind = code_kind_from_string(j["code"].at("kind").get<std::string>());
        spec.size = j["code"].at("size").get<int>();
        cfg.code = spec;
    }
    if (j.contains("powers")) {
        cfg.powers = PowerProfile(j["powers"].at("p1").get<double>(),
                                  j["powers"].at("p2").get<double>(),
                                  j["powers"].at("p3").get<double>());
    }
    return cfg;
}

}  // namespace

void write_json_report(const ExperimentConfig& cfg,
                       const std::vector<SweepRow>& rows,
                       const std::string& path) {
    nlohmann::json j;
    j["config"] = config_to_json(cfg);
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        j["rows"].push_back({{"snr_db", r.snr_db},
                             {"analytic", r.analytic},
                             {"empirical", r.empirical},
                             {"stderr", r.standard_error},
                             {"trials", r.trials}});
    }
    std::ofstream out(path);
    if (!out) throw std::domain_error("write_json_report: cannot open '" + path + "'");
    out << j.dump(2) << '\n';
}

JsonReport read_json_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("read_json_report: cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;

    JsonReport report;
    report.config = config_from_json(j.at("config"));
    for (const auto& rj : j.at("rows")) {
        SweepRow r;
        r.snr_db = rj.at("snr_db").get<double>();
        r.analytic = rj.at("analytic").get<double>();
        r.empirical = rj.at("empirical").get<double>();
        r.standard_error = rj.at("stderr").get<double>();
        r.trials = rj.at("trials").get<std::uint64_t>();
        report.rows.push_back(r);
    }
    return report;
}

}  // namespace twrc
