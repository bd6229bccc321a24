#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twrc/capacity.hpp"
#include "twrc/code.hpp"

namespace twrc {

enum class SweepMode { SerP2p, SerSum, SerPnc, Chain, Bounds, Rates, NetFnCheck };

struct CodeSpec {
    CodeKind kind = CodeKind::Repetition;
    int size = 3;  // l for Repetition, k for SingleParityCheck

    RingLinearCode build(int q) const { return make_code(kind, q, size); }
};

struct ExperimentConfig {
    SweepMode mode = SweepMode::SerP2p;
    int q = 2;
    std::vector<double> snr_db_grid;
    std::uint64_t trials = 1;
    std::uint64_t seed = 1;
    std::optional<CodeSpec> code;
    std::optional<PowerProfile> powers;

    void validate() const;  // throws std::domain_error
};

struct SweepRow {
    double snr_db = 0.0;
    double analytic = 0.0;
    double empirical = 0.0;
    double standard_error = 0.0;
    std::uint64_t trials = 0;
};

// Monte Carlo sweep over the SNR grid for the SerP2p / SerSum / SerPnc /
// Chain modes. Trials are split into fixed-size shards; shard i of the
// whole sweep runs on its own generator seeded by mix_seed(seed, i), and
// shard counts merge by summation, so results are bitwise reproducible
// no matter how shards are scheduled. The sum and pnc modes consume
// identical random streams: a run with the same seed sees the same noise.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

// CSV with the fixed header snr_db,analytic,empirical,stderr,trials.
void write_csv(const std::vector<SweepRow>& rows, std::ostream& out);
std::string to_csv(const std::vector<SweepRow>& rows);

struct JsonReport {
    ExperimentConfig config;
    std::vector<SweepRow> rows;
};

void write_json_report(const ExperimentConfig& cfg,
                       const std::vector<SweepRow>& rows,
                       const std::string& path);
JsonReport read_json_report(const std::string& path);

std::string_view to_string(SweepMode mode);
SweepMode sweep_mode_from_string(std::string_view name);
std::string_view to_string(CodeKind kind);
CodeKind code_kind_from_string(std::string_view name);

// Deterministic shard seeding (splitmix64-based hash of seed and index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Worker cap from TWRC_MAX_THREADS, falling back to hardware concurrency.
unsigned max_worker_threads();

}  // namespace twrc
