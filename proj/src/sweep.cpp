#include "twrc/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "twrc/chain.hpp"
#include "twrc/pam.hpp"

namespace twrc {

namespace {

constexpr std::uint64_t kShardSize = std::uint64_t{1} << 16;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct ShardCounts {
    std::uint64_t primary = 0;    // detection / symbol / packet errors per mode
    std::uint64_t secondary = 0;  // demap errors for the sum/pnc kernel
};

// One shard of single-user PAM symbol trials.
ShardCounts run_shard_p2p(const PamScheme& s, std::uint64_t trials,
                          std::mt19937_64& rng) {
    std::uniform_int_distribution<int> sym(0, s.q - 1);
    std::normal_distribution<double> noise(0.0, 1.0);
    ShardCounts counts;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int u = sym(rng);
        const double y = s.point(u) + noise(rng);
        counts.primary += (detect_pam_symbol(y, s) != u);
    }
    return counts;
}

// One shard of superimposed trials. Detection errors and demap errors are
// counted in the same pass over the same draws, so runs that differ only
// in which of the two is reported see identical randomness.
ShardCounts run_shard_sum(const PamScheme& s, std::uint64_t trials,
                          std::mt19937_64& rng) {
    const SumConstellation sc(s);
    std::uniform_int_distribution<int> sym(0, s.q - 1);
    std::normal_distribution<double> noise(0.0, 1.0);
    ShardCounts counts;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int u1 = sym(rng);
        const int u2 = sym(rng);
        const double y = s.point(u1) + s.point(u2) + noise(rng);
        const int m = u1 + u2;
        const int m_hat = detect_sum_symbol(y, sc);
        counts.primary += (m_hat != m);
        counts.secondary += (m_hat % s.q != m % s.q);
    }
    return counts;
}

ShardCounts run_shard_chain(const RingLinearCode& code, const PamScheme& s,
                            std::uint64_t trials, std::mt19937_64& rng) {
    ShardCounts counts;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const QPacket w1 = random_qpacket(code.q, code.k, rng);
        const QPacket w2 = random_qpacket(code.q, code.k, rng);
        const ChainResult res = pnc_chain_trial(code, s, w1, w2, rng, 1.0);
        counts.primary += res.packet_error ? 1 : 0;
        counts.secondary += res.symbol_errors;
    }
    return counts;
}

struct PointResult {
    std::uint64_t primary = 0;
    std::uint64_t secondary = 0;
};

PointResult run_point(const ExperimentConfig& cfg, const PamScheme& s,
                      const RingLinearCode* code, std::size_t point_idx) {
    const std::uint64_t n_shards = (cfg.trials + kShardSize - 1) / kShardSize;
    std::vector<ShardCounts> results(n_shards);

    auto run_shard = [&](std::uint64_t shard) {
        const std::uint64_t global = point_idx * n_shards + shard;
        std::mt19937_64 rng(mix_seed(cfg.seed, global));
        const std::uint64_t begin = shard * kShardSize;
        const std::uint64_t count = std::min(kShardSize, cfg.trials - begin);
        switch (cfg.mode) {
            case SweepMode::SerP2p:
                results[shard] = run_shard_p2p(s, count, rng);
                break;
            case SweepMode::SerSum:
            case SweepMode::SerPnc:
                results[shard] = run_shard_sum(s, count, rng);
                break;
            case SweepMode::Chain:
                results[shard] = run_shard_chain(*code, s, count, rng);
                break;
            default:
                break;
        }
    };

    const unsigned workers =
        std::min<std::uint64_t>(max_worker_threads(), n_shards);
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < n_shards; ++i) run_shard(i);
    } else {
        std::atomic<std::uint64_t> next{0};
        auto pump = [&] {
            for (;;) {
                const std::uint64_t i = next.fetch_add(1);
                if (i >= n_shards) return;
                run_shard(i);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(pump);
        pump();
        for (auto& th : pool) th.join();
    }

    PointResult merged;
    for (const auto& r : results) {
        merged.primary += r.primary;
        merged.secondary += r.secondary;
    }
    return merged;
}

}  // namespace

void ExperimentConfig::validate() const {
    const bool sweep_mode = mode == SweepMode::SerP2p || mode == SweepMode::SerSum ||
                            mode == SweepMode::SerPnc || mode == SweepMode::Chain;
    if (sweep_mode) {
        if (snr_db_grid.empty())
            throw std::domain_error("ExperimentConfig: sweep modes need a non-empty SNR grid");
        if (trials < 1) throw std::domain_error("ExperimentConfig: trials must be >= 1");
        if (q < 2) throw std::domain_error("ExperimentConfig: q must be >= 2");
        for (double db : snr_db_grid) {
            if (!std::isfinite(db))
                throw std::domain_error("ExperimentConfig: SNR grid entries must be finite");
        }
    }
    if (mode == SweepMode::Chain && !code)
        throw std::domain_error("ExperimentConfig: chain mode needs a code spec");
    if ((mode == SweepMode::Bounds || mode == SweepMode::Rates) && !powers)
        throw std::domain_error("ExperimentConfig: bounds/rates modes need a power profile");
}

std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg) {
    cfg.validate();
    const bool sweep_mode = cfg.mode == SweepMode::SerP2p || cfg.mode == SweepMode::SerSum ||
                            cfg.mode == SweepMode::SerPnc || cfg.mode == SweepMode::Chain;
    if (!sweep_mode)
        throw std::domain_error("run_sweep: mode is not a Monte Carlo sweep");

    std::optional<RingLinearCode> code;
    if (cfg.mode == SweepMode::Chain) code = cfg.code->build(cfg.q);

    std::vector<SweepRow> rows;
    rows.reserve(cfg.snr_db_grid.size());
    for (std::size_t i = 0; i < cfg.snr_db_grid.size(); ++i) {
        const double db = cfg.snr_db_grid[i];
        const PamScheme s = PamScheme::from_power(cfg.q, db_to_linear(db));
        const PointResult res = run_point(cfg, s, code ? &*code : nullptr, i);

        SweepRow row;
        row.snr_db = db;
        row.trials = cfg.trials;
        row.analytic = (cfg.mode == SweepMode::SerP2p) ? ser_p2p_analytic(s)
                                                       : ser_sum_analytic(s);
        const std::uint64_t errors =
            (cfg.mode == SweepMode::SerPnc) ? res.secondary : res.primary;
        row.empirical = static_cast<double>(errors) / static_cast<double>(cfg.trials);
        row.standard_error = std::sqrt(row.empirical * (1.0 - row.empirical) /
                                       static_cast<double>(cfg.trials));
        rows.push_back(row);
    }
    return rows;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index ^ 0x632BE59BD9B4E019ULL));
}

unsigned max_worker_threads() {
    if (const char* env = std::getenv("TWRC_MAX_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

}  // namespace twrc
