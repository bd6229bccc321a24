#pragma once

namespace twrc {

// Node transmit powers on linear scale, normalized to unit noise variance,
// so "power" and "SNR" coincide. p1/p2 are the end nodes, p3 the relay.
struct PowerProfile {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    PowerProfile() = default;
    PowerProfile(double p1_, double p2_, double p3_);

    static PowerProfile from_db(double p1_db, double p2_db, double p3_db);
};

// Cut-set bound on the symmetric exchange rate together with the optimal
// split of channel time between the uplink and downlink phases.
struct BoundReport {
    double upper_bound = 0.0;    // bits per channel use
    double t1_opt = 0.5;         // uplink time fraction in [0, 1]
    double uplink_rate = 0.0;    // bits/use during the uplink phase
    double downlink_rate = 0.0;  // bits/use during the downlink phase
    bool degenerate = false;     // both phase rates were zero
};

enum class SicRegime {
    StrongDominates,  // stronger stream decodable at >= the weaker's clean rate
    Intermediate,     // interference-limited first decode is the bottleneck
};

struct SicRateReport {
    double rate_strong = 0.0;  // first-decoded stream, interference-limited
    double rate_weak = 0.0;    // second stream after interference removal
    double min_rate = 0.0;
    SicRegime regime = SicRegime::Intermediate;
};

struct CombinedRate {
    double rate = 0.0;
    double t1 = 0.5;
    bool degenerate = false;
};

// (1/2) log2(1 + p) for a unit-variance Gaussian channel at SNR p.
double shannon_rate(double p);

// Two-phase cut-set bound: harmonic combination of the uplink bottleneck
// rate shannon_rate(min(p1, p2)) and the downlink rate shannon_rate(p3),
// with t1 chosen so the two phases carry equal information.
BoundReport upper_bound(const PowerProfile& pp);

// Successive interference cancellation at the relay: the higher-power
// stream is decoded first against the other as noise, then the weaker
// stream cleanly. p3 is not used.
SicRateReport sic_rates(const PowerProfile& pp);

// shannon_rate(pw) minus the interference-limited first-decode rate, valid
// on the regime pw <= ps <= pw + pw^2 where that decode is the bottleneck.
double low_snr_gap(double pw, double ps);

// (1/2) log2(1 + pw - pw^2/(pw+1)): lower bound on the SIC min rate over
// the whole intermediate regime, tight as pw -> 0.
double sic_rate_floor(double pw);

// Time-share two phase rates so both carry the same number of bits:
// rate = u*d/(u+d) with t1 = d/(u+d). Both zero -> rate 0, t1 1/2, flagged.
CombinedRate combine_rates(double uplink, double downlink);

double db_to_linear(double db);

}  // namespace twrc
