#include "twrc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace twrc {

namespace {

void require_power(double p, const char* what) {
    if (!std::isfinite(p) || p < 0.0) throw std::domain_error(what);
}

}  // namespace

PowerProfile::PowerProfile(double p1_, double p2_, double p3_)
    : p1(p1_), p2(p2_), p3(p3_) {
    require_power(p1, "PowerProfile: p1 must be finite and >= 0");
    require_power(p2, "PowerProfile: p2 must be finite and >= 0");
    require_power(p3, "PowerProfile: p3 must be finite and >= 0");
}

PowerProfile PowerProfile::from_db(double p1_db, double p2_db, double p3_db) {
    return PowerProfile(db_to_linear(p1_db), db_to_linear(p2_db), db_to_linear(p3_db));
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double shannon_rate(double p) {
    require_power(p, "shannon_rate: power must be finite and >= 0");
    return 0.5 * std::log2(1.0 + p);
}

CombinedRate combine_rates(double uplink, double downlink) {
    require_power(uplink, "combine_rates: uplink rate must be finite and >= 0");
    require_power(downlink, "combine_rates: downlink rate must be finite and >= 0");
    if (uplink == 0.0 && downlink == 0.0) return {0.0, 0.5, true};
    const double total = uplink + downlink;
    return {uplink * downlink / total, downlink / total, false};
}

BoundReport upper_bound(const PowerProfile& pp) {
    const double ru = shannon_rate(std::min(pp.p1, pp.p2));
    const double rd = shannon_rate(pp.p3);
    const CombinedRate c = combine_rates(ru, rd);
    return {c.rate, c.t1, ru, rd, c.degenerate};
}

SicRateReport sic_rates(const PowerProfile& pp) {
    const double pw = std::min(pp.p1, pp.p2);
    const double ps = std::max(pp.p1, pp.p2);
    SicRateReport rep;
    rep.rate_strong = 0.5 * std::log2(1.0 + ps / (pw + 1.0));
    rep.rate_weak = shannon_rate(pw);
    rep.min_rate = std::min(rep.rate_strong, rep.rate_weak);
    rep.regime = (ps >= pw + pw * pw) ? SicRegime::StrongDominates
                                      : SicRegime::Intermediate;
    return rep;
}

double low_snr_gap(double pw, double ps) {
    require_power(pw, "low_snr_gap: pw must be finite and >= 0");
    require_power(ps, "low_snr_gap: ps must be finite and >= 0");
    if (ps < pw || ps > pw + pw * pw)
        throw std::domain_error("low_snr_gap: requires pw <= ps <= pw + pw^2");
    return shannon_rate(pw) - 0.5 * std::log2(1.0 + ps / (pw + 1.0));
}

double sic_rate_floor(double pw) {
    require_power(pw, "sic_rate_floor: pw must be finite and >= 0");
    return 0.5 * std::log2(1.0 + pw - pw * pw / (pw + 1.0));
}

}  // namespace twrc
