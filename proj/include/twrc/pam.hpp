#pragma once

#include <span>
#include <vector>

#include "twrc/qpacket.hpp"

namespace twrc {

// q-ary PAM, amplitudes alpha*(2u - (q-1)) for u in {0, ..., q-1}.
// alpha = sqrt(3 P / (q^2 - 1)) makes the mean symbol energy of uniform
// symbols equal to the transmit power P; adjacent spacing is d = 2 alpha.
struct PamScheme {
    int q = 2;
    double alpha = 1.0;
    double power = 1.0;

    static PamScheme from_power(int q, double power);
    static PamScheme from_alpha(int q, double alpha);

    double point(int u) const { return alpha * (2.0 * u - (q - 1)); }
    double spacing() const { return 2.0 * alpha; }
};

// Constellation of the sum of two synchronized equal-power PAM signals:
// 2q-1 points spaced d apart, with the triangular occupancy distribution
// (q - |m - (q-1)|)/q^2 induced by uniform independent inputs.
struct SumConstellation {
    int q = 2;
    double alpha = 1.0;

    explicit SumConstellation(const PamScheme& s) : q(s.q), alpha(s.alpha) {}

    int size() const { return 2 * q - 1; }
    double point(int m) const { return alpha * (2.0 * m - 2.0 * (q - 1)); }
    double prob(int m) const;
    double spacing() const { return 2.0 * alpha; }

    std::vector<double> points() const;
    std::vector<double> probs() const;
};

std::vector<double> modulate(const QPacket& u, const PamScheme& s);

// Hard decision with midpoint thresholds; a value exactly on a threshold
// goes to the lower index.
int detect_pam_symbol(double y, const PamScheme& s);
std::vector<int> detect_pam(std::span<const double> y, const PamScheme& s);

int detect_sum_symbol(double y, const SumConstellation& sc);
std::vector<int> detect_sum(std::span<const double> y, const SumConstellation& sc);

// Sum-constellation index -> modulo-q sum of the two transmitted symbols.
int pnc_demap(int m_hat, int q);
std::vector<int> pnc_demap(std::span<const int> m_hat, int q);

// Pre-decoding symbol error rates at unit noise variance.
double ser_p2p_analytic(const PamScheme& s);
double ser_sum_analytic(const PamScheme& s);

}  // namespace twrc
