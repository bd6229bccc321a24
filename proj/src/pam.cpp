#include "twrc/pam.hpp"

#include <cmath>
#include <stdexcept>

#include "twrc/gaussian.hpp"

namespace twrc {

namespace {

void require_order(int q) {
    if (q < 2) throw std::domain_error("PamScheme: modulation order must be >= 2");
}

// Nearest uniformly spaced point with midpoint thresholds. Points sit at
// lowest + m*d; an exact midpoint resolves to the lower index.
int nearest_index(double y, double lowest, double d, int npoints) {
    const double t = (y - lowest) / d;
    int m = static_cast<int>(std::ceil(t - 0.5));
    if (m < 0) m = 0;
    if (m > npoints - 1) m = npoints - 1;
    return m;
}

}  // namespace

PamScheme PamScheme::from_power(int q, double power) {
    require_order(q);
    if (!std::isfinite(power) || power <= 0.0)
        throw std::domain_error("PamScheme: power must be finite and > 0");
    const double alpha = std::sqrt(3.0 * power / (static_cast<double>(q) * q - 1.0));
    return {q, alpha, power};
}

PamScheme PamScheme::from_alpha(int q, double alpha) {
    require_order(q);
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("PamScheme: alpha must be finite and > 0");
    const double power = alpha * alpha * (static_cast<double>(q) * q - 1.0) / 3.0;
    return {q, alpha, power};
}

double SumConstellation::prob(int m) const {
    const int dist = m - (q - 1);
    return static_cast<double>(q - (dist < 0 ? -dist : dist)) /
           (static_cast<double>(q) * q);
}

std::vector<double> SumConstellation::points() const {
    std::vector<double> pts(size());
    for (int m = 0; m < size(); ++m) pts[m] = point(m);
    return pts;
}

std::vector<double> SumConstellation::probs() const {
    std::vector<double> pr(size());
    for (int m = 0; m < size(); ++m) pr[m] = prob(m);
    return pr;
}

std::vector<double> modulate(const QPacket& u, const PamScheme& s) {
    if (u.q != s.q) throw std::domain_error("modulate: packet modulus does not match scheme");
    std::vector<double> x(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) x[k] = s.point(u[k]);
    return x;
}

int detect_pam_symbol(double y, const PamScheme& s) {
    return nearest_index(y, s.point(0), s.spacing(), s.q);
}

std::vector<int> detect_pam(std::span<const double> y, const PamScheme& s) {
    std::vector<int> u(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) u[k] = detect_pam_symbol(y[k], s);
    return u;
}

int detect_sum_symbol(double y, const SumConstellation& sc) {
    return nearest_index(y, sc.point(0), sc.spacing(), sc.size());
}

std::vector<int> detect_sum(std::span<const double> y, const SumConstellation& sc) {
    std::vector<int> m(y.size());
    for (std::size_t k = 0; k < y.size(); ++k) m[k] = detect_sum_symbol(y[k], sc);
    return m;
}

int pnc_demap(int m_hat, int q) {
    if (m_hat < 0 || m_hat > 2 * q - 2)
        throw std::domain_error("pnc_demap: sum index out of range");
    return m_hat % q;
}

std::vector<int> pnc_demap(std::span<const int> m_hat, int q) {
    std::vector<int> out(m_hat.size());
    for (std::size_t k = 0; k < m_hat.size(); ++k) out[k] = pnc_demap(m_hat[k], q);
    return out;
}

double ser_p2p_analytic(const PamScheme& s) {
    // Interior points err on either side, the two edge points on one side:
    // (q-1)/q = (q-2)/q + 2 * (1/q) * (1/2) of the two-sided tail at d/2.
    const double tail = gaussian_two_sided_tail(s.spacing() / 2.0);
    return (static_cast<double>(s.q) - 1.0) / s.q * tail;
}

double ser_sum_analytic(const PamScheme& s) {
    // Probability-weighted mix over the superimposed constellation: the two
    // end points (occupancy 1/q^2 each) see a one-sided tail, every interior
    // point the two-sided tail. Spacing matches the single-signal case.
    const SumConstellation sc(s);
    const double tail = gaussian_two_sided_tail(sc.spacing() / 2.0);
    const double one_sided = 0.5 * tail;
    const double p_end = sc.prob(0) + sc.prob(sc.size() - 1);
    return p_end * one_sided + (1.0 - p_end) * tail;
}

}  // namespace twrc
