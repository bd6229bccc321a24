#include "twrc/chain.hpp"

#include <stdexcept>

namespace twrc {

ChainResult pnc_chain_trial(const RingLinearCode& c, const PamScheme& s,
                            const QPacket& w1, const QPacket& w2,
                            std::mt19937_64& rng, double noise_stddev) {
    if (c.q != s.q)
        throw std::domain_error("pnc_chain_trial: code and scheme modulus mismatch");

    const QPacket u1 = encode(c, w1);
    const QPacket u2 = encode(c, w2);
    const std::vector<double> x1 = modulate(u1, s);
    const std::vector<double> x2 = modulate(u2, s);
    const std::vector<double> y = superimpose_and_noise(x1, x2, rng, noise_stddev);

    const SumConstellation sc(s);
    const std::vector<int> m_hat = detect_sum(y, sc);
    const QPacket demapped(c.q, pnc_demap(m_hat, c.q));

    const QPacket u_sum = add_modq(u1, u2);
    ChainResult res;
    for (std::size_t k = 0; k < demapped.size(); ++k)
        res.symbol_errors += (demapped[k] != u_sum[k]);

    res.decoded = decode_nearest(c, demapped);
    res.truth = add_modq(w1, w2);
    res.packet_error = (res.decoded != res.truth);
    return res;
}

ChainResult pnc_chain_trial(const RingLinearCode& c, const PamScheme& s,
                            const QPacket& w1, const QPacket& w2,
                            const NoiseModel& nm) {
    std::mt19937_64 rng(nm.seed);
    return pnc_chain_trial(c, s, w1, w2, rng, nm.stddev);
}

}  // namespace twrc
