#pragma once

#include <cstddef>
#include <random>

#include "twrc/channel.hpp"
#include "twrc/code.hpp"
#include "twrc/pam.hpp"
#include "twrc/qpacket.hpp"

namespace twrc {

// Outcome of one uplink trial. symbol_errors counts demapped codeword
// symbols that differ from the true modulo-q codeword sum (before
// decoding); packet_error compares the decoded message against the
// modulo-q sum of the two transmitted messages.
struct ChainResult {
    std::size_t symbol_errors = 0;
    bool packet_error = false;
    QPacket decoded;
    QPacket truth;
};

// Full relay uplink: both ends encode with the same code and modulate with
// the same scheme, the signals superimpose in AWGN, the relay detects the
// sum constellation, demaps each symbol modulo q and decodes the result.
// The individual messages are never decoded.
ChainResult pnc_chain_trial(const RingLinearCode& c, const PamScheme& s,
                            const QPacket& w1, const QPacket& w2,
                            std::mt19937_64& rng, double noise_stddev = 1.0);

ChainResult pnc_chain_trial(const RingLinearCode& c, const PamScheme& s,
                            const QPacket& w1, const QPacket& w2,
                            const NoiseModel& nm);

}  // namespace twrc
