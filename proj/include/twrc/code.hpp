#pragma once

#include <stdexcept>
#include <vector>

#include "twrc/qpacket.hpp"

namespace twrc {

// Raised when a request exceeds a hard capability limit rather than
// violating an input contract (e.g. a codebook too large to enumerate).
class CapabilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear block code over Z_q in systematic form: the generator's first k
// columns are the identity, so encoding is additive (the encoder commutes
// with symbol-wise modulo-q addition) and injective on messages.
struct RingLinearCode {
    int q = 2;
    int k = 1;
    int l = 1;
    std::vector<int> generator;  // k*l row-major over Z_q

    RingLinearCode(int q_, int k_, int l_, std::vector<int> generator_);

    int gen(int i, int j) const { return generator[i * l + j]; }
};

enum class CodeKind { Repetition, SingleParityCheck };

RingLinearCode make_repetition(int q, int l);         // k = 1
RingLinearCode make_single_parity_check(int q, int k);  // l = k + 1

// size is the block length l for Repetition, the message length k for
// SingleParityCheck.
RingLinearCode make_code(CodeKind kind, int q, int size);

QPacket encode(const RingLinearCode& c, const QPacket& w);

// Exact minimum-Hamming-distance decoding by codebook enumeration,
// limited to q^k <= 2^20. Ties go to the lexicographically smallest
// message so decoding is deterministic.
QPacket decode_nearest(const RingLinearCode& c, const QPacket& r);

}  // namespace twrc
