#pragma once

#include <cstddef>
#include <random>
#include <vector>

namespace twrc {

// Packet of symbols over Z_q, tagged with its modulus. Symbols are stored as
// plain ints in {0, ..., q-1}; the constructor rejects anything out of range.
struct QPacket {
    int q = 2;
    std::vector<int> symbols;

    QPacket() = default;
    QPacket(int modulus, std::vector<int> syms);

    std::size_t size() const { return symbols.size(); }
    int operator[](std::size_t k) const { return symbols[k]; }

    bool operator==(const QPacket&) const = default;
};

// Symbol-wise (a + b) mod q. Moduli and lengths must match.
QPacket add_modq(const QPacket& a, const QPacket& b);

// Uniform i.i.d. packet, q^len equiprobable outcomes.
QPacket random_qpacket(int q, std::size_t len, std::mt19937_64& rng);

}  // namespace twrc
