#include "twrc/qpacket.hpp"

#include <stdexcept>
#include <utility>

namespace twrc {

QPacket::QPacket(int modulus, std::vector<int> syms)
    : q(modulus), symbols(std::move(syms)) {
    if (q < 1) throw std::domain_error("QPacket: modulus must be >= 1");
    for (int s : symbols) {
        if (s < 0 || s >= q)
            throw std::domain_error("QPacket: symbol out of range for modulus");
    }
}

QPacket add_modq(const QPacket& a, const QPacket& b) {
    if (a.q != b.q) throw std::domain_error("add_modq: modulus mismatch");
    if (a.size() != b.size()) throw std::domain_error("add_modq: length mismatch");
    std::vector<int> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + b[k]) % a.q;
    return QPacket(a.q, std::move(out));
}

QPacket random_qpacket(int q, std::size_t len, std::mt19937_64& rng) {
    if (q < 1) throw std::domain_error("random_qpacket: modulus must be >= 1");
    std::uniform_int_distribution<int> dist(0, q - 1);
    std::vector<int> out(len);
    for (auto& s : out) s = dist(rng);
    return QPacket(q, std::move(out));
}

}  // namespace twrc
