#include "twrc/code.hpp"

#include <cstdint>
#include <utility>

namespace twrc {

namespace {

constexpr std::uint64_t kMaxCodebook = std::uint64_t{1} << 20;

std::uint64_t codebook_size(int q, int k) {
    std::uint64_t n = 1;
    for (int i = 0; i < k; ++i) {
        n *= static_cast<std::uint64_t>(q);
        if (n > kMaxCodebook) return kMaxCodebook + 1;
    }
    return n;
}

// Lexicographic odometer over Z_q^k; returns false after the last message.
bool next_message(std::vector<int>& m, int q) {
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
        if (++m[i] < q) return true;
        m[i] = 0;
    }
    return false;
}

}  // namespace

RingLinearCode::RingLinearCode(int q_, int k_, int l_, std::vector<int> generator_)
    : q(q_), k(k_), l(l_), generator(std::move(generator_)) {
    if (q < 2) throw std::domain_error("RingLinearCode: q must be >= 2");
    if (k < 1 || l < k) throw std::domain_error("RingLinearCode: need 1 <= k <= l");
    if (generator.size() != static_cast<std::size_t>(k) * l)
        throw std::domain_error("RingLinearCode: generator must be k x l");
    for (int v : generator) {
        if (v < 0 || v >= q)
            throw std::domain_error("RingLinearCode: generator entry out of range");
    }
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (gen(i, j) != (i == j ? 1 : 0))
                throw std::domain_error(
                    "RingLinearCode: generator must start with a k x k identity block");
        }
    }
}

RingLinearCode make_repetition(int q, int l) {
    if (l < 1) throw std::domain_error("make_repetition: l must be >= 1");
    return RingLinearCode(q, 1, l, std::vector<int>(static_cast<std::size_t>(l), 1));
}

RingLinearCode make_single_parity_check(int q, int k) {
    if (k < 1) throw std::domain_error("make_single_parity_check: k must be >= 1");
    const int l = k + 1;
    std::vector<int> g(static_cast<std::size_t>(k) * l, 0);
    for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i) * l + i] = 1;
        g[static_cast<std::size_t>(i) * l + k] = q - 1;  // parity = -sum mod q
    }
    return RingLinearCode(q, k, l, std::move(g));
}

RingLinearCode make_code(CodeKind kind, int q, int size) {
    switch (kind) {
        case CodeKind::Repetition: return make_repetition(q, size);
        case CodeKind::SingleParityCheck: return make_single_parity_check(q, size);
    }
    throw std::domain_error("make_code: unknown code kind");
}

QPacket encode(const RingLinearCode& c, const QPacket& w) {
    if (w.q != c.q) throw std::domain_error("encode: packet modulus does not match code");
    if (w.size() != static_cast<std::size_t>(c.k))
        throw std::domain_error("encode: message length must equal k");
    std::vector<int> u(static_cast<std::size_t>(c.l));
    for (int j = 0; j < c.l; ++j) {
        long long acc = 0;
        for (int i = 0; i < c.k; ++i) acc += static_cast<long long>(w[i]) * c.gen(i, j);
        u[j] = static_cast<int>(acc % c.q);
    }
    return QPacket(c.q, std::move(u));
}

QPacket decode_nearest(const RingLinearCode& c, const QPacket& r) {
    if (r.q != c.q) throw std::domain_error("decode_nearest: modulus mismatch");
    if (r.size() != static_cast<std::size_t>(c.l))
        throw std::domain_error("decode_nearest: received length must equal l");
    if (codebook_size(c.q, c.k) > kMaxCodebook)
        throw CapabilityError("decode_nearest: codebook q^k exceeds the 2^20 enumeration bound");

    std::vector<int> msg(static_cast<std::size_t>(c.k), 0);
    std::vector<int> best_msg = msg;
    int best_dist = c.l + 1;
    // Messages are visited in ascending lexicographic order and only a
    // strictly smaller distance replaces the incumbent, so ties resolve to
    // the lexicographically smallest message.
    do {
        const QPacket u = encode(c, QPacket(c.q, msg));
        int dist = 0;
        for (int j = 0; j < c.l; ++j) dist += (u[j] != r[j]);
        if (dist < best_dist) {
            best_dist = dist;
            best_msg = msg;
        }
    } while (next_message(msg, c.q));
    return QPacket(c.q, std::move(best_msg));
}

}  // namespace twrc
