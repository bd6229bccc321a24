#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "twrc/netfn.hpp"

using namespace twrc;

namespace {

NetFn random_netfn(int q, int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> out(0, m - 1);
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (auto& v : t) v = out(rng);
    return NetFn(q, m, std::move(t));
}

}  // namespace

TEST_CASE("table construction is validated") {
    CHECK_THROWS_AS(NetFn(1, 1, {0}), std::domain_error);
    CHECK_THROWS_AS(NetFn(2, 2, {0, 1, 1}), std::domain_error);      // not q x q
    CHECK_THROWS_AS(NetFn(2, 2, {0, 1, 1, 2}), std::domain_error);   // entry >= m
    CHECK_THROWS_AS(NetFn(2, 2, {0, 1, 1, -1}), std::domain_error);  // negative
    CHECK_THROWS_AS(netfn_xor(3), std::domain_error);  // not a power of two
}

TEST_CASE("symbol-wise evaluation") {
    const NetFn f = netfn_xor(2);
    const QPacket out = eval(f, QPacket(2, {0, 1, 1}), QPacket(2, {1, 1, 0}));
    CHECK(out == QPacket(2, {1, 0, 1}));

    const NetFn add4 = netfn_modq_add(4);
    CHECK(eval(add4, QPacket(4, {2}), QPacket(4, {3})) == QPacket(4, {1}));

    const NetFn c = netfn_const(2);
    const QPacket z = eval(c, QPacket(2, {0, 1, 0}), QPacket(2, {1, 1, 0}));
    CHECK(z.q == 1);
    CHECK(z.symbols == std::vector<int>{0, 0, 0});

    CHECK_THROWS_AS(eval(f, QPacket(2, {0}), QPacket(2, {0, 1})), std::domain_error);
    CHECK_THROWS_AS(eval(f, QPacket(4, {0}), QPacket(2, {0})), std::domain_error);
}

TEST_CASE("condition checker reproduces the three canonical examples") {
    // Finite-field addition: both conditions hold exactly.
    const NetFnReport x = check_conditions(netfn_xor(2));
    CHECK(x.h_w2_given_w1w3 <= 1e-9);
    CHECK(x.h_w1_given_w2w3 <= 1e-9);
    CHECK(x.i_w3_w1 <= 1e-9);
    CHECK(x.i_w3_w2 <= 1e-9);
    CHECK(x.valid);

    // Plain integer sum: recoverable but the output leaks half a bit about
    // each input (H(W3) = 1.5, H(W3|W1) = 1 over the 4 equiprobable pairs).
    const NetFnReport s = check_conditions(netfn_int_sum(2));
    CHECK(s.satisfies_recoverability);
    CHECK(s.h_w2_given_w1w3 <= 1e-9);
    CHECK(s.i_w3_w1 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(s.i_w3_w2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_FALSE(s.satisfies_independence);
    CHECK_FALSE(s.valid);

    // Constant relay output: independent but nothing recoverable.
    const NetFnReport c = check_conditions(netfn_const(2));
    CHECK(c.satisfies_independence);
    CHECK(c.i_w3_w1 <= 1e-9);
    CHECK(c.h_w2_given_w1w3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.h_w1_given_w2w3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(c.satisfies_recoverability);
    CHECK_FALSE(c.valid);

    CHECK_THROWS_AS(check_conditions(netfn_xor(2), 0.0), std::domain_error);
}

TEST_CASE("modulo-q addition is valid for q = 2..8") {
    for (int q = 2; q <= 8; ++q) {
        const NetFnReport rep = check_conditions(netfn_modq_add(q));
        CHECK(rep.valid);
        CHECK(rep.h_w2_given_w1w3 < 1e-9);
        CHECK(rep.h_w1_given_w2w3 < 1e-9);
        CHECK(rep.i_w3_w1 < 1e-9);
        CHECK(rep.i_w3_w2 < 1e-9);
    }
}

TEST_CASE("xor is valid for power-of-two q") {
    for (int q : {2, 4, 8}) CHECK(check_conditions(netfn_xor(q)).valid);
}

TEST_CASE("relabeling an input of a valid table preserves validity") {
    std::mt19937_64 rng(4242);
    for (int q : {2, 3, 4, 5, 7}) {
        const NetFn base = netfn_modq_add(q);
        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 10; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> t(static_cast<std::size_t>(q) * q);
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b) t[a * q + b] = base(perm[a], b);
            CHECK(check_conditions(NetFn(q, q, t)).valid);
        }
    }
}

TEST_CASE("entropy identities hold for arbitrary tables") {
    std::mt19937_64 rng(1337);
    for (int q : {2, 3, 4}) {
        for (int trial = 0; trial < 100; ++trial) {
            const int m = 1 + static_cast<int>(rng() % (2 * q));
            const IdentityResiduals res = verify_identity_chain(random_netfn(q, m, rng));
            CHECK(res.chain_rule <= 1e-9);
            CHECK(res.info_decomposition <= 1e-9);
        }
    }
    const IdentityResiduals x = verify_identity_chain(netfn_xor(2));
    CHECK(x.chain_rule <= 1e-12);
    CHECK(x.info_decomposition <= 1e-12);
    const IdentityResiduals c = verify_identity_chain(netfn_const(4));
    CHECK(c.chain_rule <= 1e-9);
    CHECK(c.info_decomposition <= 1e-9);
}

TEST_CASE("output alphabet may exceed q") {
    const NetFn s = netfn_int_sum(4);
    CHECK(s.output_size == 7);
    CHECK(s(3, 3) == 6);
    // Entropies are computed over the actual support without complaint.
    const NetFnReport rep = check_conditions(s);
    CHECK(rep.satisfies_recoverability);
    CHECK_FALSE(rep.valid);
}

TEST_CASE("table file round trip and parse errors") {
    const NetFn f = netfn_int_sum(3);
    std::stringstream buf;
    save_netfn(f, buf);
    const NetFn g = load_netfn(buf);
    CHECK(g.q == f.q);
    CHECK(g.output_size == f.output_size);
    CHECK(g.table == f.table);

    std::stringstream empty;
    CHECK_THROWS_AS(load_netfn(empty), std::domain_error);
    std::stringstream truncated("2 2\n0 1\n");
    CHECK_THROWS_AS(load_netfn(truncated), std::domain_error);
    std::stringstream bad_entry("2 2\n0 1\n1 5\n");
    CHECK_THROWS_AS(load_netfn(bad_entry), std::domain_error);
    CHECK_THROWS_AS(load_netfn_file("/nonexistent/netfn.txt"), std::domain_error);
}

TEST_CASE("builtin lookup by name") {
    CHECK(netfn_builtin("xor", 4).output_size == 4);
    CHECK(netfn_builtin("modq-add", 5).output_size == 5);
    CHECK(netfn_builtin("int-sum", 3).output_size == 5);
    CHECK(netfn_builtin("const", 3).output_size == 1);
    CHECK_THROWS_AS(netfn_builtin("nope", 2), std::domain_error);
}
