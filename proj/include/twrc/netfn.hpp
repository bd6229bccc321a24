#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twrc/qpacket.hpp"

namespace twrc {

// Relay combining function f : Z_q x Z_q -> {0, ..., output_size-1} given as
// an explicit q x q table, applied symbol-wise to packets. The output
// alphabet may be larger or smaller than q (e.g. the integer-sum table maps
// onto 2q-1 values, a constant table onto one).
struct NetFn {
    int q = 2;
    int output_size = 2;
    std::vector<int> table;  // q*q row-major: table[a*q + b] = f(a, b)

    NetFn(int q_, int output_size_, std::vector<int> table_);

    int operator()(int a, int b) const { return table[a * q + b]; }
};

// Verdict of the two relay-function requirements under independent uniform
// inputs: each end node must be able to recover the other's symbol from the
// relay output plus its own (both conditional entropies zero), and the relay
// output must carry no information about either input alone (both mutual
// informations zero). All quantities are in bits.
struct NetFnReport {
    double h_w2_given_w1w3 = 0.0;
    double h_w1_given_w2w3 = 0.0;
    double i_w3_w1 = 0.0;
    double i_w3_w2 = 0.0;
    bool satisfies_recoverability = false;
    bool satisfies_independence = false;
    bool valid = false;
};

// Floating-point residuals of two exact entropy identities that hold for
// every deterministic table:
//   H(W2|W1) = H(W3|W1) + H(W2|W1,W3)   (chain rule, H(W3|W1,W2) = 0)
//   H(W3)    = H(W3|W1) + I(W3;W1)
// Each side is computed by an independent route, so the residuals are a
// cross-check of the entropy code, not rearrangements of one formula.
struct IdentityResiduals {
    double chain_rule = 0.0;
    double info_decomposition = 0.0;
};

NetFn netfn_modq_add(int q);
NetFn netfn_xor(int q);      // q must be a power of two
NetFn netfn_int_sum(int q);  // plain integer sum, output alphabet 2q-1
NetFn netfn_const(int q);    // constant 0, output alphabet {0}

// One of "modq-add", "xor", "int-sum", "const".
NetFn netfn_builtin(std::string_view name, int q);

// Plain-text table format: first line "q m", then q rows of q integers.
NetFn load_netfn(std::istream& in);
NetFn load_netfn_file(const std::string& path);
void save_netfn(const NetFn& f, std::ostream& out);

// Symbol-wise application; packets must share length and modulus q = f.q.
// The result carries modulus f.output_size.
QPacket eval(const NetFn& f, const QPacket& w1, const QPacket& w2);

// Exact brute force over the q^2 equiprobable input pairs.
NetFnReport check_conditions(const NetFn& f, double tol = 1e-9);

IdentityResiduals verify_identity_chain(const NetFn& f);

}  // namespace twrc
