#include "twrc/netfn.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "twrc/entropy.hpp"

namespace twrc {

NetFn::NetFn(int q_, int output_size_, std::vector<int> table_)
    : q(q_), output_size(output_size_), table(std::move(table_)) {
    if (q < 2) throw std::domain_error("NetFn: input alphabet must be >= 2");
    if (output_size < 1) throw std::domain_error("NetFn: output alphabet must be >= 1");
    if (table.size() != static_cast<std::size_t>(q) * q)
        throw std::domain_error("NetFn: table must be exactly q x q");
    for (int v : table) {
        if (v < 0 || v >= output_size)
            throw std::domain_error("NetFn: table entry out of output range");
    }
}

NetFn netfn_modq_add(int q) {
    if (q < 2) throw std::domain_error("netfn_modq_add: q must be >= 2");
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) t[a * q + b] = (a + b) % q;
    return NetFn(q, q, std::move(t));
}

NetFn netfn_xor(int q) {
    if (q < 2 || (q & (q - 1)) != 0)
        throw std::domain_error("netfn_xor: q must be a power of two");
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) t[a * q + b] = a ^ b;
    return NetFn(q, q, std::move(t));
}

NetFn netfn_int_sum(int q) {
    if (q < 2) throw std::domain_error("netfn_int_sum: q must be >= 2");
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) t[a * q + b] = a + b;
    return NetFn(q, 2 * q - 1, std::move(t));
}

NetFn netfn_const(int q) {
    if (q < 2) throw std::domain_error("netfn_const: q must be >= 2");
    return NetFn(q, 1, std::vector<int>(static_cast<std::size_t>(q) * q, 0));
}

NetFn netfn_builtin(std::string_view name, int q) {
    if (name == "modq-add") return netfn_modq_add(q);
    if (name == "xor") return netfn_xor(q);
    if (name == "int-sum") return netfn_int_sum(q);
    if (name == "const") return netfn_const(q);
    throw std::domain_error("netfn_builtin: unknown builtin '" + std::string(name) + "'");
}

NetFn load_netfn(std::istream& in) {
    int q = 0;
    int m = 0;
    if (!(in >> q >> m)) throw std::domain_error("load_netfn: missing 'q m' header");
    if (q < 2 || m < 1) throw std::domain_error("load_netfn: invalid alphabet sizes");
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (auto& v : t) {
        if (!(in >> v)) throw std::domain_error("load_netfn: truncated table");
    }
    return NetFn(q, m, std::move(t));
}

NetFn load_netfn_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("load_netfn: cannot open '" + path + "'");
    return load_netfn(in);
}

void save_netfn(const NetFn& f, std::ostream& out) {
    out << f.q << ' ' << f.output_size << '\n';
    for (int a = 0; a < f.q; ++a) {
        for (int b = 0; b < f.q; ++b) out << (b ? " " : "") << f(a, b);
        out << '\n';
    }
}

QPacket eval(const NetFn& f, const QPacket& w1, const QPacket& w2) {
    if (w1.q != f.q || w2.q != f.q)
        throw std::domain_error("eval: packet modulus does not match table");
    if (w1.size() != w2.size()) throw std::domain_error("eval: length mismatch");
    std::vector<int> out(w1.size());
    for (std::size_t k = 0; k < w1.size(); ++k) out[k] = f(w1[k], w2[k]);
    return QPacket(f.output_size, std::move(out));
}

namespace {

// Joint pmfs of (W1, W2, W3 = f(W1, W2)) for independent uniform inputs.
// Every atom has mass 1/q^2; marginals come out exactly rational.

JointPmf joint_input_output(const NetFn& f, bool first_input) {
    JointPmf j(static_cast<std::size_t>(f.q), static_cast<std::size_t>(f.output_size));
    const double w = 1.0 / (static_cast<double>(f.q) * f.q);
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b) j.at(first_input ? a : b, f(a, b)) += w;
    return j;
}

// X = (input, output) flattened, Y = the other input.
JointPmf joint_pair_other(const NetFn& f, bool first_input) {
    JointPmf j(static_cast<std::size_t>(f.q) * f.output_size,
               static_cast<std::size_t>(f.q));
    const double w = 1.0 / (static_cast<double>(f.q) * f.q);
    for (int a = 0; a < f.q; ++a) {
        for (int b = 0; b < f.q; ++b) {
            const int own = first_input ? a : b;
            const int other = first_input ? b : a;
            j.at(static_cast<std::size_t>(own) * f.output_size + f(a, b), other) += w;
        }
    }
    return j;
}

}  // namespace

NetFnReport check_conditions(const NetFn& f, double tol) {
    if (!(tol > 0.0)) throw std::domain_error("check_conditions: tol must be > 0");
    NetFnReport rep;
    rep.h_w2_given_w1w3 = conditional_entropy(joint_pair_other(f, true));
    rep.h_w1_given_w2w3 = conditional_entropy(joint_pair_other(f, false));
    rep.i_w3_w1 = mutual_information(joint_input_output(f, true));
    rep.i_w3_w2 = mutual_information(joint_input_output(f, false));
    rep.satisfies_recoverability =
        rep.h_w2_given_w1w3 <= tol && rep.h_w1_given_w2w3 <= tol;
    rep.satisfies_independence = rep.i_w3_w1 <= tol && rep.i_w3_w2 <= tol;
    rep.valid = rep.satisfies_recoverability && rep.satisfies_independence;
    return rep;
}

IdentityResiduals verify_identity_chain(const NetFn& f) {
    const double w = 1.0 / (static_cast<double>(f.q) * f.q);

    JointPmf j12(static_cast<std::size_t>(f.q), static_cast<std::size_t>(f.q));
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b) j12.at(a, b) += w;

    const JointPmf j13 = joint_input_output(f, true);
    std::vector<double> p3(static_cast<std::size_t>(f.output_size), 0.0);
    for (int a = 0; a < f.q; ++a)
        for (int b = 0; b < f.q; ++b) p3[f(a, b)] += w;

    const double h_w2_given_w1 = conditional_entropy(j12);
    const double h_w3_given_w1 = conditional_entropy(j13);
    const double h_w2_given_w1w3 = conditional_entropy(joint_pair_other(f, true));
    const double h_w3 = entropy(p3);
    const double i_w3_w1 = mutual_information(j13);

    IdentityResiduals res;
    res.chain_rule = std::abs(h_w2_given_w1 - h_w3_given_w1 - h_w2_given_w1w3);
    res.info_decomposition = std::abs(h_w3 - h_w3_given_w1 - i_w3_w1);
    return res;
}

}  // namespace twrc
