#include "qmc/circuit.hpp"

#include <cmath>

namespace qmc {

namespace kernel {

void hadamard(Eigen::Ref<Eigen::VectorXcd> amps, int m, int qubit) {
    const std::uint64_t n = std::uint64_t{1} << m;
    const std::uint64_t mask = qubit_mask(m, qubit);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Complex* a = amps.data();
    for (std::uint64_t i = 0; i < n; ++i) {
        if (i & mask) continue;
        const std::uint64_t j = i | mask;
        const Complex lo = a[i], hi = a[j];
        a[i] = (lo + hi) * inv_sqrt2;
        a[j] = (lo - hi) * inv_sqrt2;
    }
}

void phase(Eigen::Ref<Eigen::VectorXcd> amps, int m, int qubit, double theta) {
    const std::uint64_t n = std::uint64_t{1} << m;
    const std::uint64_t mask = qubit_mask(m, qubit);
    const Complex w = std::polar(1.0, theta);
    Complex* a = amps.data();
    for (std::uint64_t i = 0; i < n; ++i)
        if (i & mask) a[i] *= w;
}

void cnot(Eigen::Ref<Eigen::VectorXcd> amps, int m, int control, int target) {
    const std::uint64_t n = std::uint64_t{1} << m;
    const std::uint64_t cmask = qubit_mask(m, control);
    const std::uint64_t tmask = qubit_mask(m, target);
    Complex* a = amps.data();
    for (std::uint64_t i = 0; i < n; ++i)
        if ((i & cmask) && !(i & tmask)) std::swap(a[i], a[i | tmask]);
}

} // namespace kernel

namespace {

double normalize_angle(double theta) {
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0) theta += 2.0 * kPi;
    return theta;
}

void check_qubit_range(const GateOp& op, int m) {
    auto ok = [m](int q) { return q >= 0 && q < m; };
    switch (op.kind) {
    case GateKind::WalshHadamard:
    case GateKind::PhaseShift:
        if (!ok(op.qubit)) throw std::domain_error("gate qubit index out of range");
        break;
    case GateKind::ControlledNot:
        if (!ok(op.control) || !ok(op.target))
            throw std::domain_error("gate qubit index out of range");
        break;
    case GateKind::Compound:
        for (int q : op.qubits)
            if (!ok(q)) throw std::domain_error("compound qubit index out of range");
        break;
    }
}

} // namespace

GateOp walsh_hadamard(int qubit) {
    GateOp op;
    op.kind = GateKind::WalshHadamard;
    op.qubit = qubit;
    return op;
}

GateOp phase_shift(int qubit, double theta) {
    GateOp op;
    op.kind = GateKind::PhaseShift;
    op.qubit = qubit;
    op.theta = normalize_angle(theta);
    return op;
}

GateOp controlled_not(int control, int target) {
    if (control == target)
        throw std::domain_error("controlled_not: control and target must differ");
    GateOp op;
    op.kind = GateKind::ControlledNot;
    op.control = control;
    op.target = target;
    return op;
}

GateOp compound(std::string label, std::vector<int> qubits,
                std::function<void(StateVector&)> action,
                long declared_gate_cost, long query_count) {
    GateOp op;
    op.kind = GateKind::Compound;
    op.label = std::move(label);
    op.qubits = std::move(qubits);
    op.action = std::move(action);
    op.declared_gate_cost = declared_gate_cost;
    op.query_count = query_count;
    return op;
}

Circuit& Circuit::push(GateOp op) {
    check_qubit_range(op, num_qubits);
    ops.push_back(std::move(op));
    return *this;
}

long Circuit::query_count() const {
    long q = 0;
    for (const auto& op : ops) q += op.query_count;
    return q;
}

void apply_gate(StateVector& psi, const GateOp& op) {
    check_qubit_range(op, psi.num_qubits);
    switch (op.kind) {
    case GateKind::WalshHadamard:
        kernel::hadamard(psi.amps, psi.num_qubits, op.qubit);
        break;
    case GateKind::PhaseShift:
        kernel::phase(psi.amps, psi.num_qubits, op.qubit, op.theta);
        break;
    case GateKind::ControlledNot:
        kernel::cnot(psi.amps, psi.num_qubits, op.control, op.target);
        break;
    case GateKind::Compound:
        op.action(psi);
        break;
    }
}

void apply_circuit(StateVector& psi, const Circuit& circuit) {
    if (circuit.num_qubits != psi.num_qubits)
        throw std::domain_error("apply_circuit: qubit count mismatch");
    for (const auto& op : circuit.ops) apply_gate(psi, op);
}

CostReport tally_cost(const Circuit& circuit) {
    CostReport r;
    r.num_qubits = circuit.num_qubits;
    for (const auto& op : circuit.ops) {
        if (op.kind == GateKind::Compound) {
            r.num_queries += op.query_count;
            r.num_elementary_gates += op.declared_gate_cost;
        } else {
            r.num_elementary_gates += 1;
        }
    }
    r.total_cost = r.num_queries * r.num_qubits + r.num_elementary_gates;
    return r;
}

GateOp make_toffoli(int c1, int c2, int target) {
    if (c1 == c2 || c1 == target || c2 == target)
        throw std::domain_error("make_toffoli: qubits must be distinct");
    auto action = [c1, c2, target](StateVector& psi) {
        const int m = psi.num_qubits;
        const std::uint64_t n = std::uint64_t{1} << m;
        const std::uint64_t m1 = qubit_mask(m, c1);
        const std::uint64_t m2 = qubit_mask(m, c2);
        const std::uint64_t mt = qubit_mask(m, target);
        Complex* a = psi.amps.data();
        for (std::uint64_t i = 0; i < n; ++i)
            if ((i & m1) && (i & m2) && !(i & mt)) std::swap(a[i], a[i | mt]);
    };
    return compound("toffoli", {c1, c2, target}, std::move(action), kToffoliGateCost);
}

std::vector<GateOp> toffoli_elementary(int c1, int c2, int target) {
    const double t = kPi / 4.0;        // P_{pi/4}
    const double td = 2.0 * kPi - t;   // its inverse
    std::vector<GateOp> ops;
    ops.push_back(walsh_hadamard(target));
    ops.push_back(controlled_not(c2, target));
    ops.push_back(phase_shift(target, td));
    ops.push_back(controlled_not(c1, target));
    ops.push_back(phase_shift(target, t));
    ops.push_back(controlled_not(c2, target));
    ops.push_back(phase_shift(target, td));
    ops.push_back(controlled_not(c1, target));
    ops.push_back(phase_shift(c2, t));
    ops.push_back(phase_shift(target, t));
    ops.push_back(walsh_hadamard(target));
    ops.push_back(controlled_not(c1, c2));
    ops.push_back(phase_shift(c1, t));
    ops.push_back(phase_shift(c2, td));
    ops.push_back(controlled_not(c1, c2));
    return ops;
}

GateOp make_reflect_zero(int first, int count) {
    if (count < 1) throw std::domain_error("make_reflect_zero: empty register");
    std::vector<int> qs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) qs[static_cast<std::size_t>(i)] = first + i;
    auto action = [first, count](StateVector& psi) {
        const int m = psi.num_qubits;
        std::uint64_t mask = 0;
        for (int q = first; q < first + count; ++q) mask |= qubit_mask(m, q);
        const std::uint64_t n = std::uint64_t{1} << m;
        Complex* a = psi.amps.data();
        for (std::uint64_t i = 0; i < n; ++i)
            if ((i & mask) == 0) a[i] = -a[i];
    };
    return compound("reflect0", std::move(qs),
                    std::move(action), static_cast<long>(count) * count);
}

GateOp make_inverse_qft(int t) {
    if (t < 1) throw std::domain_error("make_inverse_qft: need t >= 1");
    std::vector<int> qs(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) qs[static_cast<std::size_t>(i)] = i;
    auto action = [t](StateVector& psi) {
        const Eigen::Index M = Eigen::Index{1} << t;
        const Eigen::Index rest = psi.dim() / M;
        const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(M));
        Eigen::VectorXcd phases(M);
        for (Eigen::Index k = 0; k < M; ++k)
            phases[k] = std::polar(1.0, -2.0 * kPi * static_cast<double>(k) /
                                            static_cast<double>(M));
        Eigen::VectorXcd col(M), out(M);
        for (Eigen::Index s = 0; s < rest; ++s) {
            for (Eigen::Index y = 0; y < M; ++y) col[y] = psi.amps[y * rest + s];
            for (Eigen::Index z = 0; z < M; ++z) {
                Complex acc{0.0, 0.0};
                for (Eigen::Index y = 0; y < M; ++y)
                    acc += phases[(z * y) % M] * col[y];
                out[z] = acc * inv_sqrt_m;
            }
            for (Eigen::Index z = 0; z < M; ++z) psi.amps[z * rest + s] = out[z];
        }
    };
    const long lt = t;
    return compound("iqft", std::move(qs), std::move(action), lt * (lt + 1) / 2 + lt);
}

} // namespace qmc
