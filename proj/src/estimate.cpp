#include "qmc/estimate.hpp"

#include <cmath>

namespace qmc {

namespace {

using Block = Eigen::Ref<Eigen::VectorXcd>;

int block_qubits(const Block& amps) {
    return floor_log2(static_cast<std::uint64_t>(amps.size()));
}

void block_hadamard_range(Block amps, int first, int count) {
    const int m = block_qubits(amps);
    for (int q = first; q < first + count; ++q) kernel::hadamard(amps, m, q);
}

// NOT on the trailing qubit.
void block_not_last(Block amps) {
    Complex* a = amps.data();
    for (Eigen::Index i = 0; i < amps.size(); i += 2) std::swap(a[i], a[i + 1]);
}

// S_chi: sign flip of the marked (ancilla = 1) states.
void block_ancilla_phase_flip(Block amps) {
    Complex* a = amps.data();
    for (Eigen::Index i = 1; i < amps.size(); i += 2) a[i] = -a[i];
}

// 2|0><0| - I on the whole block.
void block_reflect_about_zero(Block amps) {
    Complex* a = amps.data();
    for (Eigen::Index i = 1; i < amps.size(); ++i) a[i] = -a[i];
}

long reflect_zero_cost(int count) { return static_cast<long>(count) * count + 1; }

long value_rotation_cost(int m2) {
    // Per-value controlled-rotation cascade off the value register.
    return (long{1} << m2) * (static_cast<long>(m2) * m2 + 2);
}

std::uint64_t sample_distribution(const Eigen::VectorXd& p, Rng& rng) {
    const double u = uniform01(rng) * p.sum();
    double cum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        cum += p[i];
        if (u < cum) return static_cast<std::uint64_t>(i);
    }
    return static_cast<std::uint64_t>(p.size() - 1);
}

// |sum_{y<M} e^{2 pi i x y / M}|^2 / M^2: 1 at x = 0 mod M.
double fejer_kernel(double x, double m) {
    const double r = x - m * std::round(x / m);
    if (std::abs(r) < 1e-9) return 1.0;
    const double s = std::sin(kPi * r / m);
    const double num = std::sin(kPi * r);
    return (num * num) / (m * m * s * s);
}

} // namespace

MarkedPreparation make_boolean_preparation(const BooleanOracle& oracle) {
    MarkedPreparation prep;
    const int m1 = oracle.index_qubits;
    prep.system_qubits = m1 + 1;
    prep.success_probability =
        static_cast<double>(oracle.count_marked()) / static_cast<double>(oracle.length());
    prep.queries_per_grover = 1;
    prep.prep_queries = 0;
    prep.prep_gates = m1 + 4;  // index W's, NOT (as W P_pi W) and W on the ancilla
    prep.gates_per_grover = 2 * (m1 + 4) + reflect_zero_cost(m1 + 1);
    prep.label = "boolean";
    prep.prepare = [m1](Block amps) {
        block_not_last(amps);
        kernel::hadamard(amps, block_qubits(amps), m1);
        block_hadamard_range(amps, 0, m1);
    };
    prep.grover = [m1, oracle](Block amps) {
        apply_boolean_query(amps, oracle);  // phase kickback off the |-> ancilla
        block_hadamard_range(amps, 0, m1);  // A^dag
        kernel::hadamard(amps, block_qubits(amps), m1);
        block_not_last(amps);
        block_reflect_about_zero(amps);
        block_not_last(amps);               // A
        kernel::hadamard(amps, block_qubits(amps), m1);
        block_hadamard_range(amps, 0, m1);
    };
    return prep;
}

MarkedPreparation make_rotation_preparation(const SequenceOracle& oracle) {
    MarkedPreparation prep;
    const int m1 = oracle.index_qubits;
    prep.system_qubits = m1 + 1;
    prep.success_probability = oracle.mean_unit();
    prep.queries_per_grover = 2;
    prep.prep_queries = 1;
    prep.prep_gates = m1;
    prep.gates_per_grover = 2 * m1 + reflect_zero_cost(m1 + 1) + 1;
    prep.label = "rotation";
    prep.prepare = [m1, oracle](Block amps) {
        block_hadamard_range(amps, 0, m1);
        apply_rotation_query(amps, oracle);
    };
    prep.grover = [m1, oracle](Block amps) {
        block_ancilla_phase_flip(amps);
        apply_rotation_query(amps, oracle, /*inverse=*/true);
        block_hadamard_range(amps, 0, m1);
        block_reflect_about_zero(amps);
        block_hadamard_range(amps, 0, m1);
        apply_rotation_query(amps, oracle);
    };
    return prep;
}

MarkedPreparation make_bit_value_preparation(const SequenceOracle& oracle) {
    MarkedPreparation prep;
    const int m1 = oracle.index_qubits;
    const int m2 = oracle.value_qubits;
    prep.system_qubits = m1 + m2 + 1;
    prep.success_probability = oracle.mean_unit();
    prep.queries_per_grover = 2;
    prep.prep_queries = 1;
    prep.prep_gates = m1 + value_rotation_cost(m2);
    prep.gates_per_grover =
        2 * m1 + 2 * value_rotation_cost(m2) + reflect_zero_cost(m1 + m2 + 1) + 1;
    prep.label = "bit-value";
    prep.prepare = [m1, m2, oracle](Block amps) {
        block_hadamard_range(amps, 0, m1);
        apply_bit_query(amps, oracle, /*tail_qubits=*/1);
        apply_value_rotation(amps, m2);
    };
    prep.grover = [m1, m2, oracle](Block amps) {
        block_ancilla_phase_flip(amps);
        apply_value_rotation(amps, m2, /*inverse=*/true);
        apply_bit_query(amps, oracle, /*tail_qubits=*/1, /*inverse=*/true);
        block_hadamard_range(amps, 0, m1);
        block_reflect_about_zero(amps);
        block_hadamard_range(amps, 0, m1);
        apply_bit_query(amps, oracle, /*tail_qubits=*/1);
        apply_value_rotation(amps, m2);
    };
    return prep;
}

MarkedPreparation make_amplitude_preparation(double a) {
    if (a < 0.0 || a > 1.0)
        throw std::domain_error("make_amplitude_preparation: a outside [0,1]");
    MarkedPreparation prep;
    prep.system_qubits = 1;
    prep.success_probability = a;
    prep.queries_per_grover = 2;
    prep.prep_queries = 1;
    prep.prep_gates = 0;
    prep.gates_per_grover = reflect_zero_cost(1) + 1;
    prep.label = "amplitude";
    const double c = std::sqrt(1.0 - a);
    const double s = std::sqrt(a);
    auto rotate = [c, s](Block amps, bool inverse) {
        const double sg = inverse ? -s : s;
        Complex* v = amps.data();
        const Complex a0 = v[0], a1 = v[1];
        v[0] = c * a0 - sg * a1;
        v[1] = sg * a0 + c * a1;
    };
    prep.prepare = [rotate](Block amps) { rotate(amps, false); };
    prep.grover = [rotate](Block amps) {
        block_ancilla_phase_flip(amps);
        rotate(amps, true);
        block_reflect_about_zero(amps);
        rotate(amps, false);
    };
    return prep;
}

int grover_iterations(std::int64_t n) {
    return static_cast<int>(std::floor(kPi / 4.0 * std::sqrt(static_cast<double>(n))));
}

Circuit grover_circuit(const BooleanOracle& oracle) {
    if (oracle.length() < 2) throw std::domain_error("grover_circuit: need N >= 2");
    const int m1 = oracle.index_qubits;
    const MarkedPreparation prep = make_boolean_preparation(oracle);
    std::vector<int> all(static_cast<std::size_t>(m1 + 1));
    for (int q = 0; q <= m1; ++q) all[static_cast<std::size_t>(q)] = q;

    Circuit c(m1 + 1);
    auto prepare_fn = prep.prepare;
    c.push(compound("prepare-" + prep.label, all,
                    [prepare_fn](StateVector& psi) { prepare_fn(psi.amps); },
                    prep.prep_gates, prep.prep_queries));
    const int k = grover_iterations(oracle.length());
    auto grover_fn = prep.grover;
    for (int it = 0; it < k; ++it)
        c.push(compound("grover-iteration", all,
                        [grover_fn](StateVector& psi) { grover_fn(psi.amps); },
                        prep.gates_per_grover, prep.queries_per_grover));
    return c;
}

std::int64_t grover_search(const BooleanOracle& oracle, Rng& rng) {
    const int m1 = oracle.index_qubits;
    StateVector psi = init_classical(m1 + 1, 0);
    apply_circuit(psi, grover_circuit(oracle));
    return static_cast<std::int64_t>(measure_top(psi, m1, rng));
}

Circuit amplitude_estimation_circuit(const MarkedPreparation& prep, int phase_bits) {
    if (phase_bits < 1) throw std::domain_error("amplitude estimation: need t >= 1");
    const int t = phase_bits;
    const int msys = prep.system_qubits;
    Circuit c(t + msys);
    for (int r = 0; r < t; ++r) c.w(r);

    std::vector<int> sys_qubits(static_cast<std::size_t>(msys));
    for (int q = 0; q < msys; ++q) sys_qubits[static_cast<std::size_t>(q)] = t + q;

    const Eigen::Index block = Eigen::Index{1} << msys;
    auto prepare_fn = prep.prepare;
    c.push(compound("prepare-" + prep.label, sys_qubits,
                    [prepare_fn, block](StateVector& psi) {
                        const Eigen::Index slices = psi.dim() / block;
                        for (Eigen::Index y = 0; y < slices; ++y)
                            prepare_fn(psi.amps.segment(y * block, block));
                    },
                    prep.prep_gates, prep.prep_queries));

    for (int r = 0; r < t; ++r) {
        const long p = long{1} << (t - 1 - r);
        std::vector<int> qubits = sys_qubits;
        qubits.insert(qubits.begin(), r);
        auto grover_fn = prep.grover;
        const int shift = t - 1 - r;
        c.push(compound("c-grover^" + std::to_string(p), std::move(qubits),
                        [grover_fn, block, p, shift](StateVector& psi) {
                            const Eigen::Index slices = psi.dim() / block;
                            for (Eigen::Index y = 0; y < slices; ++y) {
                                if (!((y >> shift) & 1)) continue;
                                auto seg = psi.amps.segment(y * block, block);
                                for (long i = 0; i < p; ++i) grover_fn(seg);
                            }
                        },
                        p * prep.gates_per_grover, p * prep.queries_per_grover));
    }
    c.push(make_inverse_qft(t));
    return c;
}

Eigen::VectorXd phase_outcome_distribution(double a, int phase_bits) {
    const Eigen::Index m = Eigen::Index{1} << phase_bits;
    const double md = static_cast<double>(m);
    const double theta = std::asin(std::sqrt(std::clamp(a, 0.0, 1.0)));
    const double x0 = md * theta / kPi;
    Eigen::VectorXd p(m);
    for (Eigen::Index z = 0; z < m; ++z) {
        const double zd = static_cast<double>(z);
        p[z] = 0.5 * (fejer_kernel(zd - x0, md) + fejer_kernel(zd + x0, md));
    }
    p /= p.sum();
    return p;
}

Eigen::VectorXd phase_distribution_full(const MarkedPreparation& prep, int phase_bits) {
    const int t = phase_bits;
    if (t + prep.system_qubits > kMaxQubits)
        throw std::domain_error("phase_distribution_full: register exceeds the qubit budget");
    Circuit c = amplitude_estimation_circuit(prep, t);
    StateVector psi = init_classical(t + prep.system_qubits, 0);
    apply_circuit(psi, c);
    const Eigen::Index m = Eigen::Index{1} << t;
    const Eigen::Index block = Eigen::Index{1} << prep.system_qubits;
    Eigen::VectorXd p(m);
    for (Eigen::Index z = 0; z < m; ++z)
        p[z] = psi.amps.segment(z * block, block).squaredNorm();
    return p;
}

double amplitude_estimate(const MarkedPreparation& prep, int phase_bits, Rng& rng,
                          SimMode mode) {
    const int t = phase_bits;
    if (mode == SimMode::Auto)
        mode = (t + prep.system_qubits <= 12) ? SimMode::FullStatevector : SimMode::TwoLevel;
    std::uint64_t y;
    if (mode == SimMode::FullStatevector) {
        Circuit c = amplitude_estimation_circuit(prep, t);
        StateVector psi = init_classical(t + prep.system_qubits, 0);
        apply_circuit(psi, c);
        y = measure_top(psi, t, rng);
    } else {
        const Eigen::VectorXd dist = phase_outcome_distribution(prep.success_probability, t);
        y = sample_distribution(dist, rng);
    }
    const double s = std::sin(kPi * static_cast<double>(y) / std::ldexp(1.0, t));
    return s * s;
}

double median_boost(std::vector<double> runs) {
    if (runs.empty() || runs.size() % 2 == 0)
        throw std::domain_error("median_boost: need an odd number of runs");
    return median_inplace(runs);
}

namespace {

EstimateResult run_estimation(const MarkedPreparation& prep, const EstimateConfig& cfg) {
    if (cfg.repetitions < 1 || cfg.repetitions % 2 == 0)
        throw std::domain_error("estimation: repetitions must be odd and positive");
    EstimateResult res;
    const Circuit circuit = amplitude_estimation_circuit(prep, cfg.phase_bits);
    const CostReport per_rep = tally_cost(circuit);
    res.queries_per_repetition = per_rep.num_queries;
    res.trials.reserve(static_cast<std::size_t>(cfg.repetitions));
    for (int rep = 0; rep < cfg.repetitions; ++rep) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(rep)));
        res.trials.push_back(amplitude_estimate(prep, cfg.phase_bits, rng, cfg.mode));
    }
    res.value = median_boost(res.trials);
    res.queries_used = per_rep.num_queries * cfg.repetitions;
    res.cost.num_qubits = per_rep.num_qubits;
    res.cost.num_queries = per_rep.num_queries * cfg.repetitions;
    res.cost.num_elementary_gates = per_rep.num_elementary_gates * cfg.repetitions;
    res.cost.total_cost =
        res.cost.num_queries * res.cost.num_qubits + res.cost.num_elementary_gates;
    return res;
}

} // namespace

EstimateResult mean_boolean(const BooleanOracle& oracle, const EstimateConfig& cfg) {
    return run_estimation(make_boolean_preparation(oracle), cfg);
}

EstimateResult mean_real(const SequenceOracle& oracle, const EstimateConfig& cfg,
                         bool bit_path) {
    const MarkedPreparation prep =
        bit_path ? make_bit_value_preparation(oracle) : make_rotation_preparation(oracle);
    EstimateResult res = run_estimation(prep, cfg);
    const double lo = oracle.range_lo, hi = oracle.range_hi;
    res.value = lo + (hi - lo) * res.value;
    for (double& v : res.trials) v = lo + (hi - lo) * v;
    return res;
}

} // namespace qmc
