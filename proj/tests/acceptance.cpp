// Acceptance suite: one check per headline claim, each printed as a single
// pass/fail line with its elapsed time and runtime budget.

#include "qmc/cli.hpp"
#include "qmc/compiler.hpp"
#include "qmc/experiment.hpp"
#include "qmc/manifest.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qmc;

namespace {

struct Criterion {
    int id;
    std::string summary;
    double budget_seconds;
    std::function<void(std::vector<std::string>&)> run;
};

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

StateVector random_state(int m, Rng& rng) {
    StateVector psi;
    psi.num_qubits = m;
    psi.amps.resize(Eigen::Index{1} << m);
    for (Eigen::Index i = 0; i < psi.amps.size(); ++i)
        psi.amps[i] = Complex(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    psi.amps.normalize();
    return psi;
}

GateOp random_elementary(int m, Rng& rng) {
    const auto pick = uniform_index(rng, m >= 2 ? 3 : 2);
    const int q = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(m)));
    switch (pick) {
    case 0: return walsh_hadamard(q);
    case 1: return phase_shift(q, 2.0 * kPi * uniform01(rng));
    default: {
        int t = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(m - 1)));
        if (t >= q) ++t;
        return controlled_not(q, t);
    }
    }
}

Eigen::Matrix2cd haar_unitary(Rng& rng) {
    auto gauss = [&rng]() {
        const double u1 = std::max(uniform01(rng), 1e-300);
        const double u2 = uniform01(rng);
        return std::sqrt(-2.0 * std::log(u1)) *
               Complex(std::cos(2.0 * kPi * u2), std::sin(2.0 * kPi * u2));
    };
    Eigen::Matrix2cd g;
    g << gauss(), gauss(), gauss(), gauss();
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < 2; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
    return q;
}

// ---- criterion bodies --------------------------------------------------

void gate_model(std::vector<std::string>& fail) {
    const double s = 1.0 / std::sqrt(2.0);

    StateVector w0 = init_classical(1, 0);
    apply_gate(w0, walsh_hadamard(0));
    expect(fail, std::abs(w0.amps[0] - Complex(s, 0)) < 1e-12 &&
                     std::abs(w0.amps[1] - Complex(s, 0)) < 1e-12,
           "W|0> is not (|0>+|1>)/sqrt2");

    StateVector w1 = init_classical(1, 1);
    apply_gate(w1, walsh_hadamard(0));
    expect(fail, std::abs(w1.amps[0] - Complex(s, 0)) < 1e-12 &&
                     std::abs(w1.amps[1] - Complex(-s, 0)) < 1e-12,
           "W|1> is not (|0>-|1>)/sqrt2");

    const double theta = 1.234;
    StateVector p1 = init_classical(1, 1);
    apply_gate(p1, phase_shift(0, theta));
    expect(fail, std::abs(p1.amps[1] - std::polar(1.0, theta)) < 1e-12,
           "P_theta|1> is not e^{i theta}|1>");

    const std::uint64_t xor_table[4] = {0, 1, 3, 2};
    for (std::uint64_t i = 0; i < 4; ++i) {
        StateVector x = init_classical(2, i);
        apply_gate(x, controlled_not(0, 1));
        expect(fail,
               std::abs(x.amps[static_cast<Eigen::Index>(xor_table[i])] - Complex(1, 0)) <
                   1e-12,
               "X truth table fails on input " + std::to_string(i));
    }

    StateVector uniform = init_classical(2, 0);
    apply_gate(uniform, walsh_hadamard(0));
    apply_gate(uniform, walsh_hadamard(1));
    for (int i = 0; i < 4; ++i)
        expect(fail, std::abs(uniform.amps[i] - Complex(0.5, 0)) < 1e-12,
               "two Hadamards miss the uniform superposition");

    Rng rng(20260808);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 1 + static_cast<int>(uniform_index(rng, 8));
        const int gates = 1 + static_cast<int>(uniform_index(rng, 50));
        Circuit c(m);
        for (int g = 0; g < gates; ++g) c.push(random_elementary(m, rng));
        StateVector psi = random_state(m, rng);
        apply_circuit(psi, c);
        worst = std::max(worst, norm_error(psi));
    }
    expect(fail, worst < 1e-10, "random-circuit norm deviation " + fmt(worst));
}

void qrng_uniformity(std::vector<std::string>& fail) {
    const QrngReport rep = run_qrng(4, 100000, 20260808);
    expect(fail, rep.p_value > 0.01,
           "chi-square p-value " + fmt(rep.p_value) + " not above 0.01");
}

void grover(std::vector<std::string>& fail) {
    // N=4: success probability exactly 1 after one iteration
    const BooleanOracle small = BooleanOracle::single_marked(4, 2);
    StateVector psi = init_classical(3, 0);
    apply_circuit(psi, grover_circuit(small));
    double p_marked = std::norm(psi.amps[4]) + std::norm(psi.amps[5]);
    expect(fail, std::abs(p_marked - 1.0) < 1e-12,
           "N=4 success probability " + fmt(p_marked) + " != 1");

    for (std::int64_t n : {16L, 64L, 256L}) {
        const std::int64_t marked = n / 3;
        const BooleanOracle oracle = BooleanOracle::single_marked(n, marked);
        const int k = grover_iterations(n);
        long hits = 0;
        const long trials = 1000;
        for (long t = 0; t < trials; ++t) {
            Rng rng(derive_seed(101 + static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(t)));
            if (grover_search(oracle, rng) == marked) ++hits;
        }
        const double freq = static_cast<double>(hits) / trials;
        const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(n)));
        const double predicted = std::pow(std::sin((2.0 * k + 1.0) * theta), 2.0);
        expect(fail, std::abs(freq - predicted) <= 0.02,
               "N=" + std::to_string(n) + " frequency " + fmt(freq) + " vs analytic " +
                   fmt(predicted));
    }
}

void boolean_mean_rate(std::vector<std::string>& fail) {
    ConvergenceStudyConfig cfg;
    cfg.family = "boolean-mean";
    cfg.methods = {"quantum", "monte-carlo"};
    cfg.n_grid = {16, 32, 64, 128, 256, 512};  // M = 2^t, t = 4..9
    cfg.trials = 200;
    cfg.seed = 20260808;
    cfg.sequence_length = 1024;
    const StudyResult res = run_convergence(cfg);
    double q_slope = 0, mc_slope = 0;
    for (const auto& mf : res.fits)
        (mf.method == "quantum" ? q_slope : mc_slope) = mf.fit.slope;
    expect(fail, q_slope >= -1.25 && q_slope <= -0.80,
           "quantum slope " + fmt(q_slope) + " outside [-1.25, -0.80]");
    expect(fail, mc_slope >= -0.65 && mc_slope <= -0.35,
           "monte-carlo slope " + fmt(mc_slope) + " outside [-0.65, -0.35]");
}

void estimation_exactness(std::vector<std::string>& fail) {
    for (int t = 1; t <= 6; ++t) {
        const Eigen::Index m = Eigen::Index{1} << t;
        for (Eigen::Index k = 0; k <= m / 2; ++k) {
            const double sk = std::sin(kPi * static_cast<double>(k) / static_cast<double>(m));
            const double a = sk * sk;
            const Eigen::VectorXd dist =
                phase_distribution_full(make_amplitude_preparation(a), t);
            double mass_on_a = 0.0;
            for (Eigen::Index y = 0; y < m; ++y) {
                const double est = std::pow(
                    std::sin(kPi * static_cast<double>(y) / static_cast<double>(m)), 2);
                if (std::abs(est - a) < 1e-12) mass_on_a += dist[y];
            }
            expect(fail, std::abs(mass_on_a - 1.0) < 1e-12,
                   "t=" + std::to_string(t) + " k=" + std::to_string(k) +
                       ": returned-a mass " + fmt(mass_on_a));
        }
    }
}

void hoelder_rate(std::vector<std::string>& fail) {
    ConvergenceStudyConfig cfg;
    cfg.family = "lipschitz";
    cfg.methods = {"deterministic", "cv-monte-carlo", "quantum"};
    cfg.n_grid = {4, 8, 16, 32};
    cfg.trials = 101;
    cfg.seed = 20260808;
    const StudyResult res = run_convergence(cfg);

    double det = 0, cv = 0, q = 0;
    for (const auto& mf : res.fits) {
        if (mf.method == "deterministic") det = mf.fit.slope;
        if (mf.method == "cv-monte-carlo") cv = mf.fit.slope;
        if (mf.method == "quantum") q = mf.fit.slope;
    }
    expect(fail, q >= -2.35 && q <= -1.60, "quantum slope " + fmt(q) + " outside [-2.35, -1.60]");
    expect(fail, det >= -1.25 && det <= -0.80,
           "deterministic slope " + fmt(det) + " outside [-1.25, -0.80]");
    expect(fail, cv >= -1.80 && cv <= -1.20,
           "cv-monte-carlo slope " + fmt(cv) + " outside [-1.80, -1.20]");

    double med_det = 0, med_cv = 0, med_q = 0;
    for (const auto& rec : res.records) {
        if (rec.n != 32) continue;
        if (rec.method == "deterministic") med_det = rec.median_error;
        if (rec.method == "cv-monte-carlo") med_cv = rec.median_error;
        if (rec.method == "quantum") med_q = rec.median_error;
    }
    expect(fail, med_q < med_cv && med_cv < med_det,
           "medians at n=32 not ordered: quantum " + fmt(med_q) + ", cv " + fmt(med_cv) +
               ", deterministic " + fmt(med_det));
}

void oracle_equivalence(std::vector<std::string>& fail) {
    Rng rng(777);
    const int m2 = 6;
    const double tol = std::ldexp(1.0, -m2 + 1);

    // bit-path and rotation-path mean estimates agree for every N <= 32
    for (int m1 = 1; m1 <= 5; ++m1) {
        for (int rep = 0; rep < 3; ++rep) {
            Eigen::VectorXd v(Eigen::Index{1} << m1);
            for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 2.0 * uniform01(rng) - 1.0;
            const SequenceOracle oracle(v, -1.0, 1.0, m2);

            // success probabilities straight from the two statevector routes
            StateVector rot = init_classical(m1 + 1, 0);
            for (int q = 0; q < m1; ++q) apply_gate(rot, walsh_hadamard(q));
            apply_rotation_query(rot.amps, oracle);
            double p_rot = 0.0;
            for (Eigen::Index i = 1; i < rot.dim(); i += 2) p_rot += std::norm(rot.amps[i]);

            StateVector bit = init_classical(m1 + m2 + 1, 0);
            for (int q = 0; q < m1; ++q) apply_gate(bit, walsh_hadamard(q));
            apply_bit_query(bit.amps, oracle, 1);
            apply_value_rotation(bit.amps, m2);
            double p_bit = 0.0;
            for (Eigen::Index i = 1; i < bit.dim(); i += 2) p_bit += std::norm(bit.amps[i]);

            const double mean_rot = -1.0 + 2.0 * p_rot;
            const double mean_bit = -1.0 + 2.0 * p_bit;
            expect(fail, std::abs(mean_rot - mean_bit) <= tol,
                   "statevector mean estimates diverge at N=" + std::to_string(1 << m1));
            expect(fail, std::abs(mean_rot - v.mean()) <= 2.0 * std::ldexp(1.0, -m2),
                   "rotation mean off the table mean at N=" + std::to_string(1 << m1));

            // full estimation pipeline, both markings, same seed
            EstimateConfig cfg;
            cfg.phase_bits = 7;
            cfg.repetitions = 5;
            cfg.seed = derive_seed(31337, static_cast<std::uint64_t>(10 * m1 + rep));
            cfg.mode = SimMode::TwoLevel;
            const double est_rot = mean_real(oracle, cfg, false).value;
            const double est_bit = mean_real(oracle, cfg, true).value;
            expect(fail, std::abs(est_rot - est_bit) <= tol,
                   "estimated means diverge at N=" + std::to_string(1 << m1) + ": " +
                       fmt(est_rot) + " vs " + fmt(est_bit));
        }
    }

    // bit-query permutation equals the classical table for N <= 64
    for (int m1 : {2, 4, 6}) {
        Eigen::VectorXd v(Eigen::Index{1} << m1);
        for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 2.0 * uniform01(rng) - 1.0;
        const SequenceOracle oracle(v, -1.0, 1.0, m2);
        const GateOp gate = build_bit_query(oracle);
        const int m = m1 + m2;
        bool table_ok = true;
        for (std::uint64_t basis = 0; basis < (std::uint64_t{1} << m); ++basis) {
            StateVector psi = init_classical(m, basis);
            apply_gate(psi, gate);
            const std::uint64_t i = basis >> m2;
            const std::uint64_t y = basis & ((1u << m2) - 1);
            const std::uint64_t want =
                (i << m2) |
                ((y + static_cast<std::uint64_t>(oracle.code(static_cast<std::int64_t>(i)))) &
                 ((1u << m2) - 1));
            if (std::abs(psi.amps[static_cast<Eigen::Index>(want)] - Complex(1, 0)) > 1e-12)
                table_ok = false;
        }
        expect(fail, table_ok, "bit-query table mismatch at N=" + std::to_string(1 << m1));
    }
}

void reversible_adder(std::vector<std::string>& fail) {
    for (int m = 1; m <= 5; ++m) {
        const Circuit adder = reversible_add(m);
        const std::uint64_t n = std::uint64_t{1} << m;
        bool ok = true;
        for (std::uint64_t i = 0; i < n && ok; ++i) {
            for (std::uint64_t j = 0; j < n && ok; ++j) {
                const std::uint64_t in = (i << (2 * m + 1)) | (j << (m + 1));
                StateVector psi = init_classical(3 * m + 1, in);
                apply_circuit(psi, adder);
                const std::uint64_t want = in | (i + j);
                if (std::abs(psi.amps[static_cast<Eigen::Index>(want)] - Complex(1, 0)) > 1e-12)
                    ok = false;
            }
        }
        expect(fail, ok, "adder mismatch at m=" + std::to_string(m));
    }

    // superposed inputs at m=2: output distribution equals the pair counts
    const int m = 2;
    StateVector psi = init_classical(3 * m + 1, 0);
    for (int q = 0; q < 2 * m; ++q) apply_gate(psi, walsh_hadamard(q));
    apply_circuit(psi, reversible_add(m));
    std::vector<int> pairs(2 * (1 << m) - 1, 0);
    for (int i = 0; i < (1 << m); ++i)
        for (int j = 0; j < (1 << m); ++j) ++pairs[static_cast<std::size_t>(i + j)];
    const std::uint64_t out_mask = (1u << (m + 1)) - 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        double p = 0.0;
        for (Eigen::Index idx = 0; idx < psi.dim(); ++idx)
            if ((static_cast<std::uint64_t>(idx) & out_mask) == k) p += std::norm(psi.amps[idx]);
        expect(fail, std::abs(p - pairs[k] / 16.0) < 1e-12,
               "superposed-adder P(sum=" + std::to_string(k) + ") = " + fmt(p));
    }
}

void compiler(std::vector<std::string>& fail) {
    Rng rng(616);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Matrix2cd u = haar_unitary(rng);
        const GateWord word = compile_single_qubit(u);
        worst = std::max(worst, phase_distance(word_matrix(word), u));
    }
    expect(fail, worst <= 1e-10, "worst exact-compilation distance " + fmt(worst));

    Rng trng(31337);
    for (int target = 0; target < 10; ++target) {
        const Eigen::Matrix2cd u = haar_unitary(trng);
        double prev = std::numeric_limits<double>::infinity();
        for (int len = 1; len <= 12; ++len) {
            const double d = approx_search(u, len).distance;
            expect(fail, d <= prev + 1e-12,
                   "approx distance increased at L=" + std::to_string(len));
            prev = std::min(prev, d);
        }
    }
}

void cost_accounting(std::vector<std::string>& fail) {
    std::vector<std::uint8_t> table(64, 0);
    for (int i = 0; i < 64; i += 5) table[static_cast<std::size_t>(i)] = 1;
    const BooleanOracle oracle(std::move(table));
    for (int t = 2; t <= 9; ++t) {
        EstimateConfig cfg;
        cfg.phase_bits = t;
        cfg.repetitions = 7;
        cfg.seed = 55;
        cfg.mode = SimMode::TwoLevel;
        const EstimateResult res = mean_boolean(oracle, cfg);
        expect(fail, res.queries_per_repetition == (1L << t) - 1,
               "t=" + std::to_string(t) + " queries/rep " +
                   std::to_string(res.queries_per_repetition));
        expect(fail, res.queries_used == 7 * ((1L << t) - 1),
               "t=" + std::to_string(t) + " total queries " + std::to_string(res.queries_used));
        expect(fail,
               res.cost.total_cost ==
                   res.cost.num_queries * res.cost.num_qubits + res.cost.num_elementary_gates,
               "t=" + std::to_string(t) + " cost formula violated");
        expect(fail, res.cost.num_qubits == t + 6 + 1,
               "t=" + std::to_string(t) + " qubit count " + std::to_string(res.cost.num_qubits));
    }
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "gate-model correctness and random-circuit unitarity", 10.0, gate_model},
        {2, "qrng uniformity (m=4, 1e5 samples, chi-square p > 0.01)", 5.0, qrng_uniformity},
        {3, "grover success probabilities (N=4 exact; 16/64/256 within 0.02)", 60.0, grover},
        {4, "boolean-mean rates (quantum ~ 1/n vs monte carlo ~ 1/sqrt n)", 600.0,
         boolean_mean_rate},
        {5, "amplitude estimation exact on representable phases (t <= 6)", 60.0,
         estimation_exactness},
        {6, "Lipschitz integration rates (quantum/cv-mc/deterministic)", 1200.0, hoelder_rate},
        {7, "oracle-path equivalence and bit-query tables", 60.0, oracle_equivalence},
        {8, "reversible adder, exhaustive m <= 5 plus superposed inputs", 30.0,
         reversible_adder},
        {9, "single-qubit compiler: exact synthesis and approx monotonicity", 300.0, compiler},
        {10, "query and gate cost accounting", 60.0, cost_accounting},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        std::vector<std::string> failures;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(failures);
        } catch (const std::exception& e) {
            failures.push_back(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.budget_seconds)
            failures.push_back("runtime " + fmt(elapsed) + "s over budget " +
                               fmt(c.budget_seconds) + "s");
        const bool ok = failures.empty();
        std::printf("criterion %2d [%s] %s (%.2fs)\n", c.id, ok ? "PASS" : "FAIL",
                    c.summary.c_str(), elapsed);
        for (const auto& f : failures) std::printf("              - %s\n", f.c_str());
        if (!ok) ++failed;
    }
    if (failed == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failed);
    return failed == 0 ? 0 : 1;
}
