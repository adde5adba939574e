#include "qmc/state.hpp"

#include "qmc/baselines.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

using namespace qmc;

TEST_CASE("init_classical produces one-hot basis states") {
    StateVector psi = init_classical(1, 0);
    CHECK(psi.amps[0] == Complex(1, 0));
    CHECK(psi.amps[1] == Complex(0, 0));

    // i = (i0 i1)_2 with qubit 0 most significant: |1>|1> is index 3
    StateVector two = init_classical(2, 3);
    for (int i = 0; i < 3; ++i) CHECK(two.amps[i] == Complex(0, 0));
    CHECK(two.amps[3] == Complex(1, 0));

    CHECK_THROWS_AS(init_classical(2, 4), std::domain_error);
    CHECK_THROWS_AS(init_classical(0, 0), std::domain_error);
    CHECK_THROWS_AS(init_classical(kMaxQubits + 1, 0), std::domain_error);
}

TEST_CASE("measure on a classical state is deterministic") {
    StateVector psi = init_classical(3, 5);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        CHECK(measure(psi, rng) == 5);
    }
}

TEST_CASE("measure rejects unnormalized states") {
    StateVector psi = init_classical(2, 0);
    psi.amps[0] = Complex(0.7, 0);
    Rng rng(7);
    CHECK_THROWS_AS(measure(psi, rng), std::domain_error);
}

TEST_CASE("measure follows the squared-amplitude law") {
    // amplitudes (sqrt 0.36, sqrt 0.64): outcome-1 frequency near 0.64
    StateVector psi;
    psi.num_qubits = 1;
    psi.amps.resize(2);
    psi.amps[0] = std::sqrt(0.36);
    psi.amps[1] = std::sqrt(0.64);
    Rng rng(2024);
    long ones = 0;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) ones += measure(psi, rng);
    CHECK(std::abs(static_cast<double>(ones) / draws - 0.64) < 0.01);
}

TEST_CASE("measurement distribution passes a chi-square check") {
    const int m = 3;
    Rng gen(99);
    StateVector psi = test::random_state(m, gen);
    const long draws = 100000;
    std::vector<long> counts(std::size_t{1} << m, 0);
    Rng rng(4242);
    for (long i = 0; i < draws; ++i) ++counts[measure(psi, rng)];
    double stat = 0.0;
    int dof = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expected = std::norm(psi.amps[static_cast<Eigen::Index>(i)]) * draws;
        if (expected < 1.0) continue;
        stat += (counts[i] - expected) * (counts[i] - expected) / expected;
        ++dof;
    }
    CHECK(chi_square_pvalue(stat, dof - 1) > 0.01);
}

TEST_CASE("identical seeds give identical measurement sequences") {
    Rng gen(3);
    StateVector psi = test::random_state(4, gen);
    std::vector<std::uint64_t> a, b;
    Rng r1(777), r2(777);
    for (int i = 0; i < 200; ++i) {
        a.push_back(measure(psi, r1));
        b.push_back(measure(psi, r2));
    }
    CHECK(a == b);
}

TEST_CASE("measure_top marginalizes the leading register") {
    // |01>|psi_anc>: top-2 marginal must always read 1
    StateVector psi;
    psi.num_qubits = 3;
    psi.amps = Eigen::VectorXcd::Zero(8);
    psi.amps[2] = std::sqrt(0.3);  // |01>|0>
    psi.amps[3] = std::sqrt(0.7);  // |01>|1>
    Rng rng(11);
    for (int i = 0; i < 50; ++i) CHECK(measure_top(psi, 2, rng) == 1);
}
