// oracle.hpp
// Quantum query unitaries over tabulated sequences: the xor/modular-add bit
// query, the boolean query, an amplitude-rotation shortcut, fixed-point value
// encoding, and the reversible adder.

#pragma once

#include "qmc/circuit.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qmc {

// Fixed-point m2-bit code of v in [a,b]: floor(2^m2 (v-a)/(b-a)), with v = b
// mapped to the top code 2^m2 - 1.
std::int64_t encode_value(double v, double a, double b, int m2);

// Cell midpoint of a code; halves the worst-case decoding error.
double decode_midpoint(std::int64_t code, double a, double b, int m2);

struct SequenceOracle {
    Eigen::VectorXd values;         // f(i), length N = 2^m1
    double range_lo = -1.0;         // a
    double range_hi = 1.0;          // b
    int index_qubits = 0;           // m1
    int value_qubits = 0;           // m2

    SequenceOracle(Eigen::VectorXd values, double a, double b, int m2);

    std::int64_t length() const { return values.size(); }
    std::int64_t code(std::int64_t i) const;
    double decoded(std::int64_t i) const;
    // Normalized decoded value (decoded - a)/(b - a) in [0,1].
    double unit_value(std::int64_t i) const;
    double mean_decoded() const;
    double mean_unit() const;
};

struct BooleanOracle {
    std::vector<std::uint8_t> table;  // f(i) in {0,1}, length N = 2^m1
    int index_qubits = 0;             // m1
    bool promise_unique_marked = false;

    BooleanOracle(std::vector<std::uint8_t> table, bool promise_unique_marked = false);
    static BooleanOracle single_marked(std::int64_t length, std::int64_t marked);

    std::int64_t length() const { return static_cast<std::int64_t>(table.size()); }
    std::int64_t count_marked() const;
    std::int64_t marked_index() const;  // requires the uniqueness promise
};

// Raw actions on an amplitude block whose qubits are laid out as
// [index | value | tail] resp. [index | ancilla]; used both by the GateOp
// wrappers below and by the estimation circuits that address sub-registers.
void apply_bit_query(Eigen::Ref<Eigen::VectorXcd> amps, const SequenceOracle& o,
                     int tail_qubits = 0, bool inverse = false);
void apply_boolean_query(Eigen::Ref<Eigen::VectorXcd> amps, const BooleanOracle& o);
void apply_rotation_query(Eigen::Ref<Eigen::VectorXcd> amps, const SequenceOracle& o,
                          bool inverse = false);
// Rotates the trailing ancilla by the angle encoded in the value register
// (block layout [.. | value m2 | ancilla]): |k>|y> -> |k> Ry(theta_k)|y> with
// sin^2(theta_k / 2) = (k + 1/2) / 2^m2.
void apply_value_rotation(Eigen::Ref<Eigen::VectorXcd> amps, int m2, bool inverse = false);

// Q_f : |i>|y> -> |i>|y (+) [f(i)]>, (+) = addition mod 2^m2, on m1+m2 qubits.
GateOp build_bit_query(const SequenceOracle& oracle);
// Q_f : |i>|y> -> |i>|y xor f(i)> on m1+1 qubits.
GateOp build_boolean_query(const BooleanOracle& oracle);
// |i>|0> -> |i>(sqrt(1-g_i)|0> + sqrt(g_i)|1>) on m1+1 qubits, g_i = unit_value(i).
GateOp build_rotation_query(const SequenceOracle& oracle);

// Circuit on 3m+1 qubits mapping |i>|j>|0> -> |i>|j>|i+j>; the m+1-bit output
// register doubles as the carry chain, each carry bit being absorbed into the
// final sum bit of its position.
Circuit reversible_add(int m);

// CSV form: line 1 the literal header "a,b,m2", line 2 those three fields,
// then one value per line. The value count must be a power of two.
SequenceOracle load_sequence_oracle(std::istream& in);
SequenceOracle load_sequence_oracle_file(const std::string& path);

} // namespace qmc
