#include "qmc/oracle.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qmc {

std::int64_t encode_value(double v, double a, double b, int m2) {
    if (m2 < 1 || m2 > 62) throw std::domain_error("encode_value: need 1 <= m2 <= 62");
    if (!(a < b)) throw std::domain_error("encode_value: need a < b");
    if (v < a || v > b) throw std::domain_error("encode_value: value outside [a,b]");
    const std::int64_t top = (std::int64_t{1} << m2) - 1;
    if (v == b) return top;
    const double scaled = std::ldexp((v - a) / (b - a), m2);
    std::int64_t code = static_cast<std::int64_t>(std::floor(scaled));
    if (code < 0) code = 0;
    if (code > top) code = top;
    return code;
}

double decode_midpoint(std::int64_t code, double a, double b, int m2) {
    return a + (static_cast<double>(code) + 0.5) * (b - a) * std::ldexp(1.0, -m2);
}

SequenceOracle::SequenceOracle(Eigen::VectorXd vals, double a, double b, int m2)
    : values(std::move(vals)), range_lo(a), range_hi(b), value_qubits(m2) {
    if (!(a < b)) throw std::domain_error("SequenceOracle: need a < b");
    if (m2 < 1 || m2 > 62) throw std::domain_error("SequenceOracle: need 1 <= m2 <= 62");
    const auto n = static_cast<std::uint64_t>(values.size());
    if (!is_power_of_two(n)) throw std::domain_error("SequenceOracle: length must be a power of two");
    index_qubits = floor_log2(n);
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (values[i] < a || values[i] > b)
            throw std::domain_error("SequenceOracle: value outside [a,b] at index " +
                                    std::to_string(i));
}

std::int64_t SequenceOracle::code(std::int64_t i) const {
    return encode_value(values[static_cast<Eigen::Index>(i)], range_lo, range_hi, value_qubits);
}

double SequenceOracle::decoded(std::int64_t i) const {
    return decode_midpoint(code(i), range_lo, range_hi, value_qubits);
}

double SequenceOracle::unit_value(std::int64_t i) const {
    return (static_cast<double>(code(i)) + 0.5) * std::ldexp(1.0, -value_qubits);
}

double SequenceOracle::mean_decoded() const {
    double s = 0.0;
    for (std::int64_t i = 0; i < length(); ++i) s += decoded(i);
    return s / static_cast<double>(length());
}

double SequenceOracle::mean_unit() const {
    double s = 0.0;
    for (std::int64_t i = 0; i < length(); ++i) s += unit_value(i);
    return s / static_cast<double>(length());
}

BooleanOracle::BooleanOracle(std::vector<std::uint8_t> t, bool promise)
    : table(std::move(t)), promise_unique_marked(promise) {
    if (!is_power_of_two(table.size()))
        throw std::domain_error("BooleanOracle: length must be a power of two");
    for (auto v : table)
        if (v > 1) throw std::domain_error("BooleanOracle: entries must be 0 or 1");
    index_qubits = floor_log2(table.size());
    if (promise_unique_marked && count_marked() != 1)
        throw std::domain_error("BooleanOracle: uniqueness promise violated");
}

BooleanOracle BooleanOracle::single_marked(std::int64_t length, std::int64_t marked) {
    if (marked < 0 || marked >= length)
        throw std::domain_error("BooleanOracle: marked index out of range");
    std::vector<std::uint8_t> t(static_cast<std::size_t>(length), 0);
    t[static_cast<std::size_t>(marked)] = 1;
    return BooleanOracle(std::move(t), true);
}

std::int64_t BooleanOracle::count_marked() const {
    std::int64_t k = 0;
    for (auto v : table) k += v;
    return k;
}

std::int64_t BooleanOracle::marked_index() const {
    if (!promise_unique_marked)
        throw std::domain_error("BooleanOracle: marked_index needs the uniqueness promise");
    for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i]) return static_cast<std::int64_t>(i);
    return -1;
}

void apply_bit_query(Eigen::Ref<Eigen::VectorXcd> amps, const SequenceOracle& o,
                     int tail_qubits, bool inverse) {
    const int m2 = o.value_qubits;
    const Eigen::Index tail = Eigen::Index{1} << tail_qubits;
    const std::int64_t n_val = std::int64_t{1} << m2;
    if (amps.size() != (o.length() << m2) * tail)
        throw std::domain_error("apply_bit_query: block size mismatch");
    Eigen::VectorXcd scratch(amps.size());
    for (std::int64_t i = 0; i < o.length(); ++i) {
        const std::int64_t add = inverse ? (n_val - o.code(i)) % n_val : o.code(i);
        for (std::int64_t y = 0; y < n_val; ++y) {
            const std::int64_t src = (i << m2) | y;
            const std::int64_t dst = (i << m2) | ((y + add) & (n_val - 1));
            scratch.segment(dst * tail, tail) = amps.segment(src * tail, tail);
        }
    }
    amps = scratch;
}

void apply_boolean_query(Eigen::Ref<Eigen::VectorXcd> amps, const BooleanOracle& o) {
    if (amps.size() != o.length() * 2)
        throw std::domain_error("apply_boolean_query: block size mismatch");
    Complex* a = amps.data();
    for (std::int64_t i = 0; i < o.length(); ++i)
        if (o.table[static_cast<std::size_t>(i)]) std::swap(a[2 * i], a[2 * i + 1]);
}

void apply_rotation_query(Eigen::Ref<Eigen::VectorXcd> amps, const SequenceOracle& o,
                          bool inverse) {
    if (amps.size() != o.length() * 2)
        throw std::domain_error("apply_rotation_query: block size mismatch");
    Complex* a = amps.data();
    for (std::int64_t i = 0; i < o.length(); ++i) {
        const double g = o.unit_value(i);
        const double c = std::sqrt(1.0 - g);
        const double s = inverse ? -std::sqrt(g) : std::sqrt(g);
        const Complex a0 = a[2 * i], a1 = a[2 * i + 1];
        a[2 * i] = c * a0 - s * a1;
        a[2 * i + 1] = s * a0 + c * a1;
    }
}

void apply_value_rotation(Eigen::Ref<Eigen::VectorXcd> amps, int m2, bool inverse) {
    const std::int64_t n_val = std::int64_t{1} << m2;
    if (amps.size() % (n_val * 2) != 0)
        throw std::domain_error("apply_value_rotation: block size mismatch");
    const std::int64_t groups = amps.size() / (n_val * 2);
    Complex* a = amps.data();
    for (std::int64_t grp = 0; grp < groups; ++grp) {
        for (std::int64_t k = 0; k < n_val; ++k) {
            const double g = (static_cast<double>(k) + 0.5) * std::ldexp(1.0, -m2);
            const double c = std::sqrt(1.0 - g);
            const double s = inverse ? -std::sqrt(g) : std::sqrt(g);
            const std::int64_t base = (grp << (m2 + 1)) | (k << 1);
            const Complex a0 = a[base], a1 = a[base + 1];
            a[base] = c * a0 - s * a1;
            a[base + 1] = s * a0 + c * a1;
        }
    }
}

namespace {

std::vector<int> iota_qubits(int count) {
    std::vector<int> qs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) qs[static_cast<std::size_t>(i)] = i;
    return qs;
}

} // namespace

GateOp build_bit_query(const SequenceOracle& oracle) {
    const int m = oracle.index_qubits + oracle.value_qubits;
    auto action = [oracle](StateVector& psi) {
        if (psi.num_qubits != oracle.index_qubits + oracle.value_qubits)
            throw std::domain_error("bit query built for a different register size");
        apply_bit_query(psi.amps, oracle);
    };
    return compound("bit_query", iota_qubits(m), std::move(action), 0, 1);
}

GateOp build_boolean_query(const BooleanOracle& oracle) {
    const int m = oracle.index_qubits + 1;
    auto action = [oracle](StateVector& psi) {
        if (psi.num_qubits != oracle.index_qubits + 1)
            throw std::domain_error("boolean query built for a different register size");
        apply_boolean_query(psi.amps, oracle);
    };
    return compound("boolean_query", iota_qubits(m), std::move(action), 0, 1);
}

GateOp build_rotation_query(const SequenceOracle& oracle) {
    const int m = oracle.index_qubits + 1;
    auto action = [oracle](StateVector& psi) {
        if (psi.num_qubits != oracle.index_qubits + 1)
            throw std::domain_error("rotation query built for a different register size");
        apply_rotation_query(psi.amps, oracle);
    };
    return compound("rotation_query", iota_qubits(m), std::move(action), 0, 1);
}

Circuit reversible_add(int m) {
    if (m < 1) throw std::domain_error("reversible_add: need m >= 1");
    if (3 * m + 1 > kMaxQubits)
        throw std::domain_error("reversible_add: register exceeds the qubit budget");
    Circuit c(3 * m + 1);
    // Bit k (k-th least significant) lives at: i_k -> qubit m-1-k,
    // j_k -> qubit 2m-1-k, o_k -> qubit 3m-k (o_m = qubit 2m is the carry-out).
    for (int k = 0; k < m; ++k) {
        const int ik = m - 1 - k;
        const int jk = 2 * m - 1 - k;
        const int ok = 3 * m - k;
        const int ok1 = 3 * m - k - 1;
        // Majority of (i_k, j_k, carry) into the next output bit, read before
        // the carry bit is folded into this position's sum.
        c.push(make_toffoli(ik, jk, ok1));
        c.push(make_toffoli(ik, ok, ok1));
        c.push(make_toffoli(jk, ok, ok1));
        c.x(ik, ok);
        c.x(jk, ok);
    }
    return c;
}

SequenceOracle load_sequence_oracle(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::domain_error("sequence oracle csv: missing header");
    std::string squashed;
    for (char ch : line)
        if (!std::isspace(static_cast<unsigned char>(ch))) squashed += ch;
    if (squashed != "a,b,m2")
        throw std::domain_error("sequence oracle csv: header must be 'a,b,m2'");
    if (!std::getline(in, line))
        throw std::domain_error("sequence oracle csv: missing parameter row");
    std::istringstream params(line);
    std::string fa, fb, fm;
    if (!std::getline(params, fa, ',') || !std::getline(params, fb, ',') ||
        !std::getline(params, fm, ','))
        throw std::domain_error("sequence oracle csv: parameter row needs a,b,m2");
    const double a = std::stod(fa);
    const double b = std::stod(fb);
    const int m2 = std::stoi(fm);
    std::vector<double> vals;
    while (std::getline(in, line)) {
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) continue;
        vals.push_back(std::stod(trimmed));
    }
    Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(vals.data(),
                                                    static_cast<Eigen::Index>(vals.size()));
    return SequenceOracle(std::move(v), a, b, m2);
}

SequenceOracle load_sequence_oracle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open values file: " + path);
    return load_sequence_oracle(in);
}

} // namespace qmc
