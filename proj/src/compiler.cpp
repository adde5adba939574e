#include "qmc/compiler.hpp"

#include <cmath>

namespace qmc {

namespace {

constexpr double kDegenerateTol = 1e-12;

double wrap_angle(double theta) {
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0) theta += 2.0 * kPi;
    return theta;
}

bool is_trivial_phase(double theta) {
    const double t = wrap_angle(theta);
    return t < kDegenerateTol || 2.0 * kPi - t < kDegenerateTol;
}

} // namespace

Eigen::Matrix2cd letter_matrix(const Letter& l) {
    Eigen::Matrix2cd m;
    if (l.is_w) {
        const double s = 1.0 / std::sqrt(2.0);
        m << s, s, s, -s;
    } else {
        m << 1.0, 0.0, 0.0, std::polar(1.0, l.theta);
    }
    return m;
}

Eigen::Matrix2cd word_matrix(const GateWord& word) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
    for (const Letter& l : word.letters) m = letter_matrix(l) * m;
    return m;
}

std::vector<GateOp> word_ops(const GateWord& word) {
    std::vector<GateOp> ops;
    ops.reserve(word.letters.size());
    for (const Letter& l : word.letters)
        ops.push_back(l.is_w ? walsh_hadamard(word.target_qubit)
                             : phase_shift(word.target_qubit, l.theta));
    return ops;
}

bool is_unitary(const Eigen::Matrix2cd& u, double tol) {
    return (u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() <= tol;
}

double phase_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    // the minimizing phase aligns tr(a^dag b) with the positive real axis;
    // forming the difference explicitly avoids cancellation near zero
    const Complex z = (a.adjoint() * b).trace();
    if (std::abs(z) < 1e-300) {
        const double d2 = a.squaredNorm() + b.squaredNorm();
        return std::sqrt(std::max(0.0, d2));
    }
    const Complex phase = std::conj(z) / std::abs(z);
    return (a - phase * b).norm();
}

GateWord compile_single_qubit(const Eigen::Matrix2cd& u) {
    if (!is_unitary(u)) throw std::domain_error("compile_single_qubit: input is not unitary");

    GateWord word;
    const double c = std::abs(u(0, 0));
    const double s = std::abs(u(0, 1));

    if (s <= kDegenerateTol) {
        // Diagonal up to phase: a single phase shift (or nothing).
        const double theta = std::arg(u(1, 1)) - std::arg(u(0, 0));
        if (!is_trivial_phase(theta)) word.letters.push_back({false, wrap_angle(theta)});
        return word;
    }

    const double gamma = 2.0 * std::atan2(s, c);
    double beta, delta;
    if (c <= kDegenerateTol) {
        // Anti-diagonal: fold the free global phase into beta = 0.
        beta = 0.0;
        delta = std::arg(u(1, 0)) - std::arg(u(0, 1));
    } else {
        // Global phase chosen so the (0,0) entry is real positive; then
        // U01 = -i sin(gamma/2) e^{i beta}, U10 = -i sin(gamma/2) e^{i delta}.
        const double phi0 = std::arg(u(0, 0));
        beta = std::arg(u(0, 1)) - phi0 + kPi / 2.0;
        delta = std::arg(u(1, 0)) - phi0 + kPi / 2.0;
    }

    if (!is_trivial_phase(beta)) word.letters.push_back({false, wrap_angle(beta)});
    word.letters.push_back({true, 0.0});
    word.letters.push_back({false, wrap_angle(gamma)});
    word.letters.push_back({true, 0.0});
    if (!is_trivial_phase(delta)) word.letters.push_back({false, wrap_angle(delta)});
    return word;
}

ApproxResult approx_search(const Eigen::Matrix2cd& u, int max_len) {
    if (max_len < 0 || max_len > 14)
        throw std::domain_error("approx_search: max word length limited to 14");
    if (!is_unitary(u)) throw std::domain_error("approx_search: input is not unitary");

    const Eigen::Matrix2cd w_mat = letter_matrix({true, 0.0});
    const Eigen::Matrix2cd p_mat = letter_matrix({false, kPi / 4.0});

    ApproxResult best;
    best.distance = phase_distance(Eigen::Matrix2cd::Identity(), u);
    std::string best_key;  // 'W' < 'P' not lexicographic in ASCII; encode W as 'A', P as 'B'

    // Depth-first over pruned words, carrying the running product.
    struct Frame {
        std::string key;
        std::vector<Letter> letters;
        Eigen::Matrix2cd prod;
        int p_run;
        bool last_w;
    };
    std::vector<Frame> stack;
    stack.push_back({"", {}, Eigen::Matrix2cd::Identity(), 0, false});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        const double d = phase_distance(f.prod, u);
        const bool better = d < best.distance - 1e-12;
        const bool tie = !better && d <= best.distance + 1e-12;
        const bool lex_prefers = f.key.size() < best_key.size() ||
                                 (f.key.size() == best_key.size() && f.key < best_key);
        if (better || (tie && lex_prefers)) {
            best.distance = std::min(best.distance, d);
            best.word.letters = f.letters;
            best_key = f.key;
        }
        if (static_cast<int>(f.letters.size()) >= max_len) continue;
        if (f.p_run < 7) {  // P^8 is the identity
            Frame g = f;
            g.key += 'B';
            g.letters.push_back({false, kPi / 4.0});
            g.prod = p_mat * g.prod;
            g.p_run = f.p_run + 1;
            g.last_w = false;
            stack.push_back(std::move(g));
        }
        if (!f.last_w) {  // W^2 is the identity
            Frame g = std::move(f);
            g.key += 'A';
            g.letters.push_back({true, 0.0});
            g.prod = w_mat * g.prod;
            g.p_run = 0;
            g.last_w = true;
            stack.push_back(std::move(g));
        }
    }
    return best;
}

} // namespace qmc
