#include "infobridge/quadrature.hpp"

#include <cmath>

namespace infobridge::quad {

namespace {

constexpr int kOrder = 64;

struct Rule {
    std::array<double, kOrder> nodes{};
    std::array<double, kOrder> weights{};
};

// Roots of the Legendre polynomial P_64 by Newton iteration on the
// three-term recurrence; weights 2 / ((1-x^2) P'_n(x)^2).
Rule make_gl() {
    Rule rule;
    const int n = kOrder;
    const double pi = std::acos(-1.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Hermite (physicists') rule via Newton on the orthonormal recurrence
//   p_{j+1}(x) = x sqrt(2/(j+1)) p_j(x) - sqrt(j/(j+1)) p_{j-1}(x),
// p_0 = pi^{-1/4}; derivative p'_n = sqrt(2n) p_{n-1}; weight 2/p'_n^2.
Rule make_gh() {
    Rule rule;
    const int n = kOrder;
    const double pim4 = 0.751125544464942483;
    const int m = (n + 1) / 2;
    double z = 0.0;
    std::array<double, kOrder> roots{};
    for (int i = 0; i < m; ++i) {
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * roots[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * roots[1];
        } else {
            z = 2.0 * z - roots[i - 2];
        }
        double pp = 0.0;
        for (int iter = 0; iter < 200; ++iter) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 -
                     std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        roots[i] = z;
        const double w = 2.0 / (pp * pp);
        rule.nodes[i] = z;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -z;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const Rule& gl_rule() {
    static const Rule rule = make_gl();
    return rule;
}

const Rule& gh_rule() {
    static const Rule rule = make_gh();
    return rule;
}

}  // namespace

const std::array<double, 64>& gl_nodes() { return gl_rule().nodes; }
const std::array<double, 64>& gl_weights() { return gl_rule().weights; }
const std::array<double, 64>& gh_nodes() { return gh_rule().nodes; }
const std::array<double, 64>& gh_weights() { return gh_rule().weights; }

}  // namespace infobridge::quad
