#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "infobridge/errors.hpp"

namespace infobridge::quad {

/// Convergence controls for the adaptive scheme: refinement stops once the
/// summed piece errors fall below rel_tol of the running total (or abs_tol),
/// and gives up after max_pieces bisections.
struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    std::size_t max_pieces = 16384;
};

/// 64-point Gauss-Legendre rule on (-1,1), computed once by Newton iteration.
const std::array<double, 64>& gl_nodes();
const std::array<double, 64>& gl_weights();

/// 64-point Gauss-Hermite rule (physicists' weight exp(-x^2)).
const std::array<double, 64>& gh_nodes();
const std::array<double, 64>& gh_weights();

template <class F>
double gauss_legendre(F&& f, double a, double b) {
    const auto& xs = gl_nodes();
    const auto& ws = gl_weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) sum += ws[i] * f(c + h * xs[i]);
    return h * sum;
}

/// Adaptive integral of f over [a,b]; throws NonIntegrable on failure.
///
/// Worklist refinement: every piece carries the error estimate
/// |GL(piece) - GL(left half) - GL(right half)|, and the worst piece is
/// bisected until the total error meets the tolerance against the running
/// total. Keeping the scale global lets sharply peaked integrands converge:
/// negligible flanks are never resolved to local relative accuracy, and the
/// target adapts as bisection uncovers mass a coarse pass cannot see.
/// Pieces whose error sits at the rounding floor of their own value are
/// accepted as-is.
template <class F>
double integrate(F&& f, double a, double b, const Options& opts = {}) {
    if (!(b > a)) return 0.0;

    struct Piece {
        double a, b;
        double value;  // refined (two-half) estimate
        double err;
        bool operator<(const Piece& other) const { return err < other.err; }
    };

    const auto make_piece = [&](double lo, double hi) {
        const double coarse = gauss_legendre(f, lo, hi);
        const double mid = 0.5 * (lo + hi);
        const double fine = gauss_legendre(f, lo, mid) + gauss_legendre(f, mid, hi);
        double err = std::abs(fine - coarse);
        if (!std::isfinite(fine)) err = std::numeric_limits<double>::infinity();
        return Piece{lo, hi, fine, err};
    };

    std::vector<Piece> active;   // max-heap on err
    std::vector<Piece> settled;  // pieces at their rounding floor
    active.push_back(make_piece(a, b));
    double active_value = active.front().value;
    double active_err = active.front().err;
    double settled_value = 0.0;
    double settled_err = 0.0;

    std::size_t inserts = 1;
    while (true) {
        const double total = settled_value + active_value;
        if (!std::isfinite(total))
            throw NonIntegrable("integral diverges on [" + std::to_string(a) + "," +
                                std::to_string(b) + "]");
        const double budget =
            std::max(opts.abs_tol, opts.rel_tol * std::abs(total)) + 1e-305;
        if (settled_err + active_err <= budget) break;
        if (active.empty() || inserts > opts.max_pieces)
            throw NonIntegrable("adaptive quadrature failed to converge on [" +
                                std::to_string(a) + "," + std::to_string(b) + "]");
        std::pop_heap(active.begin(), active.end());
        const Piece worst = active.back();
        active.pop_back();
        active_value -= worst.value;
        active_err -= worst.err;
        if (std::isfinite(worst.err) &&
            worst.err <= 4e-14 * std::abs(worst.value) + 1e-305) {
            // rounding-dominated; further bisection cannot help
            settled.push_back(worst);
            settled_value += worst.value;
            settled_err += worst.err;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        for (const Piece& child : {make_piece(worst.a, mid), make_piece(mid, worst.b)}) {
            active_value += child.value;
            active_err += child.err;
            active.push_back(child);
            std::push_heap(active.begin(), active.end());
        }
        inserts += 2;
    }
    // the running sums carry add/subtract drift; recompute from the pieces
    double result = 0.0;
    for (const Piece& p : settled) result += p.value;
    for (const Piece& p : active) result += p.value;
    return result;
}

/// E[g(Y)] for Y ~ N(mean, variance) by 64-point Gauss-Hermite.
/// A degenerate kernel (variance == 0) is the point mass at the mean.
template <class F>
double gaussian_expectation(F&& g, double mean, double variance) {
    if (variance <= 0.0) return g(mean);
    const auto& xs = gh_nodes();
    const auto& ws = gh_weights();
    const double scale = std::sqrt(2.0 * variance);
    double sum = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) sum += ws[i] * g(mean + scale * xs[i]);
    return sum / std::sqrt(std::acos(-1.0));
}

}  // namespace infobridge::quad
