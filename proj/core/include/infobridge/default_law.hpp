#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "infobridge/rng.hpp"

namespace infobridge {

/// Time interval with (lo, hi] semantics; hi may be +infinity.
struct TimeInterval {
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

/// Point mass of the default-time law.
struct Atom {
    double location = 0.0;
    double weight = 0.0;
};

/// Knot of a right-continuous CDF given by data. Between distinct times the
/// CDF is linear; a repeated time with increasing cdf encodes a jump (atom).
struct CdfKnot {
    double time = 0.0;
    double cdf = 0.0;
};

struct IntegrateOptions {
    /// Substitute r = lo + q^2 on the first quadrature piece; removes an
    /// integrable (r-lo)^{-1/2}-type endpoint singularity exactly.
    bool sqrt_singularity_at_lo = false;
    double rel_tol = 1e-10;
};

/// Law F of the strictly positive default time: mixed distribution made of
/// point masses and an absolutely continuous part, with sampling and
/// Stieltjes integration of scalar functions over subintervals of (0, inf).
class DefaultLaw {
public:
    enum class Kind { Exponential, UniformInterval, Weibull, DiscreteAtoms, PiecewiseEmpirical };

    static DefaultLaw exponential(double rate);
    static DefaultLaw uniform_interval(double a, double b);
    static DefaultLaw weibull(double shape, double scale);
    static DefaultLaw discrete_atoms(std::vector<Atom> atoms);
    static DefaultLaw piecewise_empirical(std::vector<CdfKnot> knots);

    Kind kind() const { return kind_; }

    /// F(t) = P(tau <= t); right-continuous, F(0) = 0.
    double cdf(double t) const;

    /// G(t) = P(t < tau), computed from the law's own representation rather
    /// than as 1 - cdf whenever a closed form exists.
    double survival(double t) const;

    /// Inverse-CDF draw; quantile(u) maps a uniform u in (0,1) to a time.
    double quantile(double u) const;

    double sample(RandomStream& rng) const { return quantile(rng.uniform()); }

    double mean() const;

    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool has_continuous_part() const { return has_density_; }

    /// Density of the absolutely continuous part (0 where there is none).
    double density(double r) const;

    /// Smallest practical upper limit R with survival(R) < eps; equals
    /// support_hi when the support is bounded.
    double truncation_point(double eps = 1e-12) const;

    /// Atom locations and kink points of the CDF inside [a,b], sorted.
    /// Useful to callers integrating functions of the law over time.
    std::vector<double> breakpoints_in(double a, double b) const;

    /// Stieltjes integral of g against dF over (iv.lo, iv.hi]: atom sums plus
    /// adaptive Gauss-Legendre quadrature of g * density per smooth piece.
    /// Throws NonIntegrable if the quadrature does not converge.
    double integrate_dF(const std::function<double(double)>& g, TimeInterval iv,
                        IntegrateOptions opts = {}) const;

    /// As integrate_dF, but the integrand receives (r, r - iv.lo) with the
    /// offset formed without cancellation (exactly q^2 on the substituted
    /// piece). Integrands whose scale is set by the distance to the left
    /// endpoint need this to stay accurate near it.
    double integrate_dF_from(const std::function<double(double, double)>& g, TimeInterval iv,
                             IntegrateOptions opts = {}) const;

private:
    DefaultLaw() = default;

    Kind kind_ = Kind::Exponential;
    double rate_ = 1.0;       // Exponential
    double lo_ = 0.0;         // UniformInterval
    double hi_ = 1.0;
    double shape_ = 1.0;      // Weibull
    double scale_ = 1.0;
    std::vector<Atom> atoms_;
    std::vector<CdfKnot> knots_;

    bool has_density_ = true;
    double support_lo_ = 0.0;
    double support_hi_ = std::numeric_limits<double>::infinity();
};

}  // namespace infobridge
