#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "infobridge/bridge.hpp"
#include "infobridge/default_law.hpp"
#include "infobridge/detail/pchip.hpp"

namespace infobridge {

/// A single observation of the information process.
///
/// The value 0 at a positive time lies on the defaulted branch almost surely,
/// so Observation::at routes it there. Treating such a point as an
/// undefaulted zero-crossing is possible through undefaulted_zero_crossing,
/// which exists for research use only.
struct Observation {
    double t = 0.0;
    double x = 0.0;
    bool defaulted = false;

    static Observation at(double t, double x);
    static Observation defaulted_at(double t);
    static Observation undefaulted_zero_crossing(double t);
};

/// Posterior law of the default time given an undefaulted observation
/// beta_t = x at t > 0: weights phi_t(r,x) dF(r) normalized over (t, inf).
///
/// Densities are handled in log space and rescaled by the peak exponent
/// before exponentiation; the normalizing constant is cached at construction
/// and the object is read-only afterwards.
class PosteriorCurve {
public:
    PosteriorCurve(const DefaultLaw& law, Observation obs);

    const Observation& observation() const { return obs_; }
    const DefaultLaw& law() const { return law_; }

    /// Normalized posterior density weight phi_t(r, x); zero for r <= t.
    double density_weight(double r) const;

    /// P(tau <= u | beta_t = x) on the undefaulted branch.
    double cdf_at(double u) const;

    /// Psi_t(u) = P(u < tau | beta_t = x) for u >= t.
    double tail_mass(double u) const;

    /// int_(t,inf) g(r) phi_t(r,x) dF(r).
    double expectation(const std::function<double(double)>& g) const;

    /// int over (iv.lo, iv.hi] of h(r) against the posterior weights.
    /// sqrt_sub grades the first quadrature piece by r = lo + q^2.
    double integrate_weighted(const std::function<double(double)>& h, TimeInterval iv,
                              bool sqrt_sub = false) const;

    /// As integrate_weighted, but h receives (r, r - t) with the gap to the
    /// observation time formed without cancellation; factors such as
    /// 1/(r - t) must come from the gap to stay accurate near r = t.
    double integrate_weighted_gap(const std::function<double(double, double)>& h,
                                  TimeInterval iv, bool sqrt_sub = false) const;

private:
    double scaled_weight_gap(double r_minus_t) const;  // exp(log varphi - log_scale)

    DefaultLaw law_;
    Observation obs_;
    double log_scale_ = 0.0;
    double scaled_norm_ = 0.0;
};

/// phi_t(r, x): a posteriori density of tau at r given the undefaulted
/// observation beta_t = x (t > 0, x != 0); zero for r <= t.
double posterior_density(const DefaultLaw& law, double t, double x, double r);

/// P(tau <= u | F_t) on the undefaulted branch; the prior F(u) at t = 0.
/// Throws DefaultedNeedsTau for defaulted observations: there the formula is
/// the indicator 1{tau <= u}, which needs the realized default time.
double posterior_cdf(const DefaultLaw& law, const Observation& obs, double u);

/// int g(r) d(posterior)(r) over (t, inf); the prior integral at t = 0.
double posterior_expectation(const DefaultLaw& law, const Observation& obs,
                             const std::function<double(double)>& g);

/// G_{t,u}(r, x; g) = E[g(beta^r_u) | beta^r_t = x], a Gaussian expectation
/// under the bridge transition kernel (point mass at 0 when u >= r).
double predictive_kernel_Gtu(double r, double t, double u, double x,
                             const std::function<double(double)>& g);

/// E[g(tau, beta_u) | beta_t = x] on {t < tau} for u > t:
/// int_(t,u] g(r,0) phi dF + int_(u,inf) G_{t,u}(r, x; g(r,.)) phi dF.
double predict_expectation(const DefaultLaw& law, const Observation& obs, double u,
                           const std::function<double(double, double)>& g);

/// E[beta_u | beta_t = x] = x int_(u,inf) (r-u)/(r-t) phi dF.
double predict_mean_beta(const DefaultLaw& law, const Observation& obs, double u);

/// P(beta_u = 0 | beta_t = x) = posterior mass of (t, u].
double predict_zero_mass(const DefaultLaw& law, const Observation& obs, double u);

/// P(beta_u <= y | beta_t = x): the conditional law of beta_u, combining the
/// zero atom with Gaussian tails under the transition kernel.
double predict_cdf_beta(const DefaultLaw& law, const Observation& obs, double u, double y);

/// Optional projection of the hidden drift: ^oZ_t = x int_(t,inf) (r-t)^{-1}
/// phi_t(r,x) dF(r) for an undefaulted observation; 0 when x = 0 or after
/// default. The (r-t)^{-1} endpoint is integrated with the r = t + q^2
/// substitution on the first piece.
double optional_projection_oZ(const DefaultLaw& law, const Observation& obs);

struct DriftEvaluatorOptions {
    bool tabulate = true;
    int nodes = 160;
    double x_sigmas = 8.5;  // table reach in units of the marginal sd
};

/// Vectorized ^oZ evaluator for a fixed law and grid. Per grid time it
/// tabulates x -> ^oZ(s, x) on a graded abscissa (odd in x by construction)
/// and interpolates with a monotone cubic; ensembles evaluate millions of
/// points, so the direct quadrature path would dominate the runtime.
/// Laws without a continuous part use the exact atom sums directly.
class DriftEvaluator {
public:
    using Options = DriftEvaluatorOptions;

    DriftEvaluator(const DefaultLaw& law, std::shared_ptr<const PathGrid> grid,
                   Options options = {});

    /// ^oZ at grid time index i and observed value x.
    double at_index(std::size_t i, double x) const;

    /// Direct quadrature evaluation at an arbitrary time.
    double at_time(double s, double x) const;

    const DefaultLaw& law() const { return law_; }
    const PathGrid& grid() const { return *grid_; }

private:
    DefaultLaw law_;
    std::shared_ptr<const PathGrid> grid_;
    Options options_;
    std::vector<detail::PchipTable> tables_;  // odd in x: tabulated on |x|
};

}  // namespace infobridge
