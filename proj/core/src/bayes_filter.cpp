#include "infobridge/bayes_filter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infobridge/errors.hpp"
#include "infobridge/parallel.hpp"
#include "infobridge/quadrature.hpp"

namespace infobridge {

namespace {

const double kTwoPi = 2.0 * std::acos(-1.0);

double gaussian_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// log Gaussian density exponent at variance v, observation x
double log_gauss(double v, double x) {
    return -0.5 * std::log(kTwoPi * v) - x * x / (2.0 * v);
}

}  // namespace

Observation Observation::at(double t, double x) {
    if (t < 0.0) throw DomainError("observation time must be nonnegative");
    if (t == 0.0) {
        if (x != 0.0) throw DomainError("beta_0 = 0; an observation at t = 0 must have x = 0");
        return {0.0, 0.0, false};
    }
    if (x == 0.0) return {t, 0.0, true};  // {beta_t = 0} = {tau <= t} a.s.
    return {t, x, false};
}

Observation Observation::defaulted_at(double t) {
    if (!(t > 0.0)) throw DomainError("default cannot be observed at t = 0");
    return {t, 0.0, true};
}

Observation Observation::undefaulted_zero_crossing(double t) {
    if (!(t > 0.0)) throw DomainError("zero-crossing override requires t > 0");
    return {t, 0.0, false};
}

PosteriorCurve::PosteriorCurve(const DefaultLaw& law, Observation obs)
    : law_(law), obs_(obs) {
    if (obs_.defaulted)
        throw DefaultedNeedsTau("posterior weights are defined on the undefaulted branch");
    if (!(obs_.t > 0.0))
        throw DomainError("posterior weights need t > 0; at t = 0 the posterior is the prior");
    if (!(law_.survival(obs_.t) > 0.0))
        throw DegenerateObservation("law has no mass beyond the observation time");

    // Peak of log varphi_t(r,x) over r in (t, inf). The bridge variance
    // v(r) = t(r-t)/r increases from 0 to t(1 - t/H), so the exponent is
    // maximized at v = x^2 clamped to that range.
    const double t = obs_.t;
    const double hi = law_.support_hi();
    const double v_sup =
        std::isfinite(hi) ? t * (hi - t) / hi : t;
    const double x2 = obs_.x * obs_.x;
    const double v_star = (x2 > 0.0) ? std::min(x2, v_sup) : v_sup;
    log_scale_ = log_gauss(v_star, obs_.x);

    IntegrateOptions opts;
    opts.sqrt_singularity_at_lo = true;
    scaled_norm_ = law_.integrate_dF_from(
        [this](double, double gap) { return scaled_weight_gap(gap); },
        {t, std::numeric_limits<double>::infinity()}, opts);
    // For unbounded supports the quadrature discards a tail of at most 1e-12
    // in scaled units (the scaled weight never exceeds 1). A normalizer below
    // 1e-9 would let that tail bias the posterior, which happens only for
    // observations far outside the plausible range of the marginals.
    const double floor = std::isfinite(law_.support_hi()) ? 0.0 : 1e-9;
    if (!(scaled_norm_ > floor) || !std::isfinite(scaled_norm_))
        throw DegenerateObservation("posterior normalizer underflowed");
}

double PosteriorCurve::scaled_weight_gap(double r_minus_t) const {
    if (!(r_minus_t > 0.0)) return 0.0;
    const double t = obs_.t;
    const double v = t * r_minus_t / (t + r_minus_t);
    if (!(v > 0.0)) return 0.0;
    const double lp = -0.5 * std::log(kTwoPi * v) - obs_.x * obs_.x / (2.0 * v);
    return std::isfinite(lp) ? std::exp(lp - log_scale_) : 0.0;
}

double PosteriorCurve::integrate_weighted_gap(const std::function<double(double, double)>& h,
                                              TimeInterval iv, bool sqrt_sub) const {
    IntegrateOptions opts;
    opts.sqrt_singularity_at_lo = sqrt_sub;
    const double lead = iv.lo - obs_.t;  // offset of the interval start past t
    const double raw = law_.integrate_dF_from(
        [&](double r, double gap) {
            const double r_minus_t = lead + gap;
            return h(r, r_minus_t) * scaled_weight_gap(r_minus_t);
        },
        iv, opts);
    return raw / scaled_norm_;
}

double PosteriorCurve::integrate_weighted(const std::function<double(double)>& h,
                                          TimeInterval iv, bool sqrt_sub) const {
    return integrate_weighted_gap([&](double r, double) { return h(r); }, iv, sqrt_sub);
}

double PosteriorCurve::density_weight(double r) const {
    if (r <= obs_.t) return 0.0;
    return scaled_weight_gap(r - obs_.t) / scaled_norm_;
}

double PosteriorCurve::cdf_at(double u) const {
    if (u <= obs_.t) return 0.0;
    return integrate_weighted([](double) { return 1.0; }, {obs_.t, u}, true);
}

double PosteriorCurve::tail_mass(double u) const {
    const double from = std::max(u, obs_.t);
    return integrate_weighted([](double) { return 1.0; },
                              {from, std::numeric_limits<double>::infinity()},
                              from == obs_.t);
}

double PosteriorCurve::expectation(const std::function<double(double)>& g) const {
    return integrate_weighted(g, {obs_.t, std::numeric_limits<double>::infinity()}, true);
}

double posterior_density(const DefaultLaw& law, double t, double x, double r) {
    if (!(t > 0.0)) throw DomainError("posterior density requires t > 0");
    if (x == 0.0)
        throw DomainError("x = 0 lies on the defaulted branch a.s.; "
                          "use Observation::undefaulted_zero_crossing explicitly");
    return PosteriorCurve(law, Observation{t, x, false}).density_weight(r);
}

double posterior_cdf(const DefaultLaw& law, const Observation& obs, double u) {
    if (obs.defaulted)
        throw DefaultedNeedsTau("on {tau <= t} the posterior CDF is 1{tau <= u}; "
                                "supply the realized default time from the path");
    if (obs.t == 0.0) return law.cdf(u);  // F^beta_0 is trivial
    if (u <= obs.t) return 0.0;
    return PosteriorCurve(law, obs).cdf_at(u);
}

double posterior_expectation(const DefaultLaw& law, const Observation& obs,
                             const std::function<double(double)>& g) {
    if (obs.defaulted)
        throw DefaultedNeedsTau("posterior expectation needs the realized default time "
                                "on the defaulted branch");
    if (obs.t == 0.0)
        return law.integrate_dF(g, {0.0, std::numeric_limits<double>::infinity()});
    return PosteriorCurve(law, obs).expectation(g);
}

double predictive_kernel_Gtu(double r, double t, double u, double x,
                             const std::function<double(double)>& g) {
    const GaussianKernel k = transition_kernel(r, t, u, x);
    return quad::gaussian_expectation(g, k.mean, k.variance);
}

namespace {

// Shared three-term structure of the prediction formulas: the defaulted mass
// on (t,u] enters through value_at_zero, the alive tail through tail_term.
double predict_combine(const DefaultLaw& law, const Observation& obs, double u,
                       const std::function<double(double)>& value_at_zero,
                       const std::function<double(double)>& tail_term) {
    if (obs.defaulted)
        throw DefaultedNeedsTau("the defaulted branch of the prediction is g(tau, 0)");
    if (!(u > obs.t)) throw DomainError("prediction requires u > t");
    const double inf = std::numeric_limits<double>::infinity();
    if (obs.t == 0.0) {
        return law.integrate_dF(value_at_zero, {0.0, u}) +
               law.integrate_dF(tail_term, {u, inf});
    }
    PosteriorCurve curve(law, obs);
    return curve.integrate_weighted(value_at_zero, {obs.t, u}, true) +
           curve.integrate_weighted(tail_term, {u, inf});
}

}  // namespace

double predict_expectation(const DefaultLaw& law, const Observation& obs, double u,
                           const std::function<double(double, double)>& g) {
    return predict_combine(
        law, obs, u,
        [&](double r) { return g(r, 0.0); },
        [&](double r) {
            return predictive_kernel_Gtu(r, obs.t, u, obs.x,
                                         [&](double y) { return g(r, y); });
        });
}

double predict_mean_beta(const DefaultLaw& law, const Observation& obs, double u) {
    return predict_combine(
        law, obs, u,
        [](double) { return 0.0; },
        [&](double r) { return obs.x * (r - u) / (r - obs.t); });
}

double predict_zero_mass(const DefaultLaw& law, const Observation& obs, double u) {
    return predict_combine(
        law, obs, u,
        [](double) { return 1.0; },
        [](double) { return 0.0; });
}

double predict_cdf_beta(const DefaultLaw& law, const Observation& obs, double u, double y) {
    return predict_combine(
        law, obs, u,
        [&](double) { return y >= 0.0 ? 1.0 : 0.0; },
        [&](double r) {
            const GaussianKernel k = transition_kernel(r, obs.t, u, obs.x);
            if (k.variance <= 0.0) return y >= k.mean ? 1.0 : 0.0;
            return gaussian_cdf((y - k.mean) / std::sqrt(k.variance));
        });
}

double optional_projection_oZ(const DefaultLaw& law, const Observation& obs) {
    if (!(obs.t > 0.0)) throw DomainError("optional projection requires t > 0");
    if (obs.defaulted || obs.x == 0.0) return 0.0;
    PosteriorCurve curve(law, obs);
    const double integral = curve.integrate_weighted_gap(
        [](double, double r_minus_t) { return 1.0 / r_minus_t; },
        {obs.t, std::numeric_limits<double>::infinity()}, true);
    return obs.x * integral;
}

DriftEvaluator::DriftEvaluator(const DefaultLaw& law, std::shared_ptr<const PathGrid> grid,
                               Options options)
    : law_(law), grid_(std::move(grid)), options_(options) {
    if (!grid_) throw DomainError("null grid");
    tables_.resize(grid_->times.size());
    if (!options_.tabulate || !law_.has_continuous_part()) return;

    const int n = options_.nodes;
    parallel_for(grid_->times.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = std::max<std::size_t>(begin, 1); i < end; ++i) {
            const double s = grid_->times[i];
            if (!(law_.survival(s) > 0.0)) continue;
            const double x_max = options_.x_sigmas * std::sqrt(s) + 0.25;
            std::vector<double> xs(n + 1);
            std::vector<double> ys(n + 1);
            for (int j = 0; j <= n; ++j) {
                // graded abscissa, quadratic toward 0 where the drift is steepest
                const double frac = static_cast<double>(j) / n;
                xs[j] = x_max * frac * frac;
            }
            xs[0] = xs[1] * 0.25;  // the drift has a finite one-sided limit at 0+
            for (int j = 0; j <= n; ++j) ys[j] = at_time(s, xs[j]);
            tables_[i] = detail::PchipTable(std::move(xs), std::move(ys));
        }
    });
}

double DriftEvaluator::at_index(std::size_t i, double x) const {
    if (i >= grid_->times.size()) throw DomainError("grid index out of range");
    if (x == 0.0 || i == 0) return 0.0;
    const auto& tab = tables_[i];
    if (tab.empty()) return at_time(grid_->times[i], x);
    const double ax = std::abs(x);
    if (ax > tab.x_back()) return at_time(grid_->times[i], x);
    const double val = tab(ax);
    return x < 0.0 ? -val : val;
}

double DriftEvaluator::at_time(double s, double x) const {
    if (x == 0.0 || s <= 0.0) return 0.0;
    if (!(law_.survival(s) > 0.0)) return 0.0;
    return optional_projection_oZ(law_, Observation{s, x, false});
}

}  // namespace infobridge
