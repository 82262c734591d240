#include "infobridge/cds_pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "infobridge/errors.hpp"
#include "infobridge/quadrature.hpp"

namespace infobridge {

Recovery Recovery::constant(double value) {
    if (!(value >= 0.0)) throw DomainError("recovery must be nonnegative");
    Recovery rec;
    rec.points_ = {{0.0, value}};
    return rec;
}

Recovery Recovery::piecewise_linear(std::vector<std::pair<double, double>> breakpoints) {
    if (breakpoints.empty()) throw DomainError("recovery needs at least one breakpoint");
    std::sort(breakpoints.begin(), breakpoints.end());
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i].second >= 0.0))
            throw DomainError("recovery must be nonnegative");
        if (i > 0 && !(breakpoints[i].first > breakpoints[i - 1].first))
            throw DomainError("recovery breakpoints must have strictly increasing times");
    }
    Recovery rec;
    rec.points_ = std::move(breakpoints);
    return rec;
}

double Recovery::operator()(double v) const {
    if (points_.size() == 1 || v <= points_.front().first) return points_.front().second;
    if (v >= points_.back().first) return points_.back().second;
    const auto it = std::upper_bound(points_.begin(), points_.end(), v,
                                     [](double a, const auto& p) { return a < p.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double w = (v - lo.first) / (hi.first - lo.first);
    return lo.second + w * (hi.second - lo.second);
}

std::vector<double> Recovery::breakpoints_in(double a, double b) const {
    std::vector<double> pts;
    for (const auto& p : points_)
        if (p.first > a && p.first < b) pts.push_back(p.first);
    return pts;
}

void CdsContract::validate() const {
    if (!(maturity > 0.0)) throw DomainError("contract maturity must be positive");
    if (!(kappa >= 0.0)) throw DomainError("fee rate must be nonnegative");
    if (!(discount_rate >= 0.0)) throw DomainError("discount rate must be nonnegative");
}

double survival_curve_Psi(const DefaultLaw& law, const Observation& obs, double u) {
    if (obs.defaulted)
        throw DefaultedNeedsTau("survival curve is defined on the undefaulted branch");
    if (obs.t == 0.0) return law.survival(u);
    if (!(u >= obs.t)) throw DomainError("survival curve requires u >= t");
    return PosteriorCurve(law, obs).tail_mass(u);
}

namespace {

struct Legs {
    double protection = 0.0;  // PV of the recovery payment
    double fee_unit = 0.0;    // PV of the fee leg at kappa = 1
};

// Time integral with explicit splits at law/recovery breakpoints so that
// kinks and survival jumps stay inside piece boundaries.
double integrate_time(const std::function<double(double)>& f, double a, double b,
                      std::vector<double> splits) {
    if (!(b > a)) return 0.0;
    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    splits.erase(std::remove_if(splits.begin(), splits.end(),
                                [&](double v) { return v < a || v > b; }),
                 splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i)
        total += quad::integrate(f, splits[i], splits[i + 1]);
    return total;
}

// Stieltjes protection leg against an arbitrary weight: split (t,T] at the
// recovery kinks and integrate delta * e^{-r v} piece by piece.
double protection_stieltjes(const CdsContract& contract, double t,
                            const std::function<double(const std::function<double(double)>&,
                                                       TimeInterval, bool)>& stieltjes) {
    const double T = contract.maturity;
    const double r = contract.discount_rate;
    std::vector<double> edges = contract.recovery.breakpoints_in(t, T);
    edges.insert(edges.begin(), t);
    edges.push_back(T);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const auto integrand = [&](double v) {
            return contract.recovery(v) * std::exp(-r * v);
        };
        total += stieltjes(integrand, {edges[i], edges[i + 1]}, i == 0);
    }
    return total;
}

Legs legs_H(const DefaultLaw& law, const CdsContract& contract, double t) {
    const double T = contract.maturity;
    if (!(t < T)) throw DomainError("valuation time must precede maturity");
    const double gt = law.survival(t);
    if (!(law.survival(T) > 0.0) || !(gt > 0.0))
        throw ZeroSurvival("survival probability vanishes on [t, T]");
    const double r = contract.discount_rate;
    const double growth = std::exp(r * t);

    Legs legs;
    legs.protection = growth / gt *
        protection_stieltjes(contract, t,
                             [&](const std::function<double(double)>& h, TimeInterval iv, bool) {
                                 return law.integrate_dF(h, iv);
                             });
    legs.fee_unit = growth / gt *
        integrate_time([&](double v) { return std::exp(-r * v) * law.survival(v); }, t, T,
                       law.breakpoints_in(t, T));
    return legs;
}

Legs legs_beta(const DefaultLaw& law, const CdsContract& contract, const Observation& obs) {
    const double T = contract.maturity;
    const double t = obs.t;
    if (!(t < T)) throw DomainError("valuation time must precede maturity");
    const double r = contract.discount_rate;
    const double growth = std::exp(r * t);

    if (t == 0.0) {
        // the posterior at time 0 is the prior, and G(0) = 1
        return legs_H(law, contract, 0.0);
    }

    PosteriorCurve curve(law, obs);
    Legs legs;
    legs.protection = growth *
        protection_stieltjes(contract, t,
                             [&](const std::function<double(double)>& h, TimeInterval iv,
                                 bool first) {
                                 return curve.integrate_weighted(h, iv, first);
                             });
    std::vector<double> splits = law.breakpoints_in(t, T);
    legs.fee_unit = growth *
        integrate_time([&](double v) { return std::exp(-r * v) * curve.tail_mass(v); }, t, T,
                       std::move(splits));
    return legs;
}

Legs compute_legs(const DefaultLaw& law, const CdsContract& contract, const Observation& obs,
                  Filtration mode) {
    contract.validate();
    if (mode == Filtration::H) return legs_H(law, contract, obs.t);
    return legs_beta(law, contract, obs);
}

}  // namespace

Quote price_H(const DefaultLaw& law, const CdsContract& contract, double t, bool alive) {
    contract.validate();
    if (contract.discount_rate != 0.0)
        throw DomainError("price_H is the zero-rate form; use price_discounted");
    if (!alive) return {t, 0.0, QuoteBranch::post_default, Filtration::H};
    const Legs legs = legs_H(law, contract, t);
    return {t, legs.protection - contract.kappa * legs.fee_unit, QuoteBranch::pre_default,
            Filtration::H};
}

Quote price_beta(const DefaultLaw& law, const CdsContract& contract, const Observation& obs) {
    contract.validate();
    if (contract.discount_rate != 0.0)
        throw DomainError("price_beta is the zero-rate form; use price_discounted");
    if (obs.defaulted) return {obs.t, 0.0, QuoteBranch::post_default, Filtration::F_beta};
    const Legs legs = legs_beta(law, contract, obs);
    return {obs.t, legs.protection - contract.kappa * legs.fee_unit, QuoteBranch::pre_default,
            Filtration::F_beta};
}

Quote price_discounted(const DefaultLaw& law, const CdsContract& contract,
                       const Observation& obs, Filtration mode) {
    contract.validate();
    if (obs.defaulted) return {obs.t, 0.0, QuoteBranch::post_default, mode};
    const Legs legs = compute_legs(law, contract, obs, mode);
    return {obs.t, legs.protection - contract.kappa * legs.fee_unit, QuoteBranch::pre_default,
            mode};
}

double fair_spread(const DefaultLaw& law, const CdsContract& contract, const Observation& obs,
                   Filtration mode) {
    contract.validate();
    if (obs.defaulted)
        throw DegenerateFeeLeg("fair spread undefined on the defaulted branch");
    const Legs legs = compute_legs(law, contract, obs, mode);
    if (!(legs.fee_unit > 0.0))
        throw DegenerateFeeLeg("fee leg integral vanishes");
    return legs.protection / legs.fee_unit;
}

}  // namespace infobridge
