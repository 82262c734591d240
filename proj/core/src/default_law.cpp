#include "infobridge/default_law.hpp"

#include <algorithm>
#include <cmath>

#include "infobridge/errors.hpp"
#include "infobridge/quadrature.hpp"

namespace infobridge {

namespace {

constexpr double kWeightSumTol = 1e-12;

}  // namespace

DefaultLaw DefaultLaw::exponential(double rate) {
    if (!(rate > 0.0)) throw DomainError("exponential law requires rate > 0");
    DefaultLaw law;
    law.kind_ = Kind::Exponential;
    law.rate_ = rate;
    law.support_lo_ = 0.0;
    law.support_hi_ = std::numeric_limits<double>::infinity();
    return law;
}

DefaultLaw DefaultLaw::uniform_interval(double a, double b) {
    if (!(a >= 0.0) || !(a < b))
        throw DomainError("uniform law requires 0 <= a < b");
    DefaultLaw law;
    law.kind_ = Kind::UniformInterval;
    law.lo_ = a;
    law.hi_ = b;
    law.support_lo_ = a;
    law.support_hi_ = b;
    return law;
}

DefaultLaw DefaultLaw::weibull(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw DomainError("weibull law requires shape > 0 and scale > 0");
    DefaultLaw law;
    law.kind_ = Kind::Weibull;
    law.shape_ = shape;
    law.scale_ = scale;
    law.support_lo_ = 0.0;
    law.support_hi_ = std::numeric_limits<double>::infinity();
    return law;
}

DefaultLaw DefaultLaw::discrete_atoms(std::vector<Atom> atoms) {
    if (atoms.empty()) throw DomainError("atom law requires at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& x, const Atom& y) { return x.location < y.location; });
    double sum = 0.0;
    for (const auto& a : atoms) {
        if (!(a.location > 0.0)) throw DomainError("atom locations must be strictly positive");
        if (!(a.weight > 0.0)) throw DomainError("atom weights must be strictly positive");
        sum += a.weight;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol)
        throw DomainError("atom weights must sum to 1");
    DefaultLaw law;
    law.kind_ = Kind::DiscreteAtoms;
    law.atoms_ = std::move(atoms);
    law.has_density_ = false;
    law.support_lo_ = law.atoms_.front().location;
    law.support_hi_ = law.atoms_.back().location;
    return law;
}

DefaultLaw DefaultLaw::piecewise_empirical(std::vector<CdfKnot> knots) {
    if (knots.size() < 2) throw DomainError("piecewise law requires at least two knots");
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (knots[i + 1].time < knots[i].time)
            throw DomainError("piecewise knots must have nondecreasing times");
        if (knots[i + 1].cdf < knots[i].cdf)
            throw DomainError("piecewise knots must have nondecreasing cdf values");
        if (knots[i + 1].time == knots[i].time && i + 2 < knots.size() &&
            knots[i + 2].time == knots[i].time)
            throw DomainError("at most two piecewise knots may share a time");
    }
    if (!(knots.front().cdf == 0.0))
        throw DomainError("piecewise cdf must start at 0");
    if (std::abs(knots.back().cdf - 1.0) > kWeightSumTol)
        throw DomainError("piecewise cdf must end at 1");
    if (!(knots.front().time >= 0.0))
        throw DomainError("piecewise knot times must be nonnegative");
    // tau strictly positive: no jump at 0 and no mass accumulated at time 0
    if (knots.front().time == 0.0 && knots.size() > 1 && knots[1].time == 0.0)
        throw DomainError("piecewise law cannot place an atom at time 0");

    DefaultLaw law;
    law.kind_ = Kind::PiecewiseEmpirical;
    law.knots_ = std::move(knots);
    law.support_lo_ = law.knots_.front().time;
    law.support_hi_ = law.knots_.back().time;
    bool any_segment = false;
    for (std::size_t i = 0; i + 1 < law.knots_.size(); ++i) {
        const auto& k0 = law.knots_[i];
        const auto& k1 = law.knots_[i + 1];
        if (k1.time == k0.time) {
            if (k1.cdf > k0.cdf) law.atoms_.push_back({k0.time, k1.cdf - k0.cdf});
        } else if (k1.cdf > k0.cdf) {
            any_segment = true;
        }
    }
    law.has_density_ = any_segment;
    return law;
}

double DefaultLaw::cdf(double t) const {
    if (t < 0.0) return 0.0;
    switch (kind_) {
        case Kind::Exponential:
            return -std::expm1(-rate_ * t);
        case Kind::UniformInterval:
            if (t <= lo_) return 0.0;
            if (t >= hi_) return 1.0;
            return (t - lo_) / (hi_ - lo_);
        case Kind::Weibull:
            return t <= 0.0 ? 0.0 : -std::expm1(-std::pow(t / scale_, shape_));
        case Kind::DiscreteAtoms: {
            double sum = 0.0;
            for (const auto& a : atoms_) {
                if (a.location <= t) sum += a.weight;
                else break;
            }
            return sum;
        }
        case Kind::PiecewiseEmpirical: {
            // first knot with time > t; the knot before it is the last one at
            // a time <= t, which realizes right-continuity at jumps
            auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                       [](double v, const CdfKnot& k) { return v < k.time; });
            if (it == knots_.begin()) return 0.0;
            const CdfKnot& left = *(it - 1);
            if (it == knots_.end()) return left.cdf;
            if (it->time == left.time) return left.cdf;
            const double w = (t - left.time) / (it->time - left.time);
            return left.cdf + w * (it->cdf - left.cdf);
        }
    }
    return 0.0;
}

double DefaultLaw::survival(double t) const {
    if (t < 0.0) return 1.0;
    switch (kind_) {
        case Kind::Exponential:
            return std::exp(-rate_ * t);
        case Kind::UniformInterval:
            if (t <= lo_) return 1.0;
            if (t >= hi_) return 0.0;
            return (hi_ - t) / (hi_ - lo_);
        case Kind::Weibull:
            return t <= 0.0 ? 1.0 : std::exp(-std::pow(t / scale_, shape_));
        case Kind::DiscreteAtoms: {
            double sum = 0.0;
            for (auto it = atoms_.rbegin(); it != atoms_.rend(); ++it) {
                if (it->location > t) sum += it->weight;
                else break;
            }
            return sum;
        }
        case Kind::PiecewiseEmpirical:
            return 1.0 - cdf(t);
    }
    return 0.0;
}

double DefaultLaw::quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile requires u in (0,1)");
    switch (kind_) {
        case Kind::Exponential:
            return -std::log1p(-u) / rate_;
        case Kind::UniformInterval:
            return lo_ + u * (hi_ - lo_);
        case Kind::Weibull:
            return scale_ * std::pow(-std::log1p(-u), 1.0 / shape_);
        case Kind::DiscreteAtoms: {
            double cum = 0.0;
            for (const auto& a : atoms_) {
                cum += a.weight;
                if (u <= cum) return a.location;
            }
            return atoms_.back().location;
        }
        case Kind::PiecewiseEmpirical: {
            auto it = std::lower_bound(knots_.begin(), knots_.end(), u,
                                       [](const CdfKnot& k, double v) { return k.cdf < v; });
            if (it == knots_.begin()) return knots_.front().time;
            if (it == knots_.end()) return knots_.back().time;
            const CdfKnot& left = *(it - 1);
            if (it->cdf == left.cdf || it->time == left.time) return it->time;
            const double w = (u - left.cdf) / (it->cdf - left.cdf);
            return left.time + w * (it->time - left.time);
        }
    }
    return 0.0;
}

double DefaultLaw::mean() const {
    switch (kind_) {
        case Kind::Exponential:
            return 1.0 / rate_;
        case Kind::UniformInterval:
            return 0.5 * (lo_ + hi_);
        case Kind::Weibull:
            return scale_ * std::tgamma(1.0 + 1.0 / shape_);
        default:
            return integrate_dF([](double r) { return r; }, {0.0, support_hi_});
    }
}

double DefaultLaw::density(double r) const {
    switch (kind_) {
        case Kind::Exponential:
            return r < 0.0 ? 0.0 : rate_ * std::exp(-rate_ * r);
        case Kind::UniformInterval:
            return (r > lo_ && r < hi_) ? 1.0 / (hi_ - lo_) : 0.0;
        case Kind::Weibull:
            if (r <= 0.0) return 0.0;
            return (shape_ / scale_) * std::pow(r / scale_, shape_ - 1.0) *
                   std::exp(-std::pow(r / scale_, shape_));
        case Kind::DiscreteAtoms:
            return 0.0;
        case Kind::PiecewiseEmpirical: {
            auto it = std::upper_bound(knots_.begin(), knots_.end(), r,
                                       [](double v, const CdfKnot& k) { return v < k.time; });
            if (it == knots_.begin() || it == knots_.end()) return 0.0;
            const CdfKnot& left = *(it - 1);
            if (it->time == left.time) return 0.0;
            return (it->cdf - left.cdf) / (it->time - left.time);
        }
    }
    return 0.0;
}

double DefaultLaw::truncation_point(double eps) const {
    if (std::isfinite(support_hi_)) return support_hi_;
    switch (kind_) {
        case Kind::Exponential:
            return -std::log(eps) / rate_;
        case Kind::Weibull:
            return scale_ * std::pow(-std::log(eps), 1.0 / shape_);
        default:
            return support_hi_;
    }
}

std::vector<double> DefaultLaw::breakpoints_in(double a, double b) const {
    std::vector<double> pts;
    for (const auto& atom : atoms_)
        if (atom.location > a && atom.location < b) pts.push_back(atom.location);
    if (kind_ == Kind::UniformInterval) {
        if (lo_ > a && lo_ < b) pts.push_back(lo_);
        if (hi_ > a && hi_ < b) pts.push_back(hi_);
    } else if (kind_ == Kind::PiecewiseEmpirical) {
        for (const auto& k : knots_)
            if (k.time > a && k.time < b) pts.push_back(k.time);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double DefaultLaw::integrate_dF(const std::function<double(double)>& g, TimeInterval iv,
                                IntegrateOptions opts) const {
    return integrate_dF_from([&](double r, double) { return g(r); }, iv, opts);
}

double DefaultLaw::integrate_dF_from(const std::function<double(double, double)>& g,
                                     TimeInterval iv, IntegrateOptions opts) const {
    if (!(iv.lo <= iv.hi)) throw DomainError("integration interval requires lo <= hi");
    double total = 0.0;
    for (const auto& atom : atoms_)
        if (atom.location > iv.lo && atom.location <= iv.hi)
            total += atom.weight * g(atom.location, atom.location - iv.lo);
    if (!has_density_) return total;

    const double lo = std::max(iv.lo, support_lo_);
    const double hi = std::min(iv.hi, truncation_point());
    if (!(hi > lo)) return total;
    const double lead = lo - iv.lo;  // nonzero when the support starts later

    std::vector<double> edges;
    edges.push_back(lo);
    for (double p : breakpoints_in(lo, hi)) edges.push_back(p);
    edges.push_back(hi);

    quad::Options qopts;
    qopts.rel_tol = opts.rel_tol;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i];
        const double b = edges[i + 1];
        if (opts.sqrt_singularity_at_lo && i == 0) {
            // r = a + q^2 maps the piece to q in [0, sqrt(b-a)]; it removes a
            // square-root endpoint singularity exactly and hands the offset
            // q^2 to the integrand without cancellation
            const double qmax = std::sqrt(b - a);
            total += quad::integrate(
                [&](double q) {
                    const double gap = q * q;
                    const double r = a + gap;
                    return 2.0 * q * g(r, lead + gap) * density(r);
                },
                0.0, qmax, qopts);
        } else {
            total += quad::integrate(
                [&](double r) { return g(r, r - iv.lo) * density(r); }, a, b, qopts);
        }
    }
    return total;
}

}  // namespace infobridge
