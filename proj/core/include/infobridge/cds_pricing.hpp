#pragma once

#include <utility>
#include <vector>

#include "infobridge/bayes_filter.hpp"
#include "infobridge/default_law.hpp"

namespace infobridge {

/// Nonnegative piecewise-linear recovery function on [0, maturity];
/// constant extrapolation outside the breakpoint range.
class Recovery {
public:
    static Recovery constant(double value);
    /// Breakpoints (time, value), strictly increasing times, values >= 0.
    static Recovery piecewise_linear(std::vector<std::pair<double, double>> breakpoints);

    double operator()(double v) const;
    std::vector<double> breakpoints_in(double a, double b) const;

private:
    std::vector<std::pair<double, double>> points_;
};

struct CdsContract {
    double maturity = 1.0;       // T > 0
    double kappa = 0.0;          // continuously paid fee rate
    Recovery recovery = Recovery::constant(1.0);
    double discount_rate = 0.0;  // constant short rate r_d

    void validate() const;
};

enum class Filtration { H, F_beta };
enum class QuoteBranch { pre_default, post_default };

struct Quote {
    double t = 0.0;
    double price = 0.0;
    QuoteBranch branch = QuoteBranch::pre_default;
    Filtration filtration = Filtration::H;
};

/// Psi_t(u) = P(u < tau | F_t^beta) for an undefaulted observation;
/// the prior survival at t = 0. Nonincreasing in u with Psi_t(t) = 1.
double survival_curve_Psi(const DefaultLaw& law, const Observation& obs, double u);

/// CDS price under the minimal filtration that observes only the default
/// indicator (zero-rate form): I{alive} (1/G(t)) (-int delta dG - kappa int G).
/// Requires survival > 0 on [t, T] and discount_rate == 0.
Quote price_H(const DefaultLaw& law, const CdsContract& contract, double t, bool alive);

/// CDS price under the information filtration (zero-rate form):
/// -int_t^T delta d_v Psi_t(v) - kappa int_t^T Psi_t(v) dv, the protection leg
/// evaluated as the Stieltjes integral of delta against the posterior weights
/// (atoms handled exactly; Psi is never differentiated numerically).
Quote price_beta(const DefaultLaw& law, const CdsContract& contract, const Observation& obs);

/// General constant-rate price e^{r t}[ int e^{-r v} delta dPi_t
///   - kappa int e^{-r v} Pibar_t dv ], with Pi_t the conditional law of tau
/// under the chosen filtration. Reduces exactly to the zero-rate prices.
Quote price_discounted(const DefaultLaw& law, const CdsContract& contract,
                       const Observation& obs, Filtration mode);

/// Fair spread: the fee rate making the price zero (the contract's kappa is
/// ignored). Throws DegenerateFeeLeg when the fee leg vanishes.
double fair_spread(const DefaultLaw& law, const CdsContract& contract,
                   const Observation& obs, Filtration mode);

}  // namespace infobridge
