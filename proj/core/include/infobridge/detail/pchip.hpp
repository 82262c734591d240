#pragma once

#include <algorithm>
#include <vector>

namespace infobridge::detail {

/// Shape-preserving cubic Hermite interpolant (Fritsch-Carlson slopes) on an
/// ascending abscissa; evaluation clamps to the end values.
class PchipTable {
public:
    PchipTable() = default;

    PchipTable(std::vector<double> xs, std::vector<double> ys)
        : xs_(std::move(xs)), ys_(std::move(ys)) {
        const std::size_t n = xs_.size();
        slopes_.assign(n, 0.0);
        if (n < 2) return;
        std::vector<double> d(n - 1);
        for (std::size_t j = 0; j + 1 < n; ++j)
            d[j] = (ys_[j + 1] - ys_[j]) / (xs_[j + 1] - xs_[j]);
        slopes_.front() = d.front();
        slopes_.back() = d.back();
        for (std::size_t j = 1; j + 1 < n; ++j) {
            if (d[j - 1] * d[j] <= 0.0) {
                slopes_[j] = 0.0;
            } else {
                const double h0 = xs_[j] - xs_[j - 1];
                const double h1 = xs_[j + 1] - xs_[j];
                const double w1 = 2.0 * h1 + h0;
                const double w2 = h1 + 2.0 * h0;
                slopes_[j] = (w1 + w2) / (w1 / d[j - 1] + w2 / d[j]);
            }
        }
    }

    bool empty() const { return xs_.size() < 2; }
    double x_front() const { return xs_.front(); }
    double x_back() const { return xs_.back(); }

    double operator()(double x) const {
        if (x <= xs_.front()) return ys_.front();
        if (x >= xs_.back()) return ys_.back();
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        const std::size_t j = static_cast<std::size_t>(it - xs_.begin()) - 1;
        const double h = xs_[j + 1] - xs_[j];
        const double w = (x - xs_[j]) / h;
        const double w2 = w * w;
        const double w3 = w2 * w;
        return (2.0 * w3 - 3.0 * w2 + 1.0) * ys_[j] + (w3 - 2.0 * w2 + w) * h * slopes_[j] +
               (-2.0 * w3 + 3.0 * w2) * ys_[j + 1] + (w3 - w2) * h * slopes_[j + 1];
    }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<double> slopes_;
};

}  // namespace infobridge::detail
