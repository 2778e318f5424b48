#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nfl/domain.hpp"
#include "nfl/random.hpp"

namespace nfl {

// Monte-Carlo estimate; stderr is sample-sd / sqrt(trials), 0 in exact mode.
struct McEstimate {
    double mean{0.0};
    double stderr_of_mean{0.0};
    std::uint64_t trials{0};
};

// Streaming mean/variance (Welford).
class McAccumulator {
  public:
    void add(double value) {
        ++count_;
        const double delta = value - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (value - mean_);
    }

    std::uint64_t count() const { return count_; }
    double mean() const { return mean_; }

    double stderr_of_mean() const {
        if (count_ < 2) return 0.0;
        const double variance = m2_ / static_cast<double>(count_ - 1);
        return std::sqrt(variance / static_cast<double>(count_));
    }

    McEstimate estimate() const { return {mean_, stderr_of_mean(), count_}; }

  private:
    std::uint64_t count_{0};
    double mean_{0.0};
    double m2_{0.0};
};

// Inverse-CDF sampler over a situation's finite domain.
class SituationSampler {
  public:
    explicit SituationSampler(const StochasticSituation& d) : d_(d), cdf_(d.size()) {
        double cum = 0.0;
        for (std::uint32_t x = 0; x < d.size(); ++x) {
            cum += d.marginal(x);
            cdf_[x] = cum;
        }
        cdf_.back() = 1.0;
    }

    Instance draw_instance(Rng& rng) const {
        const double u = rng.uniform01();
        std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(cdf_.size()) - 1;
        while (lo < hi) {
            const std::uint32_t mid = lo + (hi - lo) / 2;
            if (cdf_[mid] <= u)
                lo = mid + 1;
            else
                hi = mid;
        }
        return Instance{lo, d_.bits()};
    }

    Sample draw_sample(std::size_t n, Rng& rng) const {
        Sample s;
        s.pairs.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const Instance x = draw_instance(rng);
            const Label y = label_from_value(rng.uniform01() < d_.p_label1(x.index) ? 1 : 0);
            s.add(x, y);
        }
        return s;
    }

  private:
    const StochasticSituation& d_;
    std::vector<double> cdf_;
};

}  // namespace nfl
