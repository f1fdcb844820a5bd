// Order-stable statistics.  Per-path values are reduced in fixed blocks of
// BLOCK paths with Kahan compensation and blocks are combined in index order,
// so estimates are byte-identical for any worker count.

#ifndef FACELIFT_STATS_HPP
#define FACELIFT_STATS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace facelift {

struct KahanSum {
    double sum = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

struct BlockAccumulator {
    KahanSum sum, sumsq;
    std::size_t count = 0;
    std::size_t inf_count = 0; // values that were +/-inf (excluded from moments)

    void add(double x) {
        if (!std::isfinite(x)) {
            ++inf_count;
            return;
        }
        sum.add(x);
        sumsq.add(x * x);
        ++count;
    }
};

struct MeanCI {
    double mean = 0.0;
    double se = 0.0;        // standard error of the mean
    double ci_half = 0.0;   // 1.96 * se
    std::size_t n = 0;
    std::size_t inf_count = 0;

    double lo() const { return mean - ci_half; }
    double hi() const { return mean + ci_half; }
};

inline MeanCI combine_blocks(const std::vector<BlockAccumulator>& blocks) {
    KahanSum s, s2;
    std::size_t n = 0, infs = 0;
    for (const auto& b : blocks) {
        s.add(b.sum.sum);
        s2.add(b.sumsq.sum);
        n += b.count;
        infs += b.inf_count;
    }
    MeanCI r;
    r.n = n;
    r.inf_count = infs;
    if (n == 0) return r;
    r.mean = s.sum / double(n);
    const double var = n > 1 ? std::max(0.0, (s2.sum - double(n) * r.mean * r.mean) / double(n - 1)) : 0.0;
    r.se = std::sqrt(var / double(n));
    r.ci_half = 1.96 * r.se;
    return r;
}

inline double pooled_se(double se1, double se2) { return std::sqrt(se1 * se1 + se2 * se2); }

} // namespace facelift

#endif
