// PathBundle: the two independent Brownian drivers (B, W) on a uniform step
// grid.  Increments are a pure function of (seed, path, step) through Philox,
// so the bundle itself is a lightweight descriptor; per-path arrays are
// materialized on demand and any path subset regenerates bit-identically.

#ifndef FACELIFT_PATHS_HPP
#define FACELIFT_PATHS_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "facelift/philox.hpp"

namespace facelift {

class PathBundle {
public:
    PathBundle(double T, std::size_t n_steps, std::size_t n_paths, std::uint64_t seed)
        : T_(T), n_steps_(n_steps), n_paths_(n_paths), seed_(seed),
          dt_(T / double(n_steps)), sqrt_dt_(std::sqrt(T / double(n_steps))) {
        if (!(T > 0.0)) throw std::invalid_argument("PathBundle: T must be > 0");
        if (n_steps < 1 || n_paths < 1)
            throw std::invalid_argument("PathBundle: n_steps and n_paths must be >= 1");
    }

    double horizon() const { return T_; }
    double dt() const { return dt_; }
    std::size_t n_steps() const { return n_steps_; }
    std::size_t n_paths() const { return n_paths_; }
    std::uint64_t seed() const { return seed_; }

    // dB and dW must each hold n_steps entries.
    void fill_path(std::size_t path, double* dB, double* dW) const {
        for (std::size_t k = 0; k < n_steps_; ++k) {
            double n0, n1;
            philox_normal_pair(seed_, path, k, 0u, n0, n1);
            dB[k] = sqrt_dt_ * n0;
            dW[k] = sqrt_dt_ * n1;
        }
    }

    std::pair<std::vector<double>, std::vector<double>> path_increments(std::size_t path) const {
        std::vector<double> dB(n_steps_), dW(n_steps_);
        fill_path(path, dB.data(), dW.data());
        return {std::move(dB), std::move(dW)};
    }

private:
    double T_;
    std::size_t n_steps_, n_paths_;
    std::uint64_t seed_;
    double dt_, sqrt_dt_;
};

inline PathBundle simulate_paths(double T, std::size_t n_steps, std::size_t n_paths,
                                 std::uint64_t seed) {
    return PathBundle(T, n_steps, n_paths, seed);
}

} // namespace facelift

#endif
