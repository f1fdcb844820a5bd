// Simulation of the two-driver model: exponential densities Z^nu under
// parametrized controls and wealth under constant dollar exposure.
//
// Z advances in log space with nu frozen per step,
//   log Z += -lambda dB - nu dW - (lambda^2 + nu^2)/2 dt,
// which keeps Z > 0 structurally and makes each step's factor a conditional
// mean-one lognormal, so E[Z_T] = 1 holds exactly in the discretization.

#ifndef FACELIFT_MARKET_SIM_HPP
#define FACELIFT_MARKET_SIM_HPP

#include <cmath>
#include <vector>

#include "facelift/controls.hpp"
#include "facelift/endowment.hpp"
#include "facelift/market.hpp"
#include "facelift/parallel.hpp"
#include "facelift/paths.hpp"
#include "facelift/stats.hpp"

namespace facelift {

// One path of one pure control; returns log Z_T and eta_T.
inline void walk_density(const MarketParams& pm, const ControlParams& ctrl, double eta0,
                         const double* dB, const double* dW, std::size_t n_steps, double dt,
                         double& log_z_out, double& eta_out) {
    const double lam = pm.lambda;
    double log_z = 0.0, eta = eta0, t = 0.0;
    for (std::size_t k = 0; k < n_steps; ++k) {
        const double nu = ctrl.nu(t, eta, eta0);
        log_z += -lam * dB[k] - nu * dW[k] - 0.5 * (lam * lam + nu * nu) * dt;
        eta += dW[k];
        t += dt;
    }
    log_z_out = log_z;
    eta_out = eta;
}

// Terminal summary of every path for a set of base controls sharing the same
// increments (common random numbers).  per_path receives
//   (block, path, z_per_base[], eta_T, B_T)
// and runs under the block-parallel scheduler; it must only touch per-block
// state.
template <class F>
void scan_terminals(const MarketParams& pm, const EndowmentSpec& endow,
                    const std::vector<ControlParams>& bases, const PathBundle& bundle,
                    F&& per_path) {
    const std::size_t n_steps = bundle.n_steps();
    const double dt = bundle.dt();
    const double eta0 = endow.eta0();
    for_each_block(bundle.n_paths(), [&](std::size_t block, std::size_t begin, std::size_t end) {
        std::vector<double> dB(n_steps), dW(n_steps), z(bases.size());
        for (std::size_t p = begin; p < end; ++p) {
            bundle.fill_path(p, dB.data(), dW.data());
            double B_T = 0.0, eta_T = eta0;
            for (std::size_t k = 0; k < n_steps; ++k) {
                B_T += dB[k];
                eta_T += dW[k];
            }
            for (std::size_t u = 0; u < bases.size(); ++u) {
                double log_z, eta_dummy;
                walk_density(pm, bases[u], eta0, dB.data(), dW.data(), n_steps, dt, log_z, eta_dummy);
                z[u] = std::exp(log_z);
            }
            per_path(block, p, z.data(), eta_T, B_T);
        }
    });
}

// Spec op: per-path (Z_T, eta_T) for one pure control.
struct DensityTerminals {
    std::vector<double> z_T;
    std::vector<double> eta_T;
};

inline DensityTerminals density_terminal(const MarketParams& pm, const ControlParams& ctrl,
                                         const PathBundle& bundle, const EndowmentSpec& endow) {
    DensityTerminals out;
    out.z_T.resize(bundle.n_paths());
    out.eta_T.resize(bundle.n_paths());
    scan_terminals(pm, endow, {ctrl}, bundle,
                   [&](std::size_t, std::size_t p, const double* z, double eta_T, double) {
                       out.z_T[p] = z[0];
                       out.eta_T[p] = eta_T;
                   });
    return out;
}

// Wealth under constant dollar exposure theta: X_T = x + theta(mu T + sigma B_T).
// The admissibility monitor tracks the running minimum of X on the step grid
// and counts paths whose minimum breaches the floor (reported, never raised).
struct WealthTerminals {
    std::vector<double> x_T;
    std::vector<double> eta_T;
    std::size_t floor_breaches = 0;
    double min_wealth = 0.0;
};

inline WealthTerminals wealth_terminal(const MarketParams& pm, double theta,
                                       const PathBundle& bundle, double x0,
                                       const EndowmentSpec& endow, double floor = neg_inf) {
    const std::size_t n_steps = bundle.n_steps();
    const double dt = bundle.dt();
    WealthTerminals out;
    out.x_T.resize(bundle.n_paths());
    out.eta_T.resize(bundle.n_paths());
    const std::size_t nblocks = block_count(bundle.n_paths());
    std::vector<std::size_t> breaches(nblocks, 0);
    std::vector<double> minw(nblocks, pos_inf);
    for_each_block(bundle.n_paths(), [&](std::size_t block, std::size_t begin, std::size_t end) {
        std::vector<double> dB(n_steps), dW(n_steps);
        for (std::size_t p = begin; p < end; ++p) {
            bundle.fill_path(p, dB.data(), dW.data());
            double B = 0.0, eta = endow.eta0(), x = x0, path_min = x0;
            for (std::size_t k = 0; k < n_steps; ++k) {
                B += dB[k];
                eta += dW[k];
                x = x0 + theta * (pm.mu * dt * double(k + 1) + pm.sigma * B);
                path_min = std::min(path_min, x);
            }
            out.x_T[p] = x;
            out.eta_T[p] = eta;
            if (path_min < floor) ++breaches[block];
            minw[block] = std::min(minw[block], path_min);
        }
    });
    for (std::size_t b = 0; b < nblocks; ++b) out.floor_breaches += breaches[b];
    out.min_wealth = pos_inf;
    for (std::size_t b = 0; b < nblocks; ++b) out.min_wealth = std::min(out.min_wealth, minw[b]);
    return out;
}

} // namespace facelift

#endif
