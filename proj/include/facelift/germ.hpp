// Lower-hedging germ prices: Monte Carlo estimates of Phi^E_T = inf E[Z_T phi_T]
// over the parametrized control families, the deterministic-time-grid
// relaxation of Phi^A_T, and the analytic limits (phi_0 in complete markets,
// inf phi under sufficient controllability).

#ifndef FACELIFT_GERM_HPP
#define FACELIFT_GERM_HPP

#include <cstdint>
#include <vector>

#include "facelift/controls.hpp"
#include "facelift/endowment.hpp"
#include "facelift/market.hpp"
#include "facelift/paths.hpp"
#include "facelift/stats.hpp"

namespace facelift {

// Unbiased estimate of E[Z^nu_T phi(eta_T)] on the bundle's horizon.
MeanCI germ_mc_estimate(const MarketParams& params, double T, const EndowmentSpec& endow,
                        const ControlParams& control, const PathBundle& bundle);

struct GermOptions {
    double kappa_max = 1e4;
    double nu_max = 1e3;
    double eta_lo = 0.0;   // push-target search window; equal bounds -> auto
    double eta_hi = 0.0;
    std::size_t n_paths = 100000;
    std::size_t n_steps = 0; // 0 -> resolution-matched to T
};

struct GermCandidateRow {
    ControlParams control;
    MeanCI estimate;
};

struct GermOptResult {
    ControlParams best;
    MeanCI estimate;
    std::vector<GermCandidateRow> trace; // evaluated candidates, in menu order
};

// Coordinate search over (eta*, kappa) with common random numbers; the
// candidate menu is a fixed deterministic sequence and `budget` takes a
// prefix, so the optimum is exactly nonincreasing in budget.
GermOptResult optimize_germ(const MarketParams& params, double T, const EndowmentSpec& endow,
                            std::size_t budget, std::uint64_t seed, const GermOptions& opts = {});

// Deterministic-time relaxation of the American germ price: min over the grid
// of per-time optimized estimates.
struct GermDetGridResult {
    double estimate;
    double t_argmin;
    std::vector<std::pair<double, GermOptResult>> per_time;
};

GermDetGridResult germ_A_detgrid(const MarketParams& params, double T, const EndowmentSpec& endow,
                                 const std::vector<double>& time_grid, std::size_t budget,
                                 std::uint64_t seed, const GermOptions& opts = {});

enum class GermRegime { complete, controllable };

double germ_analytic(GermRegime regime, const EndowmentSpec& endow);

} // namespace facelift

#endif
