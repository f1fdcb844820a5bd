#include "facelift/germ.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "facelift/market_sim.hpp"

namespace facelift {

namespace {

std::size_t auto_steps(double T) {
    const double want = T / 2.5e-4;
    return std::size_t(std::clamp(want, 50.0, 800.0));
}

// One CRN pass over the bundle for a batch of candidates; returns E[Z phi] stats per candidate.
std::vector<MeanCI> evaluate_germ_menu(const MarketParams& params, const EndowmentSpec& endow,
                                       const std::vector<ControlParams>& menu,
                                       const PathBundle& bundle) {
    const std::size_t nblocks = block_count(bundle.n_paths());
    std::vector<std::vector<BlockAccumulator>> acc(menu.size(),
                                                   std::vector<BlockAccumulator>(nblocks));
    scan_terminals(params, endow, menu, bundle,
                   [&](std::size_t block, std::size_t, const double* z, double eta_T, double) {
                       const double phi = endow(eta_T);
                       for (std::size_t u = 0; u < menu.size(); ++u)
                           acc[u][block].add(z[u] * phi);
                   });
    std::vector<MeanCI> out(menu.size());
    for (std::size_t u = 0; u < menu.size(); ++u) out[u] = combine_blocks(acc[u]);
    return out;
}

} // namespace

MeanCI germ_mc_estimate(const MarketParams& params, double T, const EndowmentSpec& endow,
                        const ControlParams& control, const PathBundle& bundle) {
    if (std::abs(bundle.horizon() - T) > 1e-12 * std::max(1.0, T))
        throw std::invalid_argument("germ_mc_estimate: bundle horizon does not match T");
    return evaluate_germ_menu(params, endow, {control}, bundle)[0];
}

GermOptResult optimize_germ(const MarketParams& params, double T, const EndowmentSpec& endow,
                            std::size_t budget, std::uint64_t seed, const GermOptions& opts) {
    if (budget < 20) throw std::invalid_argument("optimize_germ: budget must be >= 20");
    const std::size_t n_steps = opts.n_steps ? opts.n_steps : auto_steps(T);
    PathBundle bundle(T, n_steps, opts.n_paths, seed);

    double lo = opts.eta_lo, hi = opts.eta_hi;
    if (lo == hi) {
        // reachable window: |nu| <= nu_max over T, padded by diffusion
        const double span = std::min(opts.nu_max * T, 12.0) + 4.0 * std::sqrt(T) + 1.0;
        lo = endow.eta0() - span;
        hi = endow.eta0() + span;
    }

    // Phase A menu: the trivial control, then (eta*, kappa) products, strongest kappa first.
    std::vector<ControlParams> menu;
    menu.push_back(ControlParams::zero());
    std::vector<double> kappas;
    for (double k = opts.kappa_max; k >= opts.kappa_max * 1e-3 - 1e-30 && kappas.size() < 4; k /= 10.0)
        kappas.push_back(k);
    const int n_eta = 9;
    for (int i = 0; i < n_eta; ++i) {
        const double eta_star = lo + (hi - lo) * double(i) / double(n_eta - 1);
        for (double k : kappas) menu.push_back(ControlParams::push(eta_star, k, opts.nu_max));
    }
    if (menu.size() > budget) menu.resize(budget);

    std::vector<MeanCI> stats = evaluate_germ_menu(params, endow, menu, bundle);
    GermOptResult res;
    std::size_t best = 0;
    for (std::size_t u = 0; u < menu.size(); ++u) {
        res.trace.push_back({menu[u], stats[u]});
        if (stats[u].mean < stats[best].mean) best = u;
    }
    res.best = menu[best];
    res.estimate = stats[best];

    // Phase B: a finer eta* sweep around the winner at its kappa, budget permitting.
    if (menu.size() < budget && res.best.family == ControlParams::Family::push) {
        const double step = (hi - lo) / double(n_eta - 1);
        std::vector<ControlParams> refine;
        const std::size_t room = std::min<std::size_t>(budget - menu.size(), 12);
        for (std::size_t i = 0; i < room; ++i) {
            const double eta_star =
                res.best.eta_star - step + 2.0 * step * double(i + 1) / double(room + 1);
            refine.push_back(ControlParams::push(eta_star, res.best.kappa, opts.nu_max));
        }
        std::vector<MeanCI> rs = evaluate_germ_menu(params, endow, refine, bundle);
        for (std::size_t u = 0; u < refine.size(); ++u) {
            res.trace.push_back({refine[u], rs[u]});
            if (rs[u].mean < res.estimate.mean) {
                res.best = refine[u];
                res.estimate = rs[u];
            }
        }
    }
    return res;
}

GermDetGridResult germ_A_detgrid(const MarketParams& params, double T, const EndowmentSpec& endow,
                                 const std::vector<double>& time_grid, std::size_t budget,
                                 std::uint64_t seed, const GermOptions& opts) {
    if (time_grid.empty()) throw std::invalid_argument("germ_A_detgrid: empty time grid");
    for (double t : time_grid)
        if (!(t > 0.0) || t > T + 1e-12)
            throw std::invalid_argument("germ_A_detgrid: grid times must lie in (0, T]");
    GermDetGridResult out;
    out.estimate = pos_inf;
    out.t_argmin = time_grid.front();
    const std::size_t per_budget = std::max<std::size_t>(20, budget / time_grid.size());
    for (double t : time_grid) {
        GermOptResult r = optimize_germ(params, t, endow, per_budget, seed, opts);
        if (r.estimate.mean < out.estimate) {
            out.estimate = r.estimate.mean;
            out.t_argmin = t;
        }
        out.per_time.emplace_back(t, std::move(r));
    }
    return out;
}

double germ_analytic(GermRegime regime, const EndowmentSpec& endow) {
    return regime == GermRegime::complete ? endow.phi0() : endow.inf_phi();
}

} // namespace facelift
