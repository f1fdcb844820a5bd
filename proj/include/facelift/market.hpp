#ifndef FACELIFT_MARKET_HPP
#define FACELIFT_MARKET_HPP

#include <stdexcept>

namespace facelift {

// Black-Scholes-type market: dS = S(mu dt + sigma dB), money market == 1.
// lambda = mu/sigma is the market price of risk.  mu = 0 (lambda = 0) is
// admitted for degenerate diagnostics even though the model of interest has
// mu != 0.
struct MarketParams {
    double mu;
    double sigma;
    double lambda;

    MarketParams(double mu_, double sigma_) : mu(mu_), sigma(sigma_), lambda(mu_ / sigma_) {
        if (!(sigma_ > 0.0)) throw std::invalid_argument("MarketParams: sigma must be > 0");
    }
};

} // namespace facelift

#endif
