// Facelift envelope V_under(z; phi, psi): the largest convex function below
// V(z) + phi z whose difference with z psi is nonincreasing.  Equals
// V(z) + phi z up to the critical point z_c = U'(phi - psi) and continues as
// the tangent line of slope psi beyond.

#ifndef FACELIFT_ENVELOPE_HPP
#define FACELIFT_ENVELOPE_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "facelift/utility.hpp"

namespace facelift {

// z_c solving V'(z_c) + phi = psi; +inf when phi == psi.
inline double critical_z(const UtilitySpec& u, double phi, double psi) {
    if (phi < psi) throw std::invalid_argument("critical_z: requires phi >= psi");
    if (phi == psi) return pos_inf;
    return u.marginal(phi - psi);
}

class FaceliftEnvelope {
public:
    FaceliftEnvelope(const UtilitySpec& u, double phi, double psi)
        : utility_(u), phi_(phi), psi_(psi), z_c_(critical_z(u, phi, psi)) {
        // Tangent-line intercept beyond z_c: V(z_c)+phi z_c+psi(z-z_c) = U(phi-psi)+psi z.
        beyond_const_ = std::isinf(z_c_) ? 0.0 : utility_.eval_u(phi_ - psi_);
    }

    double phi() const { return phi_; }
    double psi() const { return psi_; }
    double z_c() const { return z_c_; }
    const UtilitySpec& utility() const { return utility_; }

    double eval(double z) const {
        if (!(z > 0.0)) throw std::invalid_argument("FaceliftEnvelope::eval: z must be > 0");
        if (z <= z_c_) return utility_.eval_v(z) + phi_ * z;
        return beyond_const_ + psi_ * z;
    }

    // Naive terminal value V(z) + phi z, for comparison.
    double naive(double z) const { return utility_.eval_v(z) + phi_ * z; }

    // Brute-force sup_{x > -psi} (U(x + phi) - x z) on a log-spaced grid with
    // one refinement pass around the argmax.  Independent of eval()'s branch
    // logic; this is the oracle the piecewise form is checked against.
    double sup_oracle(double z, std::size_t n_grid = 200000) const {
        if (!(z > 0.0)) throw std::invalid_argument("FaceliftEnvelope::sup_oracle: z must be > 0");
        // Substitute x = -psi + u, u > 0: maximize U(u + c) - u z + psi z, c = phi - psi >= 0.
        const double c = phi_ - psi_;
        const double u_hi = std::max({100.0 * utility_.inv_marginal(z), 10.0 * (std::abs(c) + 1.0), 1e2});
        const double u_lo = 1e-12 * std::max(1.0, c + 1.0);
        const double l_lo = std::log(u_lo), l_hi = std::log(u_hi);
        double best = neg_inf, best_l = l_lo;
        const std::size_t n = std::max<std::size_t>(n_grid, 1000);
        for (std::size_t i = 0; i < n; ++i) {
            const double l = l_lo + (l_hi - l_lo) * double(i) / double(n - 1);
            const double u = std::exp(l);
            const double g = utility_.eval_u(u + c) - u * z;
            if (g > best) { best = g; best_l = l; }
        }
        // refine uniformly in log-u around the winner
        const double dl = (l_hi - l_lo) / double(n - 1);
        const double r_lo = best_l - 2.0 * dl, r_hi = best_l + 2.0 * dl;
        for (std::size_t i = 0; i < 4000; ++i) {
            const double l = r_lo + (r_hi - r_lo) * double(i) / 3999.0;
            const double u = std::exp(l);
            const double g = utility_.eval_u(u + c) - u * z;
            if (g > best) best = g;
        }
        // include the boundary limit x -> -psi (u -> 0+), worth U(c) before the +psi z shift
        best = std::max(best, utility_.eval_u(c));
        return best + psi_ * z;
    }

private:
    UtilitySpec utility_;
    double phi_, psi_, z_c_, beyond_const_;
};

// Theorem "facelifted primal limit": U(x + phi0) for x > -Phi, -inf for
// x < -Phi; at x == -Phi the right-limit convention U(phi0 - Phi).
inline double primal_limit(const UtilitySpec& u, double phi0, double Phi, double x) {
    if (Phi > phi0) throw std::invalid_argument("primal_limit: requires Phi <= phi0");
    if (x < -Phi) return neg_inf;
    return u.eval_u(x + phi0);
}

} // namespace facelift

#endif
