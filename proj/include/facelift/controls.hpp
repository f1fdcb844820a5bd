// Dual controls nu driving dZ = -Z(lambda dB + nu dW).  Under Q^nu the factor
// eta acquires drift -nu_t, so push(eta*, kappa) with nu = kappa(eta - eta*)
// mean-reverts eta toward eta* and bang(target, n) ramps eta0 -> target over
// [0, 1/n] via the constant nu = n(eta0 - target).

#ifndef FACELIFT_CONTROLS_HPP
#define FACELIFT_CONTROLS_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace facelift {

struct ControlParams {
    enum class Family { constant, push, bang };

    Family family = Family::constant;
    double nu_bar = 0.0;      // constant
    double eta_star = 0.0;    // push target
    double kappa = 0.0;       // push rate
    double bang_target = 0.0; // bang destination
    double bang_n = 1.0;      // bang: active on [0, 1/n]
    double nu_max = 1e3;      // hard clip on |nu|

    static ControlParams zero() { return constant(0.0); }
    static ControlParams constant(double nu_bar, double nu_max = 1e3) {
        ControlParams c;
        c.family = Family::constant;
        c.nu_bar = nu_bar;
        c.nu_max = nu_max;
        check(c);
        return c;
    }
    static ControlParams push(double eta_star, double kappa, double nu_max = 1e3) {
        ControlParams c;
        c.family = Family::push;
        c.eta_star = eta_star;
        c.kappa = kappa;
        c.nu_max = nu_max;
        check(c);
        return c;
    }
    static ControlParams bang(double target, double n, double nu_max = 1e3) {
        if (!(n > 0.0)) throw std::invalid_argument("bang control: n must be > 0");
        ControlParams c;
        c.family = Family::bang;
        c.bang_target = target;
        c.bang_n = n;
        c.nu_max = nu_max;
        check(c);
        return c;
    }

    double nu(double t, double eta, double eta0) const {
        double v = 0.0;
        switch (family) {
            case Family::constant: v = nu_bar; break;
            case Family::push: v = kappa * (eta - eta_star); break;
            case Family::bang: v = t < 1.0 / bang_n ? bang_n * (eta0 - bang_target) : 0.0; break;
        }
        return std::clamp(v, -nu_max, nu_max);
    }

    bool is_zero() const { return family == Family::constant && nu_bar == 0.0; }

    std::string describe() const {
        std::ostringstream os;
        switch (family) {
            case Family::constant: os << "constant(" << nu_bar << ")"; break;
            case Family::push: os << "push(" << eta_star << "," << kappa << ")"; break;
            case Family::bang: os << "bang(" << bang_target << "," << bang_n << ")"; break;
        }
        return os.str();
    }

private:
    static void check(const ControlParams& c) {
        if (!(c.nu_max > 0.0) || !std::isfinite(c.nu_max))
            throw std::invalid_argument("ControlParams: nu_max must be finite and > 0");
        if (!std::isfinite(c.nu_bar) || !std::isfinite(c.kappa) || !std::isfinite(c.eta_star) ||
            !std::isfinite(c.bang_target))
            throw std::invalid_argument("ControlParams: unbounded control parameters rejected");
    }
};

// Two-point convex combination Z = alpha Z^a + (1-alpha) Z^b.  M is convex,
// so mixtures are dual densities in their own right; alpha = 1 degenerates to
// the pure control a.
struct DualControl {
    ControlParams a;
    ControlParams b;
    double alpha = 1.0;

    DualControl() = default;
    DualControl(ControlParams pure) : a(pure), b(ControlParams::zero()), alpha(1.0) {}
    DualControl(ControlParams a_, ControlParams b_, double alpha_) : a(a_), b(b_), alpha(alpha_) {
        if (!(alpha_ >= 0.0 && alpha_ <= 1.0))
            throw std::invalid_argument("DualControl: alpha must lie in [0,1]");
    }

    bool is_mixture() const { return alpha < 1.0; }

    std::string describe() const {
        if (!is_mixture()) return a.describe();
        std::ostringstream os;
        os << "mix(" << alpha << "*" << a.describe() << "+" << (1.0 - alpha) << "*" << b.describe()
           << ")";
        return os.str();
    }
};

} // namespace facelift

#endif
