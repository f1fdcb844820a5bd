// CRRA utility family (power / log), marginals and exact convex conjugates.
//
// Conventions: U is extended to the whole line by U(x) = -inf for x < 0,
// and U(0) = lim_{x->0+} U(x) (0 for p in (0,1), -inf otherwise).

#ifndef FACELIFT_UTILITY_HPP
#define FACELIFT_UTILITY_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace facelift {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();
constexpr double pos_inf = std::numeric_limits<double>::infinity();

class UtilitySpec {
public:
    enum class Kind { power, log };

    static UtilitySpec power(double p) {
        if (p >= 1.0 || p == 0.0)
            throw std::invalid_argument("power utility needs p in (-inf,1)\\{0}, got p=" + std::to_string(p));
        return UtilitySpec(Kind::power, p);
    }
    static UtilitySpec log_utility() { return UtilitySpec(Kind::log, 0.0); }

    Kind kind() const { return kind_; }
    double p() const { return p_; }

    // U(x), extended-value convention.
    double eval_u(double x) const {
        if (x < 0.0) return neg_inf;
        if (kind_ == Kind::log) return x > 0.0 ? std::log(x) : neg_inf;
        if (x == 0.0) return p_ > 0.0 ? 0.0 : neg_inf;
        return std::pow(x, p_) / p_;
    }

    // U'(x), x > 0.
    double marginal(double x) const {
        if (!(x > 0.0)) throw std::invalid_argument("marginal: x must be > 0");
        return kind_ == Kind::log ? 1.0 / x : std::pow(x, p_ - 1.0);
    }

    // (U')^{-1}(z), z > 0; strictly decreasing in z.
    double inv_marginal(double z) const {
        if (!(z > 0.0)) throw std::invalid_argument("inv_marginal: z must be > 0");
        return kind_ == Kind::log ? 1.0 / z : std::pow(z, 1.0 / (p_ - 1.0));
    }

    // V(z) = sup_{x>0} (U(x) - xz), closed form.
    double eval_v(double z) const {
        if (!(z > 0.0)) throw std::invalid_argument("eval_v: z must be > 0");
        if (kind_ == Kind::log) return -std::log(z) - 1.0;
        const double q = p_ / (p_ - 1.0);
        return (1.0 - p_) / p_ * std::pow(z, q);
    }

    // V'(z) = -(U')^{-1}(z).
    double conjugate_prime(double z) const { return -inv_marginal(z); }

    // V extended to y = 0 by its limit: +inf for log and p in (0,1), 0 for p < 0.
    // Used by Monte Carlo evaluators where zZ_T can underflow to zero.
    double eval_v_extended(double y) const {
        if (y > 0.0) return eval_v(y);
        if (kind_ == Kind::power && p_ < 0.0) return 0.0;
        return pos_inf;
    }

    std::string name() const {
        return kind_ == Kind::log ? "log" : "power:" + std::to_string(p_);
    }

private:
    UtilitySpec(Kind k, double p) : kind_(k), p_(p) {}
    Kind kind_;
    double p_;
};

} // namespace facelift

#endif
