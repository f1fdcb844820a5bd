// Bounded continuous terminal endowment phi(eta_T), eta_t = eta0 + W_t.
// Two shapes: logistic c0 + c1 * sigmoid((eta - m)/s) and piecewise-linear
// tables with flat extrapolation.

#ifndef FACELIFT_ENDOWMENT_HPP
#define FACELIFT_ENDOWMENT_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace facelift {

class EndowmentSpec {
public:
    enum class Kind { logistic, piecewise };

    static EndowmentSpec logistic(double eta0, double c0, double c1, double m, double s) {
        if (!(s > 0.0)) throw std::invalid_argument("EndowmentSpec: logistic scale s must be > 0");
        EndowmentSpec e;
        e.kind_ = Kind::logistic;
        e.eta0_ = eta0;
        e.c0_ = c0; e.c1_ = c1; e.m_ = m; e.s_ = s;
        e.inf_ = c1 >= 0.0 ? c0 : c0 + c1;
        e.sup_ = c1 >= 0.0 ? c0 + c1 : c0;
        return e;
    }

    static EndowmentSpec constant(double eta0, double c) { return logistic(eta0, c, 0.0, 0.0, 1.0); }

    // nodes must be strictly increasing in eta; flat extrapolation outside.
    static EndowmentSpec piecewise(double eta0, std::vector<std::pair<double, double>> nodes) {
        if (nodes.empty()) throw std::invalid_argument("EndowmentSpec: empty piecewise table");
        for (std::size_t i = 1; i < nodes.size(); ++i)
            if (!(nodes[i].first > nodes[i - 1].first))
                throw std::invalid_argument("EndowmentSpec: piecewise nodes must be strictly increasing");
        EndowmentSpec e;
        e.kind_ = Kind::piecewise;
        e.eta0_ = eta0;
        e.nodes_ = std::move(nodes);
        e.inf_ = e.sup_ = e.nodes_[0].second;
        for (const auto& [x, v] : e.nodes_) {
            e.inf_ = std::min(e.inf_, v);
            e.sup_ = std::max(e.sup_, v);
        }
        return e;
    }

    double operator()(double eta) const {
        if (kind_ == Kind::logistic)
            return c0_ + c1_ / (1.0 + std::exp(-(eta - m_) / s_));
        if (eta <= nodes_.front().first) return nodes_.front().second;
        if (eta >= nodes_.back().first) return nodes_.back().second;
        auto it = std::upper_bound(nodes_.begin(), nodes_.end(), eta,
                                   [](double x, const auto& n) { return x < n.first; });
        const auto& [x1, v1] = *it;
        const auto& [x0, v0] = *(it - 1);
        return v0 + (v1 - v0) * (eta - x0) / (x1 - x0);
    }

    double eta0() const { return eta0_; }
    double inf_phi() const { return inf_; }
    double sup_phi() const { return sup_; }
    double phi0() const { return (*this)(eta0_); }
    Kind kind() const { return kind_; }
    bool is_constant() const { return inf_ == sup_; }

    // True when {phi = inf phi} has positive Lebesgue measure: a constant phi,
    // a flat minimal segment, or flat extrapolation at the min level (half-line).
    bool attains_inf_on_interval() const {
        if (is_constant()) return true;
        if (kind_ == Kind::logistic) return false; // strict monotone, inf not attained
        if (nodes_.front().second == inf_ || nodes_.back().second == inf_) return true;
        for (std::size_t i = 1; i < nodes_.size(); ++i)
            if (nodes_[i - 1].second == inf_ && nodes_[i].second == inf_) return true;
        return false;
    }

private:
    EndowmentSpec() = default;
    Kind kind_ = Kind::logistic;
    double eta0_ = 0.0;
    double c0_ = 0.0, c1_ = 0.0, m_ = 0.0, s_ = 1.0;
    double inf_ = 0.0, sup_ = 0.0;
    std::vector<std::pair<double, double>> nodes_;
};

} // namespace facelift

#endif
