#pragma once

#include <string>
#include <vector>

#include "vexfluid/rational.hpp"

namespace vexfluid {

/// One asymptotic term (1+t)^power * log(1+t)^log_k, tracked up to a
/// multiplicative constant. `tag` records which estimate produced it, for
/// the proof transcript.
struct PowerLogTerm {
    Rational power;
    int log_k = 0;
    std::string tag;

    /// Domination order: larger power wins; on equal powers, more logs win.
    bool dominates(const PowerLogTerm& o) const {
        if (power != o.power) return o.power < power;
        return log_k > o.log_k;
    }
    bool same_shape(const PowerLogTerm& o) const {
        return power == o.power && log_k == o.log_k;
    }

    PowerLogTerm squared() const { return {power * 2, 2 * log_k, tag}; }
    PowerLogTerm times(const PowerLogTerm& o, const std::string& new_tag) const {
        return {power + o.power, log_k + o.log_k, new_tag};
    }

    std::string str() const;
};

/// Finite sum of power-log terms, normalized so no two terms share
/// (power, log_k). Constants are dropped throughout, so a sum is fully
/// described by the shapes it contains and bounded by its dominant term.
class TermSum {
  public:
    TermSum() = default;

    /// Inserts a term, merging it with an existing term of the same shape.
    void add(PowerLogTerm t);

    const std::vector<PowerLogTerm>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// The term that bounds the whole sum for large t.
    const PowerLogTerm& dominant() const;

    std::string str() const;

  private:
    std::vector<PowerLogTerm> terms_;
};

/// Antiderivative shape of integrating (1+s)^a log^k(1+s) over (0, t):
///   a > -1  ->  (1+t)^{a+1} log^k(1+t)
///   a = -1  ->  log^{k+1}(1+t)
///   a < -1  ->  bounded, i.e. (1+t)^0
PowerLogTerm time_integrate(const PowerLogTerm& t);

/// Frequency-ball integral over the shrinking set {C0 |k|^2 f(s) <= f'(s)}
/// with f(s) = (1+s)^{4+gamma}: the ball radius scales like (1+s)^{-1/2},
/// so integrating |k|^q over it contributes (1+s)^{-(q+d)/2}. Returns the
/// time weight multiplied by that power; gamma enters only through the
/// dropped constant and is accepted for transcript context.
PowerLogTerm ball_integrate(int radial_power, const PowerLogTerm& time_weight,
                            const Rational& gamma, int dim, const std::string& tag);

}  // namespace vexfluid
