#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vexfluid/exponents.hpp"
#include "vexfluid/power_log.hpp"
#include "vexfluid/rational.hpp"

namespace vexfluid {

/// Thrown by the case-2 ladder when one of its exact comparisons on
/// (29 - 7 p_minus)/8 fails; carries the exact witness.
class ThresholdViolation : public Error {
  public:
    ThresholdViolation(std::string step_label, Rational lhs, Rational bound, bool strict);
    const std::string& step_label() const { return step_label_; }
    const Rational& lhs() const { return lhs_; }
    const Rational& bound() const { return bound_; }
    bool strict() const { return strict_; }

  private:
    std::string step_label_;
    Rational lhs_;
    Rational bound_;
    bool strict_;
};

struct LadderStallError : Error {
    explicit LadderStallError(const std::string& msg) : Error(ErrorCategory::threshold, msg) {}
};

/// One completed rung of the iteration: the bound shapes that were formed,
/// the dominating one, and the decay rate it yields.
struct LadderIteration {
    int index = 0;            // 1-based
    std::string label;        // iter_1 ... iter_final / new_iter_1 ... new_iter_final
    Rational rate_before;
    Rational rate_after;
    TermSum sum;
    PowerLogTerm dominant;
    std::vector<std::string> notes;  // threshold checks, log absorptions
};

/// Exact-arithmetic state of the decay-rate iteration. `rate` is the
/// current exponent a in ||w(t)||_2 <~ (1+t)^{-a}; it starts at 0 (uniform
/// energy bound) and climbs to the terminal gamma/2.
struct LadderState {
    Rational gamma;
    Rational p_minus;
    Rational rate;
    Rational log_margin = Rational(1, 100);  // strictness margin for log absorption
    std::vector<LadderIteration> history;

    bool terminal() const { return rate == gamma / Rational(2); }
};

/// Validates 2 < gamma < 5/2 and p_minus >= 11/5, and returns the initial
/// state with rate 0.
LadderState make_ladder_state(const Rational& gamma, const Rational& p_minus);

/// One iteration of the p_minus >= 3 chain. Throws LadderStallError if the
/// rate fails to improve before reaching gamma/2.
LadderIteration ladder_step_case1(LadderState& st);

/// One iteration of the 11/5 <= p_minus < 3 chain: the case-1 shapes plus
/// the stress term of exponent 7/2 + gamma - (3/2)alpha - beta, gated by
/// the exact comparisons (<= 3/2, < 3, < 5/2, < 2) in iteration order.
/// Throws ThresholdViolation with the exact witness when a gate fails;
/// this is where p_minus >= 17/7 becomes necessary.
LadderIteration ladder_step_case2(LadderState& st);

struct LadderResult {
    LadderState state;
    int case_id = 0;  // 1 or 2
    std::string transcript;
};

/// Runs the appropriate case to the terminal rate gamma/2 and renders a
/// human-readable transcript of every term, domination decision and
/// threshold check.
LadderResult run_ladder(const Rational& gamma, const Rational& p_minus,
                        const Rational& log_margin = Rational(1, 100));

struct LowerBoundResult {
    Rational psi_rate;   // exponent of the squared correction norm
    bool sandwich_ok;    // psi_rate > gamma, i.e. the correction decays
                         // strictly faster than the heat comparison
    TermSum sum;
    PowerLogTerm dominant;
    std::string transcript;
};

/// Replays the lower-bound chain with the established upper rate gamma/2
/// injected: ||psi||_2^2 <~ (1+t)^{-(5+2 gamma)/4}, which beats the heat
/// decay (1+t)^{-gamma} exactly when gamma < 5/2, certifying the two-sided
/// comparison through the reverse triangle inequality.
/// Pre: 2 < gamma < 5/2 and p_minus >= 17/7.
LowerBoundResult lower_bound_chain(const Rational& gamma, const Rational& p_minus);

}  // namespace vexfluid
