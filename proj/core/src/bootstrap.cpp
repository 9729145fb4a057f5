#include "vexfluid/bootstrap.hpp"

#include <sstream>

namespace vexfluid {

namespace {

const Rational kTwo(2);
const Rational kFiveHalves(5, 2);
const Rational kFour(4);

/// Builds the shapes shared by both cases for the current rate a:
///   data    : the initial-data energy, (1+t)^0
///   heat    : weight (3+gamma) times heat decay (1+s)^{-gamma}, integrated
///   ball    : weight (3+gamma) against |k|^2 over the shrinking ball
///   duhamel : same ball term carrying the squared bracket
///             (1 + int_0^s (1+tau)^{-a} dtau)^2
TermSum base_terms(const LadderState& st) {
    const Rational g = st.gamma;
    TermSum sum;
    sum.add({Rational(0), 0, "initial-data-energy"});
    sum.add(time_integrate({Rational(3), 0, "heat-comparison"}));

    const PowerLogTerm weight{Rational(3) + g, 0, "weight"};
    sum.add(time_integrate(ball_integrate(2, weight, g, 3, "ball-volume")));

    const PowerLogTerm one{Rational(0), 0, "bracket-1"};
    PowerLogTerm cum = time_integrate({-st.rate, 0, "bracket-duhamel"});
    PowerLogTerm bracket = cum.dominates(one) ? cum : one;
    PowerLogTerm ball = ball_integrate(2, weight, g, 3, "ball-duhamel");
    sum.add(time_integrate(bracket.squared().times(ball, "ball-duhamel")));
    return sum;
}

/// Replaces dominated log-carrying shapes by (1+t)^4 when the strictness
/// margin allows, mirroring log(1+x) <= C x^eps for small eps.
void absorb_logs(TermSum& sum, const Rational& margin, std::vector<std::string>* notes) {
    TermSum out;
    for (const auto& t : sum.terms()) {
        if (t.log_k > 0 && t.power + margin <= kFour) {
            if (notes) {
                notes->push_back("absorbed " + t.str() + " into (1+t)^{4} (margin " +
                                 margin.str() + ")");
            }
            out.add({kFour, 0, t.tag + " (log-absorbed)"});
        } else {
            out.add(t);
        }
    }
    sum = out;
}

LadderIteration finish_step(LadderState& st, TermSum sum, const std::string& label_prefix,
                            std::vector<std::string> notes) {
    absorb_logs(sum, st.log_margin, &notes);
    const PowerLogTerm dominant = sum.dominant();
    if (dominant.log_k > 0) {
        throw LadderStallError("dominant term " + dominant.str() +
                               " carries an unabsorbable log; cannot continue");
    }

    LadderIteration it;
    it.index = static_cast<int>(st.history.size()) + 1;
    it.rate_before = st.rate;
    it.rate_after = (kFour + st.gamma - dominant.power) / kTwo;
    it.sum = std::move(sum);
    it.dominant = dominant;
    it.notes = std::move(notes);

    const Rational cap = st.gamma / kTwo;
    if (cap < it.rate_after) {
        throw LadderStallError("rate " + it.rate_after.str() + " exceeds the cap gamma/2 = " +
                               cap.str() + "; term bookkeeping is inconsistent");
    }
    if (it.rate_after <= st.rate && st.rate < cap) {
        throw LadderStallError("rate stalled at " + st.rate.str() + " (next would be " +
                               it.rate_after.str() + ")");
    }
    it.label = label_prefix + (it.rate_after == cap ? "final" : std::to_string(it.index));

    st.rate = it.rate_after;
    st.history.push_back(it);
    return it;
}

void gate(std::vector<std::string>& notes, const LadderState& st, int iteration,
          const std::string& label_hint) {
    // The exact comparisons asserted in iteration order. The first is the
    // binding one: (29 - 7 p_minus)/8 <= 3/2 holds iff p_minus >= 17/7.
    struct Gate {
        Rational bound;
        bool strict;
    };
    const Gate gates[] = {
        {Rational(3, 2), false},
        {Rational(3), true},
        {kFiveHalves, true},
        {kTwo, true},
    };
    const Rational lhs = threshold_lhs(st.p_minus);
    if (iteration <= 4) {
        const Gate& gt = gates[iteration - 1];
        if (!threshold_check(st.p_minus, gt.bound, gt.strict)) {
            throw ThresholdViolation(label_hint, lhs, gt.bound, gt.strict);
        }
        notes.push_back("threshold: 7/2 - (3/2)alpha - beta = " + lhs.str() + " " +
                        (gt.strict ? "<" : "<=") + " " + gt.bound.str());
    } else {
        // Closing step: the stress term must sit below (1+t)^4, i.e.
        // lhs + gamma < 4, which follows from lhs <= 3/2 and gamma < 5/2.
        if (!(lhs + st.gamma < kFour)) {
            throw ThresholdViolation(label_hint, lhs + st.gamma, kFour, true);
        }
        notes.push_back("threshold: (7/2 - (3/2)alpha - beta) + gamma = " +
                        (lhs + st.gamma).str() + " < 4");
    }
}

std::string render_iteration(const LadderIteration& it) {
    std::ostringstream os;
    os << "[" << it.label << "] from ||w||_2 <~ (1+t)^{-" << it.rate_before.str() << "}\n";
    os << "  shapes: " << it.sum.str() << "\n";
    for (const auto& n : it.notes) os << "  " << n << "\n";
    os << "  dominant: " << it.dominant.str() << "  (" << it.dominant.tag << ")\n";
    os << "  new rate: ||w||_2 <~ (1+t)^{-" << it.rate_after.str() << "}\n";
    return os.str();
}

}  // namespace

ThresholdViolation::ThresholdViolation(std::string step_label, Rational lhs, Rational bound,
                                       bool strict)
    : Error(ErrorCategory::threshold,
            "threshold violated at " + step_label + ": " + lhs.str() + " " +
                (strict ? "<" : "<=") + " " + bound.str() + " is false (witness " + lhs.str() +
                ")"),
      step_label_(std::move(step_label)),
      lhs_(std::move(lhs)),
      bound_(std::move(bound)),
      strict_(strict) {}

LadderState make_ladder_state(const Rational& gamma, const Rational& p_minus) {
    if (!(kTwo < gamma && gamma < kFiveHalves)) {
        throw DomainError("gamma must lie strictly in (2, 5/2), got " + gamma.str());
    }
    if (p_minus < Rational(11, 5)) {
        throw DomainError("p_minus must be >= 11/5, got " + p_minus.str());
    }
    LadderState st;
    st.gamma = gamma;
    st.p_minus = p_minus;
    st.rate = Rational(0);
    return st;
}

LadderIteration ladder_step_case1(LadderState& st) {
    if (st.p_minus < Rational(3)) {
        throw DomainError("case-1 ladder requires p_minus >= 3, got " + st.p_minus.str());
    }
    return finish_step(st, base_terms(st), "iter_", {});
}

LadderIteration ladder_step_case2(LadderState& st) {
    if (!(st.p_minus < Rational(3))) {
        throw DomainError("case-2 ladder requires p_minus < 3, got " + st.p_minus.str());
    }
    const int iteration = static_cast<int>(st.history.size()) + 1;
    const std::string label_hint =
        "new_iter_" + (iteration >= 5 ? std::string("final") : std::to_string(iteration));

    std::vector<std::string> notes;
    gate(notes, st, iteration, label_hint);

    const AlphaBeta ab = alpha_beta(st.p_minus);
    TermSum sum = base_terms(st);

    // Stress term: the prior-solution decay (1+tau)^{-3/4} drives the
    // 4 alpha/(2-beta) power integral inside the Hoelder-split bracket,
    // which lands on the integrand exponent 5/2 + gamma - (3/2)alpha - beta.
    const Rational integrand =
        kFiveHalves + st.gamma - Rational(3, 2) * ab.alpha - ab.beta;
    sum.add(time_integrate({integrand, 0, "stress-l1"}));
    notes.push_back("stress-l1 exponent: 7/2 + gamma - (3/2)alpha - beta = " +
                    (integrand + Rational(1)).str() + " (alpha " + ab.alpha.str() + ", beta " +
                    ab.beta.str() + ")");

    return finish_step(st, std::move(sum), "new_iter_", std::move(notes));
}

LadderResult run_ladder(const Rational& gamma, const Rational& p_minus,
                        const Rational& log_margin) {
    LadderResult res;
    res.state = make_ladder_state(gamma, p_minus);
    res.state.log_margin = log_margin;
    res.case_id = (p_minus < Rational(3)) ? 2 : 1;

    std::ostringstream os;
    os << "bootstrap ladder: case " << res.case_id << " (p_minus = " << p_minus.str()
       << "), gamma = " << gamma.str() << "\n";
    os << "start: ||w(t)||_2 <~ (1+t)^{-0} (uniform energy bound)\n";

    constexpr int kMaxIterations = 64;
    int n = 0;
    while (!res.state.terminal()) {
        if (++n > kMaxIterations) {
            throw LadderStallError("ladder failed to terminate after 64 iterations");
        }
        const LadderIteration it = (res.case_id == 2) ? ladder_step_case2(res.state)
                                                      : ladder_step_case1(res.state);
        os << render_iteration(it);
    }
    const Rational terminal = gamma / kTwo;
    os << "terminal rate gamma/2 = " << terminal.str() << "\n";
    res.transcript = os.str();
    return res;
}

LowerBoundResult lower_bound_chain(const Rational& gamma, const Rational& p_minus) {
    if (!(kTwo < gamma && gamma < kFiveHalves)) {
        throw DomainError("gamma must lie strictly in (2, 5/2), got " + gamma.str());
    }
    if (p_minus < Rational(17, 7)) {
        throw DomainError(
            "lower_bound_chain requires p_minus >= 17/7 for the time-integrable "
            "stress difference, got " +
            p_minus.str());
    }

    LowerBoundResult res;
    const PowerLogTerm weight{Rational(3) + gamma, 0, "weight"};

    // Ball term with the terminal upper rate gamma/2 injected; gamma/2 > 1
    // makes the bracket bounded, so the bare ball volume is the shape.
    const PowerLogTerm one{Rational(0), 0, "bracket-1"};
    PowerLogTerm cum = time_integrate({-(gamma / kTwo), 0, "bracket"});
    PowerLogTerm bracket = cum.dominates(one) ? cum : one;
    PowerLogTerm ball = ball_integrate(2, weight, gamma, 3, "ball");
    res.sum.add(time_integrate(ball_integrate(2, weight, gamma, 3, "ball-volume")));
    res.sum.add(time_integrate(bracket.squared().times(ball, "ball-duhamel")));

    // Stress difference paired with the heat sup bound: weight (4+gamma)
    // against (1+t)^{-(5+2 gamma)/4}, with the time integral of the stress
    // difference bounded (this is where p_minus >= 17/7 enters).
    const Rational stress_power = kFour + gamma - (Rational(5) + kTwo * gamma) / kFour;
    res.sum.add({stress_power, 0, "stress-difference"});

    // Forcing by the heat tail: f(s) (1+s)^{-(3/2+gamma)} integrated.
    res.sum.add(time_integrate({kFiveHalves, 0, "heat-tail-forcing"}));

    res.dominant = res.sum.dominant();
    res.psi_rate = kFour + gamma - res.dominant.power;
    res.sandwich_ok = gamma < res.psi_rate;

    std::ostringstream os;
    os << "lower-bound chain: gamma = " << gamma.str() << ", p_minus = " << p_minus.str()
       << "\n";
    os << "upper rate gamma/2 = " << (gamma / kTwo).str() << " injected\n";
    os << "shapes: " << res.sum.str() << "\n";
    os << "dominant: " << res.dominant.str() << "  (" << res.dominant.tag << ")\n";
    os << "correction decay: ||psi||_2^2 <~ (1+t)^{-" << res.psi_rate.str() << "}\n";
    os << "sandwich: " << res.psi_rate.str() << " > " << gamma.str() << " is "
       << (res.sandwich_ok ? "true" : "false")
       << (res.sandwich_ok ? "; two-sided rate (1+t)^{-gamma/2} certified" : "") << "\n";
    res.transcript = os.str();
    return res;
}

}  // namespace vexfluid
