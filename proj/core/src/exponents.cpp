#include "vexfluid/exponents.hpp"

#include "vexfluid/errors.hpp"

namespace vexfluid {

AlphaBeta alpha_beta(const Rational& p_minus) {
    if (p_minus < Rational(11, 5)) {
        throw DomainError("alpha_beta requires p_minus >= 11/5, got " + p_minus.str());
    }
    AlphaBeta ab;
    ab.p_minus = p_minus;
    ab.alpha = (Rational(7) - p_minus) / Rational(4);
    ab.beta = (Rational(5) * p_minus - Rational(11)) / Rational(4);
    const Rational two_minus_beta = Rational(2) - ab.beta;
    ab.two_alpha_over_two_minus_beta = Rational(2) * ab.alpha / two_minus_beta;
    ab.four_alpha_over_two_minus_beta = Rational(4) * ab.alpha / two_minus_beta;
    return ab;
}

Rational threshold_lhs(const Rational& p_minus) {
    return (Rational(29) - Rational(7) * p_minus) / Rational(8);
}

bool threshold_check(const Rational& p_minus, const Rational& bound, bool strict) {
    if (p_minus < Rational(11, 5)) {
        throw DomainError("threshold_check requires p_minus >= 11/5, got " + p_minus.str());
    }
    const Rational lhs = threshold_lhs(p_minus);
    return strict ? lhs < bound : lhs <= bound;
}

}  // namespace vexfluid
