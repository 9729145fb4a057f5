#pragma once

#include "vexfluid/rational.hpp"

namespace vexfluid {

/// Derived constants of the L1 stress estimate in the range p_minus < 3:
///   alpha = (7 - p_minus)/4,   beta = (5 p_minus - 11)/4,
/// together with the interpolation exponents 2*alpha/(2-beta) and
/// 4*alpha/(2-beta) used by the iteration's stress terms. All exact.
struct AlphaBeta {
    Rational p_minus;
    Rational alpha;
    Rational beta;
    Rational two_alpha_over_two_minus_beta;
    Rational four_alpha_over_two_minus_beta;
};

/// Requires p_minus >= 11/5 (below that the constants lose their meaning);
/// throws DomainError otherwise.
AlphaBeta alpha_beta(const Rational& p_minus);

/// The recurring comparison 7/2 - (3/2)alpha - beta <= bound, evaluated in
/// exact arithmetic; equivalently (29 - 7 p_minus)/8 <= bound. With
/// strict = true tests <.
bool threshold_check(const Rational& p_minus, const Rational& bound, bool strict = false);

/// The comparison's left-hand side (29 - 7 p_minus)/8, exposed so failed
/// checks can report an exact witness.
Rational threshold_lhs(const Rational& p_minus);

}  // namespace vexfluid
