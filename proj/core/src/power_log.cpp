#include "vexfluid/power_log.hpp"

#include <algorithm>

#include "vexfluid/errors.hpp"

namespace vexfluid {

std::string PowerLogTerm::str() const {
    std::string s = "(1+t)^{" + power.str() + "}";
    if (log_k == 1) {
        s += " log(1+t)";
    } else if (log_k > 1) {
        s += " log^" + std::to_string(log_k) + "(1+t)";
    }
    return s;
}

void TermSum::add(PowerLogTerm t) {
    for (auto& existing : terms_) {
        if (existing.same_shape(t)) {
            if (existing.tag.find(t.tag) == std::string::npos) {
                existing.tag += " + " + t.tag;
            }
            return;
        }
    }
    terms_.push_back(std::move(t));
    std::sort(terms_.begin(), terms_.end(),
              [](const PowerLogTerm& a, const PowerLogTerm& b) { return a.dominates(b); });
}

const PowerLogTerm& TermSum::dominant() const {
    if (terms_.empty()) throw DomainError("dominant() of an empty term sum");
    return terms_.front();  // kept sorted, strongest first
}

std::string TermSum::str() const {
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += t.str();
    }
    return s.empty() ? "0" : s;
}

PowerLogTerm time_integrate(const PowerLogTerm& t) {
    const Rational minus_one(-1);
    if (minus_one < t.power) {
        return {t.power + Rational(1), t.log_k, t.tag};
    }
    if (t.power == minus_one) {
        return {Rational(0), t.log_k + 1, t.tag};
    }
    return {Rational(0), 0, t.tag};
}

PowerLogTerm ball_integrate(int radial_power, const PowerLogTerm& time_weight,
                            const Rational& gamma, int dim, const std::string& tag) {
    (void)gamma;  // only scales the dropped constant
    if (radial_power + dim <= 0) {
        throw DomainError("ball_integrate requires radial_power + dim > 0");
    }
    const Rational shift(-(radial_power + dim), 2);
    return {time_weight.power + shift, time_weight.log_k, tag};
}

}  // namespace vexfluid
