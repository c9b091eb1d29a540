#pragma once

#include <optional>
#include <string>

namespace gtc::testhooks {

// Deliberate single-site perturbations of the closed forms, used by the test
// suite to prove the cross-checks are not vacuous. Never set in production
// code paths.
enum class Fault {
    none,
    o_formula_denominator,  // last factorial of the odd product formula bumped
    e_formula_denominator,  // last factorial of the even product formula bumped
    o_det_exponent,         // exponent of entry (1,1) of the odd determinant bumped
    e_det_exponent,         // exponent of entry (1,1) of the even determinant bumped
    o_det_denominator,      // factorial of entry (1,1) of the odd determinant bumped
    e_det_denominator,      // factorial of entry (1,1) of the even determinant bumped
};

void inject(Fault f);
void clear();
Fault active();

std::optional<Fault> fault_from_name(const std::string& name);
const char* fault_name(Fault f);

}  // namespace gtc::testhooks
