#pragma once

#include "hypdiv/fo.hpp"

namespace testsupport {

/// Bottom-up evaluation: variables are renamed apart, every subformula gets a
/// truth table over all assignments of all variables, quantifiers fold the
/// table along their variable. Shares no code with eval_fo.
bool truth_table_eval(const hypdiv::Graph & g, const hypdiv::fo::Formula & sentence);

} // namespace testsupport
