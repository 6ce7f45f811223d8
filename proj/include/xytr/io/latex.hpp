#pragma once

#include <string>
#include <vector>

#include "xytr/cas/rational_function.hpp"

namespace xytr {

// z12 -> z_{12}; names without a trailing digit run are kept.
std::string latex_name(const std::string& var);
std::string to_latex(const Poly& p);
std::string to_latex(const RF& f);

}  // namespace xytr
