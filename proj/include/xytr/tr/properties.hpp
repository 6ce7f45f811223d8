#pragma once

#include <utility>
#include <vector>

#include "xytr/report.hpp"
#include "xytr/tr/engine.hpp"

namespace xytr {

bool symmetric_in(const RF& f, const std::vector<std::string>& vars);

// sigma(sigma(t)) = t and x(sigma(t)) = x(t) through t^order at every alpha.
bool involution_identities(const SpectralCurve& c, int order);

// Res_{z1 = alpha} d/dz1 F vanishes at every alpha.
bool residue_of_derivative_vanishes(const RF& f, const std::string& var, const std::vector<BigRat>& points);

// Symmetry, pole locations, +4 truncation stability, involution identities
// and residues of total derivatives for the listed (g, n).
Report tr_suite(const SpectralCurve& c, const std::vector<std::pair<int, int>>& gn = {{0, 3}, {0, 4}, {1, 1}, {1, 2}});

}  // namespace xytr
