#include "xytr/report.hpp"

namespace xytr {

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& a : other.assumptions) {
    bool seen = false;
    for (const auto& b : assumptions) seen = seen || a == b;
    if (!seen) assumptions.push_back(a);
  }
}

IdentityCheck compare(const std::string& identity, const std::string& anchor, const RF& lhs, const RF& rhs) {
  RF d = lhs - rhs;
  IdentityCheck c;
  c.identity = identity;
  c.anchor = anchor;
  c.pass = d.is_zero();
  c.lhs_minus_rhs = d.to_string();
  return c;
}

IdentityCheck compare_differs(const std::string& identity, const std::string& anchor, const RF& lhs, const RF& rhs) {
  IdentityCheck c = compare(identity, anchor, lhs, rhs);
  c.pass = !c.pass;
  c.details = "expected a nonzero difference";
  return c;
}

IdentityCheck expect(const std::string& identity, const std::string& anchor, bool pass, const std::string& details) {
  IdentityCheck c;
  c.identity = identity;
  c.anchor = anchor;
  c.pass = pass;
  c.lhs_minus_rhs = pass ? "0" : "";
  c.details = details;
  return c;
}

std::string tool_version() {
#ifdef XYTR_VERSION
  return XYTR_VERSION;
#else
  return "0.0.0";
#endif
}

}  // namespace xytr
