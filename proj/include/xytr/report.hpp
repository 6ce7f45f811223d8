#pragma once

#include <string>
#include <vector>

#include "xytr/cas/rational_function.hpp"

namespace xytr {

struct IdentityCheck {
  std::string identity;
  // short name of the relation being tested
  std::string anchor;
  bool pass = false;
  std::string lhs_minus_rhs;
  std::string details;
};

struct Report {
  std::string tool_version;
  std::string fingerprint;
  std::vector<IdentityCheck> checks;
  std::vector<std::string> assumptions;

  bool ok() const;
  void add(IdentityCheck c) { checks.push_back(std::move(c)); }
  void merge(const Report& other);
};

IdentityCheck compare(const std::string& identity, const std::string& anchor, const RF& lhs, const RF& rhs);
IdentityCheck expect(const std::string& identity, const std::string& anchor, bool pass, const std::string& details = "");

// Expected to differ, e.g. for negative controls.
IdentityCheck compare_differs(const std::string& identity, const std::string& anchor, const RF& lhs, const RF& rhs);

std::string tool_version();

}  // namespace xytr
