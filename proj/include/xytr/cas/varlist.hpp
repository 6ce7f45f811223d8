#pragma once

#include <memory>
#include <string>
#include <vector>

namespace xytr {

// Names compare by alphabetic prefix, then numerically on a trailing
// digit run, so z2 < z10.
bool natural_less(const std::string& a, const std::string& b);

class VarList;
using VarsPtr = std::shared_ptr<const VarList>;

class VarList {
 public:
  static constexpr int kMaxVars = 8;

  static VarsPtr make(std::vector<std::string> names);
  static const VarsPtr& empty();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent
  int index(const std::string& name) const;

  bool same(const VarList& other) const { return this == &other || names_ == other.names_; }

 private:
  explicit VarList(std::vector<std::string> sorted) : names_(std::move(sorted)) {}
  std::vector<std::string> names_;
};

VarsPtr merge_vars(const VarsPtr& a, const VarsPtr& b);

inline bool same_vars(const VarsPtr& a, const VarsPtr& b) { return a == b || a->same(*b); }

}  // namespace xytr
