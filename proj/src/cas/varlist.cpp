#include "xytr/cas/varlist.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace xytr {

namespace {

struct Split {
  std::string prefix;
  std::string digits;
};

Split split_name(const std::string& s) {
  std::size_t k = s.size();
  while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
  Split out{s.substr(0, k), s.substr(k)};
  std::size_t nz = out.digits.find_first_not_of('0');
  out.digits = nz == std::string::npos ? (out.digits.empty() ? "" : "0") : out.digits.substr(nz);
  return out;
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  Split sa = split_name(a), sb = split_name(b);
  if (sa.prefix != sb.prefix) return sa.prefix < sb.prefix;
  if (sa.digits.size() != sb.digits.size()) return sa.digits.size() < sb.digits.size();
  if (sa.digits != sb.digits) return sa.digits < sb.digits;
  return a < b;
}

VarsPtr VarList::make(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(), natural_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() > static_cast<std::size_t>(kMaxVars))
    throw std::length_error("more than 8 variables in one expression");
  return VarsPtr(new VarList(std::move(names)));
}

const VarsPtr& VarList::empty() {
  static const VarsPtr e(new VarList({}));
  return e;
}

int VarList::index(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

VarsPtr merge_vars(const VarsPtr& a, const VarsPtr& b) {
  if (same_vars(a, b)) return a;
  if (b->size() == 0) return a;
  if (a->size() == 0) return b;
  std::vector<std::string> all = a->names();
  all.insert(all.end(), b->names().begin(), b->names().end());
  VarsPtr m = VarList::make(std::move(all));
  if (m->same(*a)) return a;
  if (m->same(*b)) return b;
  return m;
}

}  // namespace xytr
