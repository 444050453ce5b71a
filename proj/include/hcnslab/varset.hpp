#pragma once
#include <cassert>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcns {

// Immutable variable table for a polynomial ring. The monomial order
// (graded lex with variable 0 most significant) is fixed by the table
// once and for all, so polynomial normal forms are canonical.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!idx_.emplace(names_[i], (int)i).second)
        throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
  }
  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& n) const {
    auto it = idx_.find(n);
    return it == idx_.end() ? -1 : it->second;
  }
  bool same_as(const VarTable& o) const {
    return this == &o || names_ == o.names_;
  }
  // o extends this iff this table's names are a prefix of o's.
  bool prefix_of(const VarTable& o) const {
    if (o.size() < size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (names_[i] != o.names_[i]) return false;
    return true;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> idx_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarTable>(std::move(names));
}

inline VarTablePtr extend_vars(const VarTablePtr& t,
                               const std::vector<std::string>& extra) {
  std::vector<std::string> names = t->names();
  names.insert(names.end(), extra.begin(), extra.end());
  return make_vars(std::move(names));
}

}  // namespace hcns
