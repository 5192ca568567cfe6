#pragma once

#include <vector>

#include "psg/errors.hpp"

namespace psg {

// A finite group given by its multiplication table; element 0 need not be
// the identity, the constructor locates it and validates the axioms.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(int n);
  static FiniteGroup from_table(std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int g, int h) const { return table_[g][h]; }
  int inv(int g) const { return inv_[g]; }
  int identity() const { return identity_; }
  bool abelian() const { return abelian_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  explicit FiniteGroup(std::vector<std::vector<int>> table);
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int identity_ = -1;
  bool abelian_ = true;
};

}  // namespace psg
