#include "psg/group.hpp"

namespace psg {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table)
    : table_(std::move(table)) {
  int n = static_cast<int>(table_.size());
  if (n == 0) throw BadShape("group: empty table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw BadShape("group: ragged table");
    for (int v : row)
      if (v < 0 || v >= n) throw BadShape("group: table entry out of range");
  }
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = table_[e][g] == g && table_[g][e] == g;
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw BadShape("group: no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw BadShape("group: multiplication not associative");
  inv_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) {
        inv_[g] = h;
        break;
      }
    if (inv_[g] < 0) throw BadShape("group: element without inverse");
  }
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table_[a][b] != table_[b][a]) { abelian_ = false; break; }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw BadShape("cyclic: order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table) {
  return FiniteGroup(std::move(table));
}

}  // namespace psg
