#include "hopf/group_table.hpp"

#include "hopf/scalar.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace hopf {

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0)
    throw InputError("group table is empty");
  for (std::size_t g = 0; g < n; ++g) {
    if (table_[g].size() != n)
      throw InputError("group table row " + std::to_string(g) + " has wrong length");
    for (auto v : table_[g])
      if (v >= n)
        throw InputError("group table entry out of range in row " + std::to_string(g));
  }
  for (std::size_t g = 0; g < n; ++g)
    if (table_[0][g] != g || table_[g][0] != g)
      throw InputError("element 0 is not the identity (fails at " + std::to_string(g) + ")");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g][h] == 0 && table_[h][g] == 0) {
        inverse_[g] = h;
        break;
      }
    if (inverse_[g] == n)
      throw InputError("element " + std::to_string(g) + " has no inverse");
  }
}

bool GroupTable::is_subgroup(const std::vector<std::size_t> &elements) const {
  std::set<std::size_t> s(elements.begin(), elements.end());
  if (!s.count(0))
    return false;
  for (auto a : s) {
    if (a >= order() || !s.count(inverse_[a]))
      return false;
    for (auto b : s)
      if (!s.count(table_[a][b]))
        return false;
  }
  return true;
}

bool GroupTable::is_normal_subgroup(const std::vector<std::size_t> &elements) const {
  if (!is_subgroup(elements))
    return false;
  std::set<std::size_t> s(elements.begin(), elements.end());
  for (std::size_t g = 0; g < order(); ++g)
    for (auto n : s)
      if (!s.count(table_[table_[g][n]][inverse_[g]]))
        return false;
  return true;
}

std::vector<std::size_t> GroupTable::generated_subgroup(const std::vector<std::size_t> &generators) const {
  std::set<std::size_t> s{0};
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (auto a : frontier)
      for (auto g : generators) {
        auto p = table_[a][g];
        if (s.insert(p).second)
          next.push_back(p);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<std::size_t>> GroupTable::normal_subgroups() const {
  // Every normal subgroup is generated by a union of conjugacy classes, so
  // enumerate subsets of classes (corpus groups have few classes).
  const std::size_t n = order();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a])
      continue;
    std::set<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g)
      cls.insert(table_[table_[g][a]][inverse_[g]]);
    for (auto c : cls)
      seen[c] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  std::set<std::vector<std::size_t>> found;
  for (unsigned long mask = 0; mask < (1UL << classes.size()); ++mask) {
    std::vector<std::size_t> gens;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (mask & (1UL << c))
        gens.insert(gens.end(), classes[c].begin(), classes[c].end());
    found.insert(generated_subgroup(gens));
  }
  return {found.begin(), found.end()};
}

} // namespace hopf
