#pragma once

#include <cstddef>
#include <vector>

namespace hopf {

/// Finite group by its multiplication table: element 0 is the identity and
/// table[g][h] is the index of g*h.
class GroupTable {
public:
  /// Validates identity, closure, associativity and inverses (brute force).
  /// Throws InputError with the first violation found.
  explicit GroupTable(std::vector<std::vector<std::size_t>> table);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>> &table() const { return table_; }

  bool is_subgroup(const std::vector<std::size_t> &elements) const;
  bool is_normal_subgroup(const std::vector<std::size_t> &elements) const;
  /// Closure of a generating set.
  std::vector<std::size_t> generated_subgroup(const std::vector<std::size_t> &generators) const;
  std::vector<std::vector<std::size_t>> normal_subgroups() const;

private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

} // namespace hopf
