#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace phopf {

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(trivial()) {}
  // Validates the table (closure, associativity, identity, inverses).
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup dihedral(std::size_t n);  // order 2n
  static FiniteGroup klein();
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t unit() const { return unit_; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.table_ == b.table_;
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::string> names_;
  std::vector<std::size_t> inverse_;
  std::size_t unit_ = 0;
};

}  // namespace phopf
