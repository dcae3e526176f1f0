#include "phopf/group.hpp"

#include <algorithm>
#include <numeric>

#include "phopf/errors.hpp"

namespace phopf {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidGroupTable("empty table");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidGroupTable("table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidGroupTable("entry outside the group");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidGroupTable("not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      unit_ = e;
      found = true;
    }
  }
  if (!found) throw InvalidGroupTable("no identity element");
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (table_[a][b] == unit_ && table_[b][a] == unit_) inverse_[a] = b;
  for (std::size_t a = 0; a < n; ++a)
    if (inverse_[a] == n) throw InvalidGroupTable("element " + std::to_string(a) + " has no inverse");
  if (names_.empty()) {
    for (std::size_t a = 0; a < n; ++a) names_.push_back(a == unit_ ? "e" : "g" + std::to_string(a));
  }
  if (names_.size() != n) throw InvalidGroupTable("name list has wrong length");
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup({{0}}, {"e"}); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroupTable("cyclic group of order 0");
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    names.push_back(a == 0 ? "e" : a == 1 ? "g" : "g" + std::to_string(a));
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t m = perms.size();
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? " " : "") + std::to_string(perms[a][i] + 1);
    names.push_back(a == 0 ? "e" : s + "]");
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = std::find(perms.begin(), perms.end(), c) - perms.begin();
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  // Elements r^i s^j encoded as j*n + i.
  std::size_t m = 2 * n;
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    std::size_t i = a % n, j = a / n;
    names.push_back(a == 0 ? "e" : (i ? "r" + std::to_string(i) : std::string()) + (j ? "s" : ""));
    for (std::size_t b = 0; b < m; ++b) {
      std::size_t k = b % n, l = b / n;
      std::size_t ri = j ? (i + n - k) % n : (i + k) % n;
      t[a][b] = ((j + l) % 2) * n + ri;
    }
  }
  return FiniteGroup(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::klein() { return product(cyclic(2), cyclic(2)); }

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  std::size_t n = a.order(), m = b.order();
  std::vector<std::vector<std::size_t>> t(n * m, std::vector<std::size_t>(n * m));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n * m; ++x) {
    names.push_back(x == 0 ? "e" : "(" + a.name(x / m) + "," + b.name(x % m) + ")");
    for (std::size_t y = 0; y < n * m; ++y)
      t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
  }
  return FiniteGroup(std::move(t), std::move(names));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

}  // namespace phopf
