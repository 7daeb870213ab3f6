#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace nsg::detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), count_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    --count_;
    return true;
  }

  std::size_t components() const noexcept { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t count_;
};

}  // namespace nsg::detail
