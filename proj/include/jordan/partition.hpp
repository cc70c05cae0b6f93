#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jordan {

/// Weakly decreasing list of positive integers; indexes Jordan types of Y.
class Partition {
 public:
  /// Throws InvalidPartition if parts is empty, has a zero, or is not weakly decreasing.
  explicit Partition(std::vector<std::size_t> parts);
  /// "3,2,1" or "3 2 1".
  static Partition parse(std::string_view text);

  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t size() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool has_distinct_parts() const;

  std::string str() const;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> parts_;
  std::size_t n_ = 0;
};

/// All partitions of n, starting at (n) and descending lexicographically to (1,...,1).
std::vector<Partition> partitions(std::size_t n);

/// Dimension of the centralizer of the nilpotent matrix of Jordan type p:
/// sum over ordered pairs of min(n_i, n_j).
std::size_t centralizer_dim(const Partition& p);

/// (2r-1) n_1 + (2r-3) n_2 + ... + 3 n_{r-1} + n_r with the parts taken in
/// ascending order n_1 <= ... <= n_r.
std::size_t fiber_dim_formula(const Partition& p);

}  // namespace jordan
