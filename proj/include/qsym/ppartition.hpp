#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsym/combinatorics.hpp"
#include "qsym/groups.hpp"
#include "qsym/series.hpp"

namespace qsym {

/// Strict partial order on the labels 1..n, stored transitively closed.
class LabeledPoset {
 public:
  /// `relations` holds pairs (i, j) meaning i <_P j; they are closed
  /// transitively. Throws if the closure has a cycle.
  LabeledPoset(int n, const std::vector<std::pair<int, int>>& relations);

  /// Total order π_1 < π_2 < ... < π_n.
  static LabeledPoset chain(const Permutation& pi);
  static LabeledPoset antichain(int n);
  /// First line "n", then one "i < j" relation per line; '#' starts a comment.
  static LabeledPoset parse(std::string_view text);

  int size() const { return n_; }
  bool less(int i, int j) const { return order_[index(i, j)]; }
  std::vector<std::pair<int, int>> relations() const;

  /// All linear extensions as permutations (labels listed bottom to top),
  /// window-lexicographically sorted.
  std::vector<Permutation> linear_extensions() const;

  bool operator==(const LabeledPoset&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }

  int n_ = 0;
  std::vector<bool> order_;
};

/// Strict partial order on {-n..n} that is closed under i <_P j => -j <_P -i.
class TypeBPoset {
 public:
  TypeBPoset(int n, const std::vector<std::pair<int, int>>& relations);

  /// -π_n < ... < -π_1 < 0 < π_1 < ... < π_n.
  static TypeBPoset chain(const SignedPermutation& pi);
  static TypeBPoset parse(std::string_view text);

  int size() const { return n_; }
  bool less(int i, int j) const { return order_[index(i, j)]; }
  std::vector<std::pair<int, int>> relations() const;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i + n_) * (2 * n_ + 1) + static_cast<std::size_t>(j + n_);
  }

  int n_ = 0;
  std::vector<bool> order_;
};

/// Values f(1), ..., f(n). In type B the map extends by f(-i) = -f(i) and
/// f(0) = 0.
struct PPartitionMap {
  std::vector<int> values;

  int operator()(int label) const {
    if (label == 0) return 0;
    return label > 0 ? values[label - 1] : -values[-label - 1];
  }

  auto operator<=>(const PPartitionMap&) const = default;
  bool operator==(const PPartitionMap&) const = default;
};

/// P-partitions into the chain 1 < 2 < ... < N, sorted by value vector.
std::vector<PPartitionMap> enumerate_ppartitions(const LabeledPoset& poset, int chain_size);

/// Type B P-partitions into -N < ... < 0 < ... < N.
std::vector<PPartitionMap> enumerate_B_ppartitions(const TypeBPoset& poset, int chain_size);

Series gamma(const LabeledPoset& poset, int chain_size, Side side = Side::First);
Series gamma(const Permutation& pi, int chain_size, Side side = Side::First);

/// Subscripts are |f(i)|, so x_0 may appear.
Series gamma_B(const TypeBPoset& poset, int chain_size, Side side = Side::First);
Series gamma_B(const SignedPermutation& pi, int chain_size, Side side = Side::First);

/// Letter u_{|f(i)|} when f(i) < 0, v_{f(i)} otherwise.
Series gamma_signed(const TypeBPoset& poset, int chain_size, Side side = Side::First);
Series gamma_signed(const SignedPermutation& pi, int chain_size, Side side = Side::First);

/// Generating function of P-partitions of π into the lexicographic product
/// chain {1..Nx} x {1..Ny}; a value (i, j) contributes x_i y_j.
Series bipartite_gamma(const Permutation& pi, int nx, int ny);

/// Type B (flavor B) or signed (flavor S) bipartite generating function.
///
/// The image set is the nonnegative half of ±{0..Nx} x ±{0..Ny} under the
/// lexicographic order with componentwise negation. A label whose value is
/// (a, b) contributes x_|a| y_|b| in flavor B. In flavor S the y letter is uy
/// when b < 0 and vy otherwise; the x letter is u exactly when a is nonzero
/// and its sign differs from the sign of b (zero counting as positive).
Series bipartite_gamma(const SignedPermutation& pi, int nx, int ny, Flavor flavor);

std::int64_t count_bipartite_ppartitions(const Permutation& pi, int nx, int ny);
std::int64_t count_bipartite_ppartitions(const SignedPermutation& pi, int nx, int ny);

}  // namespace qsym
