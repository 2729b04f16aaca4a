#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qsym/combinatorics.hpp"

namespace qsym {

/// Element of S_n in one-line notation (π_1, ..., π_n).
class Permutation {
 public:
  explicit Permutation(std::vector<int> window);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  int operator()(int i) const { return window_[i - 1]; }
  std::string to_string() const;

  auto operator<=>(const Permutation& other) const { return window_ <=> other.window_; }
  bool operator==(const Permutation& other) const { return window_ == other.window_; }

 private:
  std::vector<int> window_;
};

/// Element of the hyperoctahedral group B_n, stored by its window; the
/// negative half is implicit through π(-i) = -π(i).
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  static SignedPermutation parse(std::string_view text);

  int degree() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }
  /// Defined on ±[n].
  int operator()(int i) const { return i > 0 ? window_[i - 1] : -window_[-i - 1]; }
  std::string to_string() const;

  auto operator<=>(const SignedPermutation& other) const { return window_ <=> other.window_; }
  bool operator==(const SignedPermutation& other) const { return window_ == other.window_; }

 private:
  std::vector<int> window_;
};

// Group product (σ∘τ)(i) = σ(τ(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau);

Permutation inverse(const Permutation& pi);
SignedPermutation inverse(const SignedPermutation& pi);

// Window-lexicographic order.
std::vector<Permutation> enumerate_symmetric_group(int n);
std::vector<SignedPermutation> enumerate_hyperoctahedral_group(int n);

/// {i : π_i > π_{i+1}}.
std::set<int> descent_set(const Permutation& pi);
/// Window descents plus position 0 when π_1 < 0.
std::set<int> descent_set(const SignedPermutation& pi);

Composition descent_composition(const Permutation& pi);
PseudoComposition descent_pseudo(const SignedPermutation& pi);
SignedComposition signed_descent_composition(const SignedPermutation& pi);

}  // namespace qsym
