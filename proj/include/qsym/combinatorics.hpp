#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qsym {

enum class Flavor { A, B, S };

std::string to_string(Flavor flavor);
Flavor parse_flavor(std::string_view text);

/// "3,2,1", "(3, 2, 1)" or "-3,2" -> integers. Throws std::invalid_argument.
std::vector<int> parse_int_list(std::string_view text);

/// Ordered tuple of positive integers. Indexes descent classes of S_n.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  auto operator<=>(const Composition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const Composition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Composition whose first part may be zero; the zero encodes a descent at
/// position 0 of a signed permutation.
class PseudoComposition {
 public:
  explicit PseudoComposition(std::vector<int> parts);

  static PseudoComposition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  /// A leading zero counts as a part.
  int length() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  auto operator<=>(const PseudoComposition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const PseudoComposition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Nonzero parts: the absolute value is a run length, the sign is the run's
/// sign.
class SignedComposition {
 public:
  explicit SignedComposition(std::vector<int> parts);

  static SignedComposition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  std::string to_string() const;

  auto operator<=>(const SignedComposition& other) const { return parts_ <=> other.parts_; }
  bool operator==(const SignedComposition& other) const { return parts_ == other.parts_; }

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Descent positions of degree n. Flavor A allows {1..n-1}, flavor B
/// additionally allows position 0.
struct DescentData {
  int n = 0;
  Flavor flavor = Flavor::A;
  std::set<int> positions;

  bool operator==(const DescentData&) const = default;
};

DescentData comp_to_descents(const Composition& alpha);
Composition descents_to_comp(const std::set<int>& positions, int n);

DescentData pseudo_to_descents(const PseudoComposition& alpha);
PseudoComposition descents_to_pseudo(const std::set<int>& positions, int n);

// Reverse refinement: refines(beta, alpha) is alpha ≼ beta, i.e. beta is
// obtained from alpha by splitting parts.
bool refines(const Composition& beta, const Composition& alpha);
bool refines(const PseudoComposition& beta, const PseudoComposition& alpha);
bool signed_refines(const SignedComposition& beta, const SignedComposition& alpha);
bool refines(const SignedComposition& beta, const SignedComposition& alpha);

/// Every beta with alpha ≼ beta, in canonical (lexicographic) order.
std::vector<Composition> refinements_of(const Composition& alpha);
std::vector<PseudoComposition> refinements_of(const PseudoComposition& alpha);
std::vector<SignedComposition> refinements_of(const SignedComposition& alpha);

// Complete enumerations of degree n >= 1, sorted lexicographically by part
// list.
std::vector<Composition> enumerate_compositions(int n);
std::vector<PseudoComposition> enumerate_pseudo(int n);
std::vector<SignedComposition> enumerate_signed(int n);

struct SignedCompData {
  std::vector<int> signs;        // +1 / -1 for positions 1..n
  std::set<int> descents;        // guaranteed descent positions in {0..n-1}
};

/// Sign word of a signed composition and its guaranteed descents, the places
/// where the index sequence of F̄_α must go up strictly: 0 when the first sign
/// is negative, plus every block boundary except negative-then-positive.
SignedCompData signed_comp_data(const SignedComposition& alpha);

/// The pseudo-composition whose descent set is the guaranteed descent set of
/// alpha. This is where the u = v specialization sends F̄_alpha.
PseudoComposition merge_to_pseudo(const SignedComposition& alpha);

}  // namespace qsym
