#pragma once

#include <vector>

#include "qsym/combinatorics.hpp"
#include "qsym/groups.hpp"

namespace qsym {

// Ties each index family to its group and descent map:
//   A: compositions / S_n / C(π)
//   B: pseudo-compositions / B_n / C(π) with a leading 0 for π_1 < 0
//   S: signed compositions / B_n / sC(π)
template <class Index>
struct FlavorTraits;

template <>
struct FlavorTraits<Composition> {
  using Element = Permutation;
  static constexpr Flavor flavor = Flavor::A;
  static Composition index_of(const Permutation& pi) { return descent_composition(pi); }
  static std::vector<Composition> indices(int n) { return enumerate_compositions(n); }
  static std::vector<Permutation> group(int n) { return enumerate_symmetric_group(n); }
};

template <>
struct FlavorTraits<PseudoComposition> {
  using Element = SignedPermutation;
  static constexpr Flavor flavor = Flavor::B;
  static PseudoComposition index_of(const SignedPermutation& pi) { return descent_pseudo(pi); }
  static std::vector<PseudoComposition> indices(int n) { return enumerate_pseudo(n); }
  static std::vector<SignedPermutation> group(int n) { return enumerate_hyperoctahedral_group(n); }
};

template <>
struct FlavorTraits<SignedComposition> {
  using Element = SignedPermutation;
  static constexpr Flavor flavor = Flavor::S;
  static SignedComposition index_of(const SignedPermutation& pi) { return signed_descent_composition(pi); }
  static std::vector<SignedComposition> indices(int n) { return enumerate_signed(n); }
  static std::vector<SignedPermutation> group(int n) { return enumerate_hyperoctahedral_group(n); }
};

template <class T>
concept BasisIndex = requires { FlavorTraits<T>::flavor; };

template <BasisIndex Index>
using ElementOf = typename FlavorTraits<Index>::Element;

}  // namespace qsym
