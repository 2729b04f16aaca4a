#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "qsym/descent_algebra.hpp"
#include "qsym/flavor.hpp"
#include "qsym/series.hpp"

namespace qsym {

enum class Basis { Monomial, Fundamental };

std::string to_string(Basis basis);

// Monomial quasisymmetric functions, truncated to indices <= N.
//
//  A: Σ_{1 <= i_1 < ... < i_k} x_{i_1}^{α_1} ... x_{i_k}^{α_k}
//  B: x_0^{α_1} Σ_{0 < i_2 < ... < i_k} x_{i_2}^{α_2} ... x_{i_k}^{α_k}
//  S: letter u for a negative part, v for a positive one, exponent |α_r|.
//     The first index starts at 1 when α_1 < 0 and at 0 otherwise. A
//     negative part and the positive part right after it may share an
//     index; every other pair of neighbours is strictly increasing.
Series expand_monomial(const Composition& alpha, int chain_size, Side side = Side::First);
Series expand_monomial(const PseudoComposition& alpha, int chain_size, Side side = Side::First);
Series expand_monomial(const SignedComposition& alpha, int chain_size, Side side = Side::First);

/// F_α = Σ_{α ≼ β} M_β.
template <BasisIndex Index>
Series expand_fundamental(const Index& alpha, int chain_size, Side side = Side::First) {
  Series out;
  for (const auto& beta : refinements_of(alpha)) out += expand_monomial(beta, chain_size, side);
  return out;
}

/// Element of Qsym_n, BQsym_n or SQsym_n in one of the two bases.
template <BasisIndex Index>
class QSymVector {
 public:
  static constexpr Flavor flavor = FlavorTraits<Index>::flavor;

  QSymVector(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 1) throw std::invalid_argument("QSymVector degree must be >= 1");
  }

  static QSymVector basis_element(const Index& alpha, Basis basis) {
    QSymVector v(alpha.degree(), basis);
    v.add(alpha, 1);
    return v;
  }

  void add(const Index& alpha, std::int64_t c) {
    if (alpha.degree() != degree_) {
      throw std::invalid_argument("index " + alpha.to_string() + " has degree " + std::to_string(alpha.degree()) +
                                  ", vector has degree " + std::to_string(degree_));
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Index, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Index& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? 0 : it->second;
  }

  Series expand(int chain_size, Side side = Side::First) const {
    Series out;
    for (const auto& [alpha, c] : terms_) {
      const Series e = basis_ == Basis::Monomial ? expand_monomial(alpha, chain_size, side)
                                                 : expand_fundamental(alpha, chain_size, side);
      out += c * e;
    }
    return out;
  }

  /// "c*(index) + ..." in canonical index order; "0" when empty.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [alpha, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*(" + alpha.to_string() + ")";
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : terms_) terms.push_back({{"index", alpha.to_string()}, {"coeff", c}});
    return {{"flavor", qsym::to_string(flavor)},
            {"degree", degree_},
            {"basis", qsym::to_string(basis_)},
            {"terms", terms}};
  }

  bool operator==(const QSymVector& other) const {
    return degree_ == other.degree_ && basis_ == other.basis_ && terms_ == other.terms_;
  }

 private:
  int degree_;
  Basis basis_;
  std::map<Index, std::int64_t> terms_;
};

/// M_α = Σ_{α ≼ β} (-1)^{#β - #α} F_β.
template <BasisIndex Index>
QSymVector<Index> monomial_in_fundamental(const Index& alpha) {
  QSymVector<Index> out(alpha.degree(), Basis::Fundamental);
  for (const auto& beta : refinements_of(alpha)) out.add(beta, (beta.length() - alpha.length()) % 2 == 0 ? 1 : -1);
  return out;
}

template <BasisIndex Index>
QSymVector<Index> fundamental_in_monomial(const Index& alpha) {
  QSymVector<Index> out(alpha.degree(), Basis::Monomial);
  for (const auto& beta : refinements_of(alpha)) out.add(beta, 1);
  return out;
}

template <BasisIndex Index>
QSymVector<Index> change_basis(const QSymVector<Index>& v, Basis target) {
  if (v.basis() == target) return v;
  QSymVector<Index> out(v.degree(), target);
  for (const auto& [alpha, c] : v.terms()) {
    const auto image = target == Basis::Monomial ? fundamental_in_monomial(alpha) : monomial_in_fundamental(alpha);
    for (const auto& [beta, d] : image.terms()) out.add(beta, checked_mul(c, d));
  }
  return out;
}

/// Γ(π) = F_{C(π)} at chain size N.
bool gamma_equals_fundamental_check(const Permutation& pi, int chain_size);
/// Γ_B(π) = F_{B,C(π)} (flavor B) or Γ̄(π) = F̄_{sC(π)} (flavor S).
bool gamma_equals_fundamental_check(const SignedPermutation& pi, int chain_size, Flavor flavor);

/// F_β ∗ F_α = Σ_γ table(α, β, γ) F_γ.
template <BasisIndex Index>
QSymVector<Index> inner_product(const Index& beta, const Index& alpha, const StructureConstantTable<Index>& table) {
  if (beta.degree() != table.degree || alpha.degree() != table.degree) {
    throw std::invalid_argument("inner_product: index degree does not match the table");
  }
  QSymVector<Index> out(table.degree, Basis::Fundamental);
  for (const auto& gamma : table.indices) out.add(gamma, table.at(alpha, beta, gamma));
  return out;
}

template <BasisIndex Index>
QSymVector<Index> inner_product(const Index& beta, const Index& alpha, const Caps& caps = {}) {
  return inner_product(beta, alpha, compute_structure_constants<Index>(beta.degree(), caps));
}

template <BasisIndex Index>
struct CoproductTerm {
  Index left;   // β, the X tensor factor
  Index right;  // α, the Y tensor factor
  std::int64_t coefficient;
};

/// F_γ ↦ Σ table(α, β, γ) F_β ⊗ F_α, nonzero terms in canonical (β, α) order.
template <BasisIndex Index>
std::vector<CoproductTerm<Index>> inner_coproduct(const Index& gamma, const StructureConstantTable<Index>& table) {
  if (gamma.degree() != table.degree) throw std::invalid_argument("inner_coproduct: degree mismatch");
  std::vector<CoproductTerm<Index>> out;
  for (const auto& beta : table.indices) {
    for (const auto& alpha : table.indices) {
      if (auto c = table.at(alpha, beta, gamma); c != 0) out.push_back({beta, alpha, c});
    }
  }
  return out;
}

template <BasisIndex Index>
std::vector<CoproductTerm<Index>> inner_coproduct(const Index& gamma, const Caps& caps = {}) {
  return inner_coproduct(gamma, compute_structure_constants<Index>(gamma.degree(), caps));
}

/// Image of M̄_α or F̄_α under u = v, as a type B vector in the same basis.
QSymVector<PseudoComposition> specialize_u_equals_v(const SignedComposition& alpha, Basis basis);

}  // namespace qsym
