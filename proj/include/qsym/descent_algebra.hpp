#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qsym/flavor.hpp"
#include "qsym/series.hpp"

namespace qsym {

/// Largest degree per flavor for brute-force tables.
struct Caps {
  int a = 6;
  int b = 4;
  int s = 4;

  int for_flavor(Flavor flavor) const;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_cap(Flavor flavor, int n, const Caps& caps);

template <class Element>
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int degree) : degree_(degree) {}

  void add(const Element& g, std::int64_t c) {
    if (g.degree() != degree_) throw std::invalid_argument("group algebra: element of wrong degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree() const { return degree_; }
  const std::map<Element, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Element& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? 0 : it->second;
  }
  /// Image under the augmentation map g -> 1.
  std::int64_t augmentation() const {
    std::int64_t s = 0;
    for (const auto& [g, c] : terms_) s = checked_add(s, c);
    return s;
  }

  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_same(a, b);
    GroupAlgebraElement out = a;
    for (const auto& [g, c] : b.terms_) out.add(g, c);
    return out;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_same(a, b);
    GroupAlgebraElement out = a;
    for (const auto& [g, c] : b.terms_) out.add(g, -c);
    return out;
  }
  friend GroupAlgebraElement operator*(std::int64_t k, const GroupAlgebraElement& a) {
    GroupAlgebraElement out(a.degree_);
    for (const auto& [g, c] : a.terms_) out.add(g, checked_mul(k, c));
    return out;
  }
  /// Convolution product: g * h = compose(g, h).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    check_same(a, b);
    GroupAlgebraElement out(a.degree_);
    for (const auto& [g, cg] : a.terms_) {
      for (const auto& [h, ch] : b.terms_) out.add(compose(g, h), checked_mul(cg, ch));
    }
    return out;
  }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*[" + g.to_string() + "]";
    }
    return out;
  }

 private:
  static void check_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("group algebra: degree mismatch");
  }

  int degree_;
  std::map<Element, std::int64_t> terms_;
};

template <class Element>
GroupAlgebraElement<Element> multiply(const GroupAlgebraElement<Element>& a, const GroupAlgebraElement<Element>& b) {
  return a * b;
}

/// Sum of the group elements whose descent index is alpha.
template <BasisIndex Index>
GroupAlgebraElement<ElementOf<Index>> class_sum(const Index& alpha, const Caps& caps = {}) {
  using Traits = FlavorTraits<Index>;
  const int n = alpha.degree();
  check_cap(Traits::flavor, n, caps);
  GroupAlgebraElement<ElementOf<Index>> out(n);
  for (const auto& g : Traits::group(n)) {
    if (Traits::index_of(g) == alpha) out.add(g, 1);
  }
  return out;
}

/// entry(alpha, beta, gamma) is the number of pairs (σ, τ) with σ∘τ = π,
/// σ in class alpha and τ in class beta, for a fixed π in class gamma.
template <BasisIndex Index>
struct StructureConstantTable {
  int degree = 0;
  std::vector<Index> indices;
  std::map<Index, std::int64_t> class_sizes;
  std::map<std::tuple<Index, Index, Index>, std::int64_t> entries;  // nonzero only

  static constexpr Flavor flavor = FlavorTraits<Index>::flavor;

  std::int64_t at(const Index& alpha, const Index& beta, const Index& gamma) const {
    auto it = entries.find({alpha, beta, gamma});
    return it == entries.end() ? 0 : it->second;
  }
};

/// Pair counts (alpha, beta) -> #{(σ, τ) : σ∘τ = π} for a single π. Walks σ
/// over the group and sets τ = σ⁻¹∘π.
template <BasisIndex Index>
std::map<std::pair<Index, Index>, std::int64_t> factorization_counts(const ElementOf<Index>& pi) {
  using Traits = FlavorTraits<Index>;
  std::map<std::pair<Index, Index>, std::int64_t> counts;
  for (const auto& sigma : Traits::group(pi.degree())) {
    const auto tau = compose(inverse(sigma), pi);
    ++counts[{Traits::index_of(sigma), Traits::index_of(tau)}];
  }
  return counts;
}

template <BasisIndex Index>
StructureConstantTable<Index> compute_structure_constants(int n, const Caps& caps = {}) {
  using Traits = FlavorTraits<Index>;
  check_cap(Traits::flavor, n, caps);
  StructureConstantTable<Index> table;
  table.degree = n;
  table.indices = Traits::indices(n);
  std::map<Index, ElementOf<Index>> representative;
  // The group is enumerated in window-lexicographic order, so the first
  // element seen in each class is its canonical representative.
  for (const auto& g : Traits::group(n)) {
    const auto idx = Traits::index_of(g);
    ++table.class_sizes[idx];
    representative.try_emplace(idx, g);
  }
  for (const auto& gamma : table.indices) {
    if (!table.class_sizes.contains(gamma)) {
      throw std::logic_error("descent class " + gamma.to_string() + " is empty");
    }
    for (const auto& [key, count] : factorization_counts<Index>(representative.at(gamma))) {
      table.entries[{key.first, key.second, gamma}] = count;
    }
  }
  return table;
}

struct CheckReport {
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void fail(std::string message) {
    passed = false;
    if (failures.size() < 20) failures.push_back(std::move(message));
  }
};

/// Recomputes the pair counts from every element of every class and
/// compares against the table.
template <BasisIndex Index>
CheckReport verify_representative_independence(const StructureConstantTable<Index>& table) {
  using Traits = FlavorTraits<Index>;
  CheckReport report;
  for (const auto& pi : Traits::group(table.degree)) {
    const auto gamma = Traits::index_of(pi);
    const auto counts = factorization_counts<Index>(pi);
    for (const auto& alpha : table.indices) {
      for (const auto& beta : table.indices) {
        auto it = counts.find({alpha, beta});
        const std::int64_t got = it == counts.end() ? 0 : it->second;
        ++report.checked;
        if (got != table.at(alpha, beta, gamma)) {
          report.fail("pi=" + pi.to_string() + " alpha=" + alpha.to_string() + " beta=" + beta.to_string() +
                      ": " + std::to_string(got) + " != " + std::to_string(table.at(alpha, beta, gamma)));
        }
      }
    }
  }
  return report;
}

struct ClosureReport {
  Flavor flavor = Flavor::A;
  int degree = 0;
  std::size_t dimension = 0;
  std::size_t products = 0;
  std::vector<std::string> residues;

  bool passed() const { return residues.empty(); }
};

/// For every ordered pair, u_alpha * u_beta must equal
/// Σ_gamma table(alpha, beta, gamma) u_gamma in the group algebra.
template <BasisIndex Index>
ClosureReport verify_closure(int n, const Caps& caps = {}) {
  using Traits = FlavorTraits<Index>;
  check_cap(Traits::flavor, n, caps);
  const auto table = compute_structure_constants<Index>(n, caps);
  std::map<Index, GroupAlgebraElement<ElementOf<Index>>> sums;
  for (const auto& idx : table.indices) sums.emplace(idx, GroupAlgebraElement<ElementOf<Index>>(n));
  for (const auto& g : Traits::group(n)) sums.at(Traits::index_of(g)).add(g, 1);

  ClosureReport report;
  report.flavor = Traits::flavor;
  report.degree = n;
  report.dimension = table.indices.size();
  for (const auto& alpha : table.indices) {
    for (const auto& beta : table.indices) {
      const auto product = sums.at(alpha) * sums.at(beta);
      GroupAlgebraElement<ElementOf<Index>> expected(n);
      for (const auto& gamma : table.indices) {
        const auto c = table.at(alpha, beta, gamma);
        if (c != 0) expected = expected + c * sums.at(gamma);
      }
      ++report.products;
      const auto residue = product - expected;
      if (!residue.is_zero() && report.residues.size() < 20) {
        report.residues.push_back("u_(" + alpha.to_string() + ") * u_(" + beta.to_string() + "): residue " +
                                  std::to_string(residue.terms().size()) + " terms");
      }
    }
  }
  return report;
}

/// Decomposition of u_alpha * u_beta over class sums, read off the table.
template <BasisIndex Index>
std::map<Index, std::int64_t> decompose_product(const StructureConstantTable<Index>& table, const Index& alpha,
                                                 const Index& beta) {
  std::map<Index, std::int64_t> out;
  for (const auto& gamma : table.indices) {
    if (auto c = table.at(alpha, beta, gamma); c != 0) out[gamma] = c;
  }
  return out;
}

enum class TableFormat { Json, Csv };

TableFormat parse_table_format(std::string_view text);

template <BasisIndex Index>
std::string export_table(const StructureConstantTable<Index>& table, TableFormat format);

}  // namespace qsym
