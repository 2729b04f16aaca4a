#include "qsym/verification.hpp"

#include <cstdint>
#include <map>
#include <sstream>

#include "qsym/ppartition.hpp"
#include "qsym/quasisymmetric.hpp"

namespace qsym {

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::int64_t power(std::int64_t base, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok) {
      ++failed_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }

  CheckResult result() const {
    std::ostringstream detail;
    detail << checked_ << " checks";
    if (failed_ > 0) detail << ", " << failed_ << " failed; first: " << first_failure_;
    return {name_, failed_ == 0 && checked_ > 0, detail.str()};
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

// Σ_{0<i<=j<k<=N} of letters (first, second, third) at i, j, k.
Series worked_example(int chain_size, Alphabet first, Alphabet second, Alphabet third, Series::Bounds bounds) {
  Series out(std::move(bounds));
  for (int i = 1; i <= chain_size; ++i) {
    for (int j = i; j <= chain_size; ++j) {
      for (int k = j + 1; k <= chain_size; ++k) {
        out.add_term(Monomial({Variable(first, i), Variable(second, j), Variable(third, k)}), 1);
      }
    }
  }
  return out;
}

template <class Element, class GammaFn, class BipartiteFn>
void check_factorization_identity(Tally& tally, const std::vector<Element>& group, GammaFn gamma_of, BipartiteFn bipartite,
                                  std::int64_t (*count)(const Element&, int, int), int chain_size) {
  std::map<Element, Series> x_side;
  std::map<Element, Series> y_side;
  for (const auto& g : group) {
    x_side.emplace(g, gamma_of(g, Side::First));
    y_side.emplace(g, gamma_of(g, Side::Second));
  }
  for (const auto& pi : group) {
    Series rhs;
    std::int64_t pairs = 0;
    for (const auto& sigma : group) {
      const auto tau = compose(inverse(sigma), pi);
      rhs += x_side.at(tau) * y_side.at(sigma);
      pairs = checked_add(pairs, checked_mul(x_side.at(tau).coefficient_sum(), y_side.at(sigma).coefficient_sum()));
    }
    const Series lhs = bipartite(pi);
    tally.expect(lhs == rhs, "series identity at pi=" + pi.to_string());
    tally.expect(count(pi, chain_size, chain_size) == pairs, "cardinality at pi=" + pi.to_string());
  }
}

template <BasisIndex Index>
void check_closure_flavor(Tally& tally, int max_n, const Caps& caps, std::int64_t (*dimension)(int)) {
  for (int n = 1; n <= max_n; ++n) {
    const auto report = verify_closure<Index>(n, caps);
    const std::string where = to_string(FlavorTraits<Index>::flavor) + " n=" + std::to_string(n);
    tally.expect(report.passed(), "closure residue " + where + (report.residues.empty() ? "" : ": " + report.residues.front()));
    tally.expect(static_cast<std::int64_t>(report.dimension) == dimension(n), "dimension " + where);
  }
}

template <BasisIndex Index>
void check_representatives_flavor(Tally& tally, int max_n, const Caps& caps) {
  for (int n = 1; n <= max_n; ++n) {
    const auto report = verify_representative_independence(compute_structure_constants<Index>(n, caps));
    tally.expect(report.passed, to_string(FlavorTraits<Index>::flavor) + " n=" + std::to_string(n) +
                                    (report.failures.empty() ? "" : ": " + report.failures.front()));
  }
}

template <BasisIndex Index>
void check_round_trip_flavor(Tally& tally, int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& alpha : FlavorTraits<Index>::indices(n)) {
      for (Basis start : {Basis::Fundamental, Basis::Monomial}) {
        const Basis other = start == Basis::Fundamental ? Basis::Monomial : Basis::Fundamental;
        const auto v = QSymVector<Index>::basis_element(alpha, start);
        tally.expect(change_basis(change_basis(v, other), start) == v,
                     to_string(FlavorTraits<Index>::flavor) + " " + to_string(start) + " round trip at " + alpha.to_string());
      }
    }
  }
}

template <BasisIndex Index>
void check_partition_flavor(Tally& tally, int n, std::int64_t group_order, const Caps& caps) {
  using Traits = FlavorTraits<Index>;
  GroupAlgebraElement<ElementOf<Index>> total(n);
  std::int64_t size_sum = 0;
  for (const auto& alpha : Traits::indices(n)) {
    const auto sum = class_sum(alpha, caps);
    tally.expect(!sum.is_zero(), "empty class " + alpha.to_string());
    size_sum += sum.augmentation();
    total = total + sum;
  }
  const std::string where = to_string(Traits::flavor) + " n=" + std::to_string(n);
  tally.expect(size_sum == group_order, "class sizes sum at " + where);
  bool all_once = static_cast<std::int64_t>(total.terms().size()) == group_order;
  for (const auto& [g, c] : total.terms()) all_once = all_once && c == 1;
  tally.expect(all_once, "classes cover the group exactly once at " + where);
}

// Direct count over all pairs in G x G, independent of the σ-walk used to
// build the table.
template <BasisIndex Index>
void check_duality_flavor(Tally& tally, int n, const Caps& caps) {
  using Traits = FlavorTraits<Index>;
  const auto table = compute_structure_constants<Index>(n, caps);
  const auto group = Traits::group(n);
  std::map<Index, ElementOf<Index>> representative;
  std::map<ElementOf<Index>, Index> index_of;
  for (const auto& g : group) {
    const auto idx = Traits::index_of(g);
    index_of.emplace(g, idx);
    representative.try_emplace(idx, g);
  }
  std::map<std::tuple<Index, Index, Index>, std::int64_t> brute;
  for (const auto& sigma : group) {
    for (const auto& tau : group) {
      const auto pi = compose(sigma, tau);
      const auto& gamma = index_of.at(pi);
      if (representative.at(gamma) == pi) ++brute[{index_of.at(sigma), index_of.at(tau), gamma}];
    }
  }
  const std::string where = to_string(Traits::flavor) + " n=" + std::to_string(n);
  for (const auto& beta : table.indices) {
    for (const auto& alpha : table.indices) {
      const auto product = inner_product(beta, alpha, table);
      for (const auto& gamma : table.indices) {
        auto it = brute.find({alpha, beta, gamma});
        const std::int64_t expected = it == brute.end() ? 0 : it->second;
        tally.expect(product.coefficient(gamma) == expected,
                     "F_" + beta.to_string() + " * F_" + alpha.to_string() + " at F_" + gamma.to_string() + " " + where);
      }
    }
  }
}

std::int64_t dimension_a(int n) { return power(2, n - 1); }
std::int64_t dimension_b(int n) { return power(2, n); }
std::int64_t dimension_s(int n) { return 2 * power(3, n - 1); }

}  // namespace

CheckResult check_gamma_type_a(int max_n, int chain_size) {
  Tally tally("fundamental equals gamma (type A)");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& pi : enumerate_symmetric_group(n)) {
      tally.expect(gamma_equals_fundamental_check(pi, chain_size), "pi=" + pi.to_string());
    }
  }
  return tally.result();
}

CheckResult check_gamma_type_b_signed(int max_n, int chain_size) {
  Tally tally("type B and signed gamma");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& pi : enumerate_hyperoctahedral_group(n)) {
      tally.expect(gamma_equals_fundamental_check(pi, chain_size, Flavor::B), "B pi=" + pi.to_string());
      tally.expect(gamma_equals_fundamental_check(pi, chain_size, Flavor::S), "S pi=" + pi.to_string());
    }
  }
  const SignedPermutation example({-3, 2, -1});
  const Series expected_b = worked_example(chain_size, Alphabet::X, Alphabet::X, Alphabet::X, {{Alphabet::X, chain_size}});
  const Series expected_s = worked_example(chain_size, Alphabet::U, Alphabet::V, Alphabet::U,
                                           {{Alphabet::U, chain_size}, {Alphabet::V, chain_size}});
  tally.expect(gamma_B(example, chain_size) == expected_b, "worked example Gamma_B(-3,2,-1)");
  tally.expect(gamma_signed(example, chain_size) == expected_s, "worked example signed Gamma(-3,2,-1)");
  tally.expect(expand_fundamental(PseudoComposition({0, 2, 1}), chain_size) == expected_b, "F_B(0,2,1) example");
  tally.expect(expand_fundamental(SignedComposition({-1, 1, -1}), chain_size) == expected_s, "F_S(-1,1,-1) example");
  return tally.result();
}

CheckResult check_inner_coproduct_a(int max_n, int chain_size) {
  Tally tally("inner coproduct (type A)");
  for (int n = 1; n <= max_n; ++n) {
    check_factorization_identity<Permutation>(
        tally, enumerate_symmetric_group(n), [&](const Permutation& g, Side side) { return gamma(g, chain_size, side); },
        [&](const Permutation& pi) { return bipartite_gamma(pi, chain_size, chain_size); },
        static_cast<std::int64_t (*)(const Permutation&, int, int)>(&count_bipartite_ppartitions), chain_size);
  }
  return tally.result();
}

CheckResult check_inner_coproduct_b_signed(int max_n, int chain_size) {
  Tally tally("inner coproduct (type B and signed)");
  using CountFn = std::int64_t (*)(const SignedPermutation&, int, int);
  for (int n = 1; n <= max_n; ++n) {
    const auto group = enumerate_hyperoctahedral_group(n);
    check_factorization_identity<SignedPermutation>(
        tally, group, [&](const SignedPermutation& g, Side side) { return gamma_B(g, chain_size, side); },
        [&](const SignedPermutation& pi) { return bipartite_gamma(pi, chain_size, chain_size, Flavor::B); },
        static_cast<CountFn>(&count_bipartite_ppartitions), chain_size);
    check_factorization_identity<SignedPermutation>(
        tally, group, [&](const SignedPermutation& g, Side side) { return gamma_signed(g, chain_size, side); },
        [&](const SignedPermutation& pi) { return bipartite_gamma(pi, chain_size, chain_size, Flavor::S); },
        static_cast<CountFn>(&count_bipartite_ppartitions), chain_size);
  }
  return tally.result();
}

CheckResult check_closure(int max_a, int max_b, int max_s, const Caps& caps) {
  Tally tally("closure and dimensions");
  check_closure_flavor<Composition>(tally, max_a, caps, &dimension_a);
  check_closure_flavor<PseudoComposition>(tally, max_b, caps, &dimension_b);
  check_closure_flavor<SignedComposition>(tally, max_s, caps, &dimension_s);
  return tally.result();
}

CheckResult check_representative_independence(int max_a, int max_bs, const Caps& caps) {
  Tally tally("representative independence");
  check_representatives_flavor<Composition>(tally, max_a, caps);
  check_representatives_flavor<PseudoComposition>(tally, max_bs, caps);
  check_representatives_flavor<SignedComposition>(tally, max_bs, caps);
  return tally.result();
}

CheckResult check_basis_round_trip(int max_n) {
  Tally tally("basis change round trip");
  check_round_trip_flavor<Composition>(tally, max_n);
  check_round_trip_flavor<PseudoComposition>(tally, max_n);
  check_round_trip_flavor<SignedComposition>(tally, max_n);

  const Composition two_one({2, 1});
  QSymVector<Composition> expected(3, Basis::Monomial);
  expected.add(Composition({2, 1}), 1);
  expected.add(Composition({1, 1, 1}), 1);
  const auto f21 = QSymVector<Composition>::basis_element(two_one, Basis::Fundamental);
  tally.expect(change_basis(f21, Basis::Monomial) == expected, "F_(2,1) = M_(2,1) + M_(1,1,1)");
  // Σ_{i <= j < k <= 4} x_i x_j x_k
  Series weak_strict({{Alphabet::X, 4}});
  for (int i = 1; i <= 4; ++i) {
    for (int j = i; j <= 4; ++j) {
      for (int k = j + 1; k <= 4; ++k) {
        weak_strict.add_term(Monomial({Variable(Alphabet::X, i), Variable(Alphabet::X, j), Variable(Alphabet::X, k)}), 1);
      }
    }
  }
  tally.expect(f21.expand(4) == weak_strict, "F_(2,1) evaluated");
  tally.expect(expected.expand(4) == weak_strict, "M_(2,1) + M_(1,1,1) evaluated");
  return tally.result();
}

CheckResult check_counting(int max_n, const Caps& caps) {
  Tally tally("enumeration counts and class partitions");
  for (int n = 1; n <= max_n; ++n) {
    const std::string where = " n=" + std::to_string(n);
    tally.expect(static_cast<std::int64_t>(enumerate_compositions(n).size()) == dimension_a(n), "compositions" + where);
    tally.expect(static_cast<std::int64_t>(enumerate_pseudo(n).size()) == dimension_b(n), "pseudo" + where);
    tally.expect(static_cast<std::int64_t>(enumerate_signed(n).size()) == dimension_s(n), "signed" + where);
  }
  for (int n = 1; n <= caps.a; ++n) check_partition_flavor<Composition>(tally, n, factorial(n), caps);
  for (int n = 1; n <= caps.b; ++n) check_partition_flavor<PseudoComposition>(tally, n, power(2, n) * factorial(n), caps);
  for (int n = 1; n <= caps.s; ++n) check_partition_flavor<SignedComposition>(tally, n, power(2, n) * factorial(n), caps);
  return tally.result();
}

CheckResult check_duality(const Caps& caps) {
  Tally tally("duality with structure constants");
  check_duality_flavor<Composition>(tally, caps.a, caps);
  check_duality_flavor<PseudoComposition>(tally, caps.b, caps);
  check_duality_flavor<SignedComposition>(tally, caps.s, caps);
  return tally.result();
}

CheckResult check_u_equals_v(int max_n, int chain_size) {
  Tally tally("u = v specialization");
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& alpha : enumerate_signed(n)) {
      const Series f = rename_alphabet(substitute_u_equals_v(expand_fundamental(alpha, chain_size)), Alphabet::V, Alphabet::X);
      tally.expect(f == expand_fundamental(merge_to_pseudo(alpha), chain_size), "F at " + alpha.to_string());
      tally.expect(f == specialize_u_equals_v(alpha, Basis::Fundamental).expand(chain_size), "F basis rule at " + alpha.to_string());
      const Series m = rename_alphabet(substitute_u_equals_v(expand_monomial(alpha, chain_size)), Alphabet::V, Alphabet::X);
      tally.expect(m == specialize_u_equals_v(alpha, Basis::Monomial).expand(chain_size), "M basis rule at " + alpha.to_string());
    }
  }
  return tally.result();
}

std::vector<CheckResult> run_acceptance_suite(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  out.push_back(check_gamma_type_a());
  out.push_back(check_gamma_type_b_signed());
  out.push_back(check_inner_coproduct_a());
  out.push_back(check_inner_coproduct_b_signed(options.slow ? 3 : 2));
  out.push_back(check_closure(5, 4, 4, options.caps));
  out.push_back(check_representative_independence(4, 3, options.caps));
  out.push_back(check_basis_round_trip());
  out.push_back(check_counting(10, options.caps));
  out.push_back(check_duality(options.caps));
  out.push_back(check_u_equals_v());
  return out;
}

}  // namespace qsym
