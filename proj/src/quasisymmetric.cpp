#include "qsym/quasisymmetric.hpp"

#include <cstdlib>
#include <functional>

#include "qsym/ppartition.hpp"

namespace qsym {

namespace {

struct PartSpec {
  Alphabet alphabet;
  int exponent;
};

void check_chain_size(int chain_size) {
  if (chain_size < 1) throw std::invalid_argument("truncation N must be >= 1");
}

// Sums prefix * Π x_{i_r}^{e_r} over first_min <= i_1, i_r <= N, with
// i_r <= i_{r+1} where weak[r] and i_r < i_{r+1} otherwise.
void expand_parts(const std::vector<PartSpec>& parts, const std::vector<bool>& weak, int first_min, int chain_size,
                  const std::vector<std::pair<Variable, int>>& prefix, Series& out) {
  std::vector<int> idx(parts.size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int lo) {
    if (r == parts.size()) {
      auto powers = prefix;
      for (std::size_t k = 0; k < parts.size(); ++k) powers.emplace_back(Variable(parts[k].alphabet, idx[k]), parts[k].exponent);
      out.add_term(Monomial(std::move(powers)), 1);
      return;
    }
    for (int i = lo; i <= chain_size; ++i) {
      idx[r] = i;
      rec(r + 1, r + 1 < parts.size() && weak[r] ? i : i + 1);
    }
  };
  rec(0, first_min);
}

}  // namespace

std::string to_string(Basis basis) { return basis == Basis::Monomial ? "monomial" : "fundamental"; }

Series expand_monomial(const Composition& alpha, int chain_size, Side side) {
  check_chain_size(chain_size);
  const Alphabet x = plain_alphabet(side);
  Series out({{x, chain_size}});
  std::vector<PartSpec> parts;
  for (int p : alpha.parts()) parts.push_back({x, p});
  expand_parts(parts, std::vector<bool>(parts.size(), false), 1, chain_size, {}, out);
  return out;
}

Series expand_monomial(const PseudoComposition& alpha, int chain_size, Side side) {
  check_chain_size(chain_size);
  const Alphabet x = plain_alphabet(side);
  Series out({{x, chain_size}});
  const auto& p = alpha.parts();
  std::vector<std::pair<Variable, int>> prefix;
  if (p.front() > 0) prefix.emplace_back(Variable(x, 0), p.front());
  std::vector<PartSpec> parts;
  for (std::size_t r = 1; r < p.size(); ++r) parts.push_back({x, p[r]});
  expand_parts(parts, std::vector<bool>(parts.size(), false), 1, chain_size, prefix, out);
  return out;
}

Series expand_monomial(const SignedComposition& alpha, int chain_size, Side side) {
  check_chain_size(chain_size);
  const Alphabet u = negative_alphabet(side);
  const Alphabet v = positive_alphabet(side);
  Series out({{u, chain_size}, {v, chain_size}});
  const auto& p = alpha.parts();
  std::vector<PartSpec> parts;
  std::vector<bool> weak;
  for (std::size_t r = 0; r < p.size(); ++r) {
    parts.push_back({p[r] < 0 ? u : v, std::abs(p[r])});
    weak.push_back(r + 1 < p.size() && p[r] < 0 && p[r + 1] > 0);
  }
  expand_parts(parts, weak, p.front() < 0 ? 1 : 0, chain_size, {}, out);
  return out;
}

bool gamma_equals_fundamental_check(const Permutation& pi, int chain_size) {
  return gamma(pi, chain_size) == expand_fundamental(descent_composition(pi), chain_size);
}

bool gamma_equals_fundamental_check(const SignedPermutation& pi, int chain_size, Flavor flavor) {
  switch (flavor) {
    case Flavor::B:
      return gamma_B(pi, chain_size) == expand_fundamental(descent_pseudo(pi), chain_size);
    case Flavor::S:
      return gamma_signed(pi, chain_size) == expand_fundamental(signed_descent_composition(pi), chain_size);
    case Flavor::A:
      break;
  }
  throw std::invalid_argument("signed permutations need flavor B or S");
}

QSymVector<PseudoComposition> specialize_u_equals_v(const SignedComposition& alpha, Basis basis) {
  const int n = alpha.degree();
  const auto data = signed_comp_data(alpha);
  QSymVector<PseudoComposition> out(n, basis);
  if (basis == Basis::Fundamental) {
    out.add(descents_to_pseudo(data.descents, n), 1);
    return out;
  }
  // Positions where the specialized index sequence may or may not step up:
  // -→+ block boundaries, and position 0 when the first block is positive.
  std::vector<int> optional;
  if (data.signs.front() > 0) optional.push_back(0);
  int sum = 0;
  const auto& p = alpha.parts();
  for (std::size_t r = 0; r + 1 < p.size(); ++r) {
    sum += std::abs(p[r]);
    if (p[r] < 0 && p[r + 1] > 0) optional.push_back(sum);
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << optional.size()); ++mask) {
    std::set<int> positions = data.descents;
    for (std::size_t b = 0; b < optional.size(); ++b) {
      if (mask >> b & 1U) positions.insert(optional[b]);
    }
    out.add(descents_to_pseudo(positions, n), 1);
  }
  return out;
}

}  // namespace qsym
