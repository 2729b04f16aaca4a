#include "qsym/ppartition.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qsym {

namespace {

void check_chain_size(int chain_size) {
  if (chain_size < 1) throw std::invalid_argument("chain size N must be >= 1");
}

struct ParsedPoset {
  int n = 0;
  std::vector<std::pair<int, int>> relations;
};

ParsedPoset parse_poset_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  ParsedPoset out;
  bool have_size = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    if (!have_size) {
      if (!(fields >> out.n) || out.n < 1) {
        throw std::invalid_argument("poset: line " + std::to_string(line_no) + ": expected element count n >= 1");
      }
      have_size = true;
    } else {
      int a = 0;
      int b = 0;
      char op = 0;
      if (!(fields >> a >> op >> b) || (op != '<' && op != '>')) {
        throw std::invalid_argument("poset: line " + std::to_string(line_no) + ": expected 'i < j'");
      }
      std::string rest;
      if (fields >> rest) throw std::invalid_argument("poset: line " + std::to_string(line_no) + ": trailing text");
      if (op == '>') std::swap(a, b);
      out.relations.emplace_back(a, b);
    }
  }
  if (!have_size) throw std::invalid_argument("poset: missing element count");
  return out;
}

// Warshall closure over an m x m boolean matrix.
void close_transitively(std::vector<bool>& order, std::size_t m) {
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (!order[i * m + k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (order[k * m + j]) order[i * m + j] = true;
      }
    }
  }
}

// Smallest-first topological order of elements lo..hi.
std::vector<int> linear_extension(int lo, int hi, const std::function<bool(int, int)>& less) {
  std::vector<int> order;
  std::vector<bool> placed(hi - lo + 1, false);
  for (int step = lo; step <= hi; ++step) {
    for (int e = lo; e <= hi; ++e) {
      if (placed[e - lo]) continue;
      bool minimal = true;
      for (int p = lo; p <= hi && minimal; ++p) {
        if (!placed[p - lo] && p != e && less(p, e)) minimal = false;
      }
      if (minimal) {
        placed[e - lo] = true;
        order.push_back(e);
        break;
      }
    }
  }
  return order;
}

// Visits every index sequence 0 <= idx_1 <= ... <= idx_n < chain_len with
// idx_1 >= first_min and idx_k < idx_{k+1} for each k in strict_steps.
void for_each_chain_sequence(int chain_len, int n, int first_min, const std::set<int>& strict_steps,
                             const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> idx(n);
  std::function<void(int, int)> rec = [&](int pos, int lo) {
    if (pos == n) {
      visit(idx);
      return;
    }
    for (int v = lo; v < chain_len; ++v) {
      idx[pos] = v;
      rec(pos + 1, strict_steps.contains(pos + 1) ? v + 1 : v);
    }
  };
  rec(0, first_min);
}

std::vector<std::pair<int, int>> signed_product_chain(int nx, int ny) {
  std::vector<std::pair<int, int>> chain;
  for (int a = 0; a <= nx; ++a) {
    for (int b = a == 0 ? 0 : -ny; b <= ny; ++b) chain.emplace_back(a, b);
  }
  return chain;  // already lexicographic; chain[0] == (0, 0)
}

std::set<int> strict_window_steps(const std::set<int>& descents) {
  std::set<int> steps;
  for (int d : descents) {
    if (d > 0) steps.insert(d);
  }
  return steps;
}

}  // namespace

LabeledPoset::LabeledPoset(int n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), order_(static_cast<std::size_t>(n) * n, false) {
  if (n < 1) throw std::invalid_argument("poset must have at least one element");
  for (auto [i, j] : relations) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw std::invalid_argument("poset relation " + std::to_string(i) + " < " + std::to_string(j) + " out of range");
    }
    order_[index(i, j)] = true;
  }
  close_transitively(order_, n);
  for (int i = 1; i <= n; ++i) {
    if (less(i, i)) throw std::invalid_argument("poset relations contain a cycle");
  }
}

LabeledPoset LabeledPoset::chain(const Permutation& pi) {
  std::vector<std::pair<int, int>> rel;
  for (int k = 1; k < pi.degree(); ++k) rel.emplace_back(pi(k), pi(k + 1));
  return LabeledPoset(pi.degree(), rel);
}

LabeledPoset LabeledPoset::antichain(int n) { return LabeledPoset(n, {}); }

LabeledPoset LabeledPoset::parse(std::string_view text) {
  auto parsed = parse_poset_text(text);
  return LabeledPoset(parsed.n, parsed.relations);
}

std::vector<std::pair<int, int>> LabeledPoset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<Permutation> LabeledPoset::linear_extensions() const {
  std::vector<Permutation> out;
  for (const auto& candidate : enumerate_symmetric_group(n_)) {
    bool ok = true;
    for (int a = 1; a <= n_ && ok; ++a) {
      for (int b = a + 1; b <= n_ && ok; ++b) {
        if (less(candidate(b), candidate(a))) ok = false;
      }
    }
    if (ok) out.push_back(candidate);
  }
  return out;
}

TypeBPoset::TypeBPoset(int n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), order_(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1), false) {
  if (n < 1) throw std::invalid_argument("type B poset needs n >= 1");
  for (auto [i, j] : relations) {
    if (std::abs(i) > n || std::abs(j) > n) {
      throw std::invalid_argument("type B relation " + std::to_string(i) + " < " + std::to_string(j) + " out of range");
    }
    order_[index(i, j)] = true;
  }
  close_transitively(order_, 2 * n + 1);
  for (int i = -n; i <= n; ++i) {
    if (less(i, i)) throw std::invalid_argument("type B poset relations contain a cycle");
  }
  for (int i = -n; i <= n; ++i) {
    for (int j = -n; j <= n; ++j) {
      if (less(i, j) && !less(-j, -i)) {
        throw std::invalid_argument("type B poset is not closed under negation: " + std::to_string(i) + " < " +
                                    std::to_string(j) + " but not " + std::to_string(-j) + " < " + std::to_string(-i));
      }
    }
  }
}

TypeBPoset TypeBPoset::chain(const SignedPermutation& pi) {
  const int n = pi.degree();
  std::vector<std::pair<int, int>> rel;
  rel.emplace_back(0, pi(1));
  rel.emplace_back(-pi(1), 0);
  for (int k = 1; k < n; ++k) {
    rel.emplace_back(pi(k), pi(k + 1));
    rel.emplace_back(-pi(k + 1), -pi(k));
  }
  return TypeBPoset(n, rel);
}

TypeBPoset TypeBPoset::parse(std::string_view text) {
  auto parsed = parse_poset_text(text);
  return TypeBPoset(parsed.n, parsed.relations);
}

std::vector<std::pair<int, int>> TypeBPoset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = -n_; i <= n_; ++i) {
    for (int j = -n_; j <= n_; ++j) {
      if (less(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::vector<PPartitionMap> enumerate_ppartitions(const LabeledPoset& poset, int chain_size) {
  check_chain_size(chain_size);
  const int n = poset.size();
  const auto order = linear_extension(1, n, [&](int a, int b) { return poset.less(a, b); });
  std::vector<std::vector<int>> below(n + 1);
  for (int e = 1; e <= n; ++e) {
    for (int p = 1; p <= n; ++p) {
      if (poset.less(p, e)) below[e].push_back(p);
    }
  }

  std::vector<PPartitionMap> out;
  PPartitionMap f{std::vector<int>(n, 0)};
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n) {
      out.push_back(f);
      return;
    }
    const int e = order[pos];
    int lo = 1;
    // Every predecessor precedes e in the linear extension, so it is set.
    for (int p : below[e]) lo = std::max(lo, f.values[p - 1] + (p > e ? 1 : 0));
    for (int v = lo; v <= chain_size; ++v) {
      f.values[e - 1] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PPartitionMap> enumerate_B_ppartitions(const TypeBPoset& poset, int chain_size) {
  check_chain_size(chain_size);
  const int n = poset.size();
  const auto full_order = linear_extension(-n, n, [&](int a, int b) { return poset.less(a, b); });
  std::vector<int> order;  // positive labels by first appearance of ±k
  std::vector<int> step_of(n + 1, -1);
  for (int e : full_order) {
    const int k = std::abs(e);
    if (k != 0 && step_of[k] < 0) {
      step_of[k] = static_cast<int>(order.size());
      order.push_back(k);
    }
  }
  // Relations are checked at the step where their later endpoint is set.
  std::vector<std::vector<std::pair<int, int>>> checks(n);
  for (auto [i, j] : poset.relations()) {
    const int si = i == 0 ? -1 : step_of[std::abs(i)];
    const int sj = j == 0 ? -1 : step_of[std::abs(j)];
    checks[std::max(si, sj)].emplace_back(i, j);
  }

  std::vector<PPartitionMap> out;
  PPartitionMap f{std::vector<int>(n, 0)};
  std::function<void(int)> rec = [&](int step) {
    if (step == n) {
      out.push_back(f);
      return;
    }
    for (int v = -chain_size; v <= chain_size; ++v) {
      f.values[order[step] - 1] = v;
      bool ok = true;
      for (auto [i, j] : checks[step]) {
        const int fi = f(i);
        const int fj = f(j);
        if (fi > fj || (i > j && fi == fj)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(step + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Series gamma(const LabeledPoset& poset, int chain_size, Side side) {
  const Alphabet x = plain_alphabet(side);
  Series out({{x, chain_size}});
  for (const auto& f : enumerate_ppartitions(poset, chain_size)) {
    std::vector<Variable> vars;
    for (int v : f.values) vars.emplace_back(x, v);
    out.add_term(Monomial(vars), 1);
  }
  return out;
}

Series gamma(const Permutation& pi, int chain_size, Side side) {
  return gamma(LabeledPoset::chain(pi), chain_size, side);
}

Series gamma_B(const TypeBPoset& poset, int chain_size, Side side) {
  const Alphabet x = plain_alphabet(side);
  Series out({{x, chain_size}});
  for (const auto& f : enumerate_B_ppartitions(poset, chain_size)) {
    std::vector<Variable> vars;
    for (int v : f.values) vars.emplace_back(x, std::abs(v));
    out.add_term(Monomial(vars), 1);
  }
  return out;
}

Series gamma_B(const SignedPermutation& pi, int chain_size, Side side) {
  return gamma_B(TypeBPoset::chain(pi), chain_size, side);
}

Series gamma_signed(const TypeBPoset& poset, int chain_size, Side side) {
  const Alphabet u = negative_alphabet(side);
  const Alphabet v = positive_alphabet(side);
  Series out({{u, chain_size}, {v, chain_size}});
  for (const auto& f : enumerate_B_ppartitions(poset, chain_size)) {
    std::vector<Variable> vars;
    for (int value : f.values) vars.emplace_back(value < 0 ? u : v, std::abs(value));
    out.add_term(Monomial(vars), 1);
  }
  return out;
}

Series gamma_signed(const SignedPermutation& pi, int chain_size, Side side) {
  return gamma_signed(TypeBPoset::chain(pi), chain_size, side);
}

Series bipartite_gamma(const Permutation& pi, int nx, int ny) {
  check_chain_size(nx);
  check_chain_size(ny);
  std::vector<std::pair<int, int>> chain;
  for (int i = 1; i <= nx; ++i) {
    for (int j = 1; j <= ny; ++j) chain.emplace_back(i, j);
  }
  Series out({{Alphabet::X, nx}, {Alphabet::Y, ny}});
  const int n = pi.degree();
  for_each_chain_sequence(static_cast<int>(chain.size()), n, 0, descent_set(pi), [&](const std::vector<int>& idx) {
    std::vector<Variable> vars;
    for (int k = 0; k < n; ++k) {
      vars.emplace_back(Alphabet::X, chain[idx[k]].first);
      vars.emplace_back(Alphabet::Y, chain[idx[k]].second);
    }
    out.add_term(Monomial(vars), 1);
  });
  return out;
}

Series bipartite_gamma(const SignedPermutation& pi, int nx, int ny, Flavor flavor) {
  check_chain_size(nx);
  check_chain_size(ny);
  if (flavor == Flavor::A) throw std::invalid_argument("bipartite_gamma: signed permutations need flavor B or S");
  const auto chain = signed_product_chain(nx, ny);
  const auto descents = descent_set(pi);
  const int n = pi.degree();
  Series out(flavor == Flavor::B ? Series::Bounds{{Alphabet::X, nx}, {Alphabet::Y, ny}}
                                 : Series::Bounds{{Alphabet::U, nx}, {Alphabet::V, nx}, {Alphabet::UY, ny}, {Alphabet::VY, ny}});
  const int first_min = descents.contains(0) ? 1 : 0;
  for_each_chain_sequence(static_cast<int>(chain.size()), n, first_min, strict_window_steps(descents),
                          [&](const std::vector<int>& idx) {
                            std::vector<Variable> vars;
                            for (int k = 0; k < n; ++k) {
                              // Value carried by the label |π_k|.
                              const int sign = pi(k + 1) < 0 ? -1 : 1;
                              const int a = sign * chain[idx[k]].first;
                              const int b = sign * chain[idx[k]].second;
                              if (flavor == Flavor::B) {
                                vars.emplace_back(Alphabet::X, std::abs(a));
                                vars.emplace_back(Alphabet::Y, std::abs(b));
                              } else {
                                const int outer = b < 0 ? -1 : 1;
                                vars.emplace_back(a * outer < 0 ? Alphabet::U : Alphabet::V, std::abs(a));
                                vars.emplace_back(b < 0 ? Alphabet::UY : Alphabet::VY, std::abs(b));
                              }
                            }
                            out.add_term(Monomial(vars), 1);
                          });
  return out;
}

std::int64_t count_bipartite_ppartitions(const Permutation& pi, int nx, int ny) {
  check_chain_size(nx);
  check_chain_size(ny);
  std::int64_t count = 0;
  for_each_chain_sequence(nx * ny, pi.degree(), 0, descent_set(pi), [&](const std::vector<int>&) { ++count; });
  return count;
}

std::int64_t count_bipartite_ppartitions(const SignedPermutation& pi, int nx, int ny) {
  check_chain_size(nx);
  check_chain_size(ny);
  const auto chain = signed_product_chain(nx, ny);
  const auto descents = descent_set(pi);
  std::int64_t count = 0;
  for_each_chain_sequence(static_cast<int>(chain.size()), pi.degree(), descents.contains(0) ? 1 : 0,
                          strict_window_steps(descents), [&](const std::vector<int>&) { ++count; });
  return count;
}

}  // namespace qsym
