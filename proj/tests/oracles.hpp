#pragma once

// Test-side helpers: seeded generators and independent oracles. Nothing in
// here calls the library routine it is meant to check.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "qsym/combinatorics.hpp"
#include "qsym/groups.hpp"
#include "qsym/series.hpp"

namespace oracle {

using namespace qsym;

// ---- generators ----------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Composition composition(int n) {
    std::vector<int> parts{1};
    for (int i = 1; i < n; ++i) {
      if (coin()) parts.push_back(1); else ++parts.back();
    }
    return Composition(parts);
  }

  PseudoComposition pseudo(int n) {
    auto parts = composition(n).parts();
    if (coin()) parts.insert(parts.begin(), 0);
    return PseudoComposition(parts);
  }

  SignedComposition signed_comp(int n) {
    auto parts = composition(n).parts();
    for (int& p : parts) if (coin()) p = -p;
    return SignedComposition(parts);
  }

  Permutation permutation(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::shuffle(w.begin(), w.end(), rng_);
    return Permutation(w);
  }

  SignedPermutation signed_permutation(int n) {
    auto w = permutation(n).window();
    for (int& x : w) if (coin()) x = -x;
    return SignedPermutation(w);
  }

  // Random relation set on 1..n that is acyclic by construction: only
  // pairs (a, b) with a before b in a random linear order.
  std::vector<std::pair<int, int>> dag(int n, int percent) {
    const auto order = permutation(n).window();
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (uniform(1, 100) <= percent) rel.emplace_back(order[i], order[j]);
      }
    }
    return rel;
  }

  Series series(int terms, int n_max, int max_coeff) {
    Series s({{Alphabet::X, n_max}});
    for (int t = 0; t < terms; ++t) {
      std::vector<Variable> vars;
      const int deg = uniform(0, 3);
      for (int d = 0; d < deg; ++d) vars.emplace_back(Alphabet::X, uniform(0, n_max));
      s.add_term(Monomial(vars), uniform(-max_coeff, max_coeff));
    }
    return s;
  }

 private:
  std::mt19937_64 rng_;
};

// ---- combinatorial oracles ----------------------------------------------

// Partial sums α_1, α_1+α_2, ... excluding the total.
inline std::set<int> partial_sums(const std::vector<int>& parts) {
  std::set<int> out;
  int s = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    s += std::abs(parts[i]);
    out.insert(s);
  }
  return out;
}

// Letter-level sign word of a signed composition.
inline std::vector<int> sign_letters(const SignedComposition& a) {
  std::vector<int> out;
  for (int p : a.parts()) out.insert(out.end(), std::abs(p), p < 0 ? -1 : 1);
  return out;
}

// Window descents of a signed permutation with π_0 = 0.
inline std::set<int> window_descents(const std::vector<int>& w) {
  std::set<int> out;
  int prev = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (prev > w[i]) out.insert(static_cast<int>(i));
    prev = w[i];
  }
  return out;
}

// Runs of a signed window that are increasing and of one sign.
inline std::vector<int> signed_runs(const std::vector<int>& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int s = w[i] < 0 ? -1 : 1;
    if (i > 0 && (w[i - 1] < 0) == (w[i] < 0) && w[i - 1] < w[i]) {
      out.back() += s;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// Calls f on every element of B_n as a window (n! 2^n of them).
inline void for_each_signed_window(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> w = p;
      for (int i = 0; i < n; ++i) if (mask >> i & 1) w[i] = -w[i];
      f(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

inline long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// ---- letter-level fundamental expansions -----------------------------------
//
// Sum over index sequences 0 = i_0 <= i_1 <= ... <= i_n <= N, strict at
// step r (from i_r to i_{r+1}) when r is in `strict`, with letter r+1 drawn
// from letters[r]. The first index may be 0 only if `allow_zero`.

inline Series letter_sum(const std::vector<Alphabet>& letters, const std::set<int>& strict, bool allow_zero,
                         int chain_size, const Series::Bounds& bounds) {
  Series out(bounds);
  const int n = static_cast<int>(letters.size());
  std::vector<int> idx(n);
  std::function<void(int, int)> rec = [&](int r, int prev) {
    if (r == n) {
      std::vector<Variable> vars;
      for (int k = 0; k < n; ++k) vars.emplace_back(letters[k], idx[k]);
      out.add_term(Monomial(vars), 1);
      return;
    }
    int lo = strict.contains(r) ? prev + 1 : prev;
    if (r == 0 && !allow_zero) lo = std::max(lo, 1);
    for (int i = lo; i <= chain_size; ++i) {
      idx[r] = i;
      rec(r + 1, i);
    }
  };
  rec(0, 0);
  return out;
}

// F_α: weakly increasing from 1, strict at the partial sums.
inline Series fundamental_A(const Composition& a, int chain_size) {
  return letter_sum(std::vector<Alphabet>(a.degree(), Alphabet::X), partial_sums(a.parts()), false, chain_size,
                    {{Alphabet::X, chain_size}});
}

// F_{B,α}: weakly increasing from 0, strict at the descent set where a
// leading zero part means a descent at 0.
inline Series fundamental_B(const PseudoComposition& a, int chain_size) {
  std::set<int> strict;
  int s = 0;
  const auto& p = a.parts();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    s += p[i];
    strict.insert(s);
  }
  return letter_sum(std::vector<Alphabet>(a.degree(), Alphabet::X), strict, true, chain_size,
                    {{Alphabet::X, chain_size}});
}

// F̄_α: u for negative letters, v for positive. Strict at position 0 when
// the first letter is negative, and at every block boundary other than
// negative-then-positive.
inline Series fundamental_S(const SignedComposition& a, int chain_size) {
  const auto signs = sign_letters(a);
  std::vector<Alphabet> letters;
  for (int s : signs) letters.push_back(s < 0 ? Alphabet::U : Alphabet::V);
  std::set<int> strict;
  if (signs.front() < 0) strict.insert(0);
  for (int b : partial_sums(a.parts())) {
    if (!(signs[b - 1] < 0 && signs[b] > 0)) strict.insert(b);
  }
  return letter_sum(letters, strict, true, chain_size, {{Alphabet::U, chain_size}, {Alphabet::V, chain_size}});
}

}  // namespace oracle
