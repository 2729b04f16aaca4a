#include "qsym/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qsym {

namespace {

std::string join(const std::vector<int>& window) {
  std::string out;
  for (std::size_t i = 0; i < window.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(window[i]);
  }
  return out;
}

void check_bijection(const std::vector<int>& abs_window, const std::vector<int>& original) {
  const int n = static_cast<int>(abs_window.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : abs_window) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("window is not a (signed) permutation: " + join(original));
    }
    seen[v] = true;
  }
}

void check_degree(int n) {
  if (n < 1) throw std::invalid_argument("group degree must be >= 1");
}

}  // namespace

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
  if (window_.empty()) throw std::invalid_argument("empty permutation");
  check_bijection(window_, window_);
}

Permutation Permutation::identity(int n) {
  check_degree(n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_int_list(text)); }

std::string Permutation::to_string() const { return join(window_); }

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  if (window_.empty()) throw std::invalid_argument("empty signed permutation");
  std::vector<int> abs_window(window_.size());
  std::transform(window_.begin(), window_.end(), abs_window.begin(), [](int v) { return std::abs(v); });
  check_bijection(abs_window, window_);
}

SignedPermutation SignedPermutation::identity(int n) {
  check_degree(n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  return SignedPermutation(parse_int_list(text));
}

std::string SignedPermutation::to_string() const { return join(window_); }

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> w(tau.degree());
  for (int i = 1; i <= tau.degree(); ++i) w[i - 1] = sigma(tau(i));
  return Permutation(std::move(w));
}

SignedPermutation compose(const SignedPermutation& sigma, const SignedPermutation& tau) {
  if (sigma.degree() != tau.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> w(tau.degree());
  for (int i = 1; i <= tau.degree(); ++i) w[i - 1] = sigma(tau(i));
  return SignedPermutation(std::move(w));
}

Permutation inverse(const Permutation& pi) {
  std::vector<int> w(pi.degree());
  for (int i = 1; i <= pi.degree(); ++i) w[pi(i) - 1] = i;
  return Permutation(std::move(w));
}

SignedPermutation inverse(const SignedPermutation& pi) {
  std::vector<int> w(pi.degree());
  for (int i = 1; i <= pi.degree(); ++i) {
    const int image = pi(i);
    w[std::abs(image) - 1] = image > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

std::vector<Permutation> enumerate_symmetric_group(int n) {
  check_degree(n);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<SignedPermutation> enumerate_hyperoctahedral_group(int n) {
  check_degree(n);
  std::vector<SignedPermutation> out;
  for (const auto& p : enumerate_symmetric_group(n)) {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> w = p.window();
      for (int b = 0; b < n; ++b) {
        if (mask >> b & 1U) w[b] = -w[b];
      }
      out.emplace_back(std::move(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> descent_set(const Permutation& pi) {
  std::set<int> out;
  for (int i = 1; i < pi.degree(); ++i) {
    if (pi(i) > pi(i + 1)) out.insert(i);
  }
  return out;
}

std::set<int> descent_set(const SignedPermutation& pi) {
  std::set<int> out;
  if (pi(1) < 0) out.insert(0);
  for (int i = 1; i < pi.degree(); ++i) {
    if (pi(i) > pi(i + 1)) out.insert(i);
  }
  return out;
}

Composition descent_composition(const Permutation& pi) { return descents_to_comp(descent_set(pi), pi.degree()); }

PseudoComposition descent_pseudo(const SignedPermutation& pi) {
  return descents_to_pseudo(descent_set(pi), pi.degree());
}

SignedComposition signed_descent_composition(const SignedPermutation& pi) {
  const auto& w = pi.window();
  std::vector<int> parts;
  int run = 1;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    const bool continues = i < w.size() && w[i - 1] < w[i] && (w[i - 1] < 0) == (w[i] < 0);
    if (continues) {
      ++run;
    } else {
      parts.push_back(w[i - 1] < 0 ? -run : run);
      run = 1;
    }
  }
  return SignedComposition(std::move(parts));
}

}  // namespace qsym
