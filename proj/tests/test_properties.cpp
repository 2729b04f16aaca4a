// Randomized identities. Every generator is seeded, so a failure reproduces
// exactly; CAPTURE prints the offending input.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qsym/ppartition.hpp"
#include "qsym/quasisymmetric.hpp"

using namespace qsym;

TEST_CASE("descent sets round trip at large degree") {
  oracle::Gen gen(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 24);
    const auto a = gen.composition(n);
    CHECK(descents_to_comp(comp_to_descents(a).positions, n) == a);
    const auto b = gen.pseudo(n);
    CHECK(descents_to_pseudo(pseudo_to_descents(b).positions, n) == b);
    const auto s = gen.signed_comp(n);
    CHECK(SignedComposition::parse(s.to_string()) == s);
  }
}

TEST_CASE("refinement is a partial order") {
  oracle::Gen gen(102);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 8);
    const auto a = gen.signed_comp(n);
    const auto b = gen.signed_comp(n);
    const auto c = gen.signed_comp(n);
    CHECK(refines(a, a));
    if (refines(b, a) && refines(a, b)) CHECK(a == b);
    if (refines(b, a) && refines(c, b)) CHECK(refines(c, a));
    // Every refinement of a keeps its sign word.
    for (const auto& r : refinements_of(a)) CHECK(oracle::sign_letters(r) == oracle::sign_letters(a));
  }
}

TEST_CASE("group laws on random signed permutations") {
  oracle::Gen gen(103);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.uniform(1, 9);
    const auto a = gen.signed_permutation(n);
    const auto b = gen.signed_permutation(n);
    const auto c = gen.signed_permutation(n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)) == SignedPermutation::identity(n));
    CHECK(inverse(compose(a, b)) == compose(inverse(b), inverse(a)));
    for (int i = 1; i <= n; ++i) CHECK(compose(a, b)(i) == a(b(i)));
    CHECK(signed_descent_composition(a).degree() == n);
    CHECK(descent_pseudo(a).degree() == n);
  }
}

TEST_CASE("gamma of a random permutation is its fundamental function") {
  oracle::Gen gen(104);
  for (int trial = 0; trial < 40; ++trial) {
    const auto pi = gen.permutation(gen.uniform(1, 6));
    CAPTURE(pi.to_string());
    CHECK(gamma_equals_fundamental_check(pi, 4));
    const auto spi = gen.signed_permutation(gen.uniform(1, 4));
    CAPTURE(spi.to_string());
    CHECK(gamma_equals_fundamental_check(spi, 3, Flavor::B));
    CHECK(gamma_equals_fundamental_check(spi, 3, Flavor::S));
  }
}

TEST_CASE("random basis-change round trips") {
  oracle::Gen gen(105);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform(1, 6);
    QSymVector<SignedComposition> v(n, trial % 2 ? Basis::Monomial : Basis::Fundamental);
    for (int k = 0; k < 5; ++k) v.add(gen.signed_comp(n), gen.uniform(-50, 50));
    const auto other = change_basis(v, trial % 2 ? Basis::Fundamental : Basis::Monomial);
    CHECK(change_basis(other, v.basis()) == v);
    if (n <= 4) CHECK(v.expand(3) == other.expand(3));

    QSymVector<PseudoComposition> w(n, Basis::Fundamental);
    for (int k = 0; k < 5; ++k) w.add(gen.pseudo(n), gen.uniform(-50, 50));
    CHECK(change_basis(change_basis(w, Basis::Monomial), Basis::Fundamental) == w);
  }
}

TEST_CASE("u = v on random signed combinations") {
  oracle::Gen gen(106);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.uniform(1, 4);
    const auto a = gen.signed_comp(n);
    CAPTURE(a.to_string());
    const Series f = rename_alphabet(substitute_u_equals_v(expand_fundamental(a, 3)), Alphabet::V, Alphabet::X);
    CHECK(f == expand_fundamental(merge_to_pseudo(a), 3));
    CHECK(f == oracle::fundamental_B(merge_to_pseudo(a), 3));
  }
}

TEST_CASE("bipartite gamma splits along factorizations") {
  // Γ(π)(XY) = Σ_{σ∘τ=π} Γ(τ; X) Γ(σ; Y) on random π.
  oracle::Gen gen(107);
  for (int trial = 0; trial < 10; ++trial) {
    const auto pi = gen.permutation(gen.uniform(1, 4));
    Series sum;
    for (const auto& sigma : enumerate_symmetric_group(pi.degree())) {
      const auto tau = compose(inverse(sigma), pi);
      sum += gamma(tau, 2, Side::First) * gamma(sigma, 2, Side::Second);
    }
    CAPTURE(pi.to_string());
    CHECK(bipartite_gamma(pi, 2, 2) == sum);
  }
}
