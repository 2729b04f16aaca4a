#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qsym/ppartition.hpp"
#include "qsym/quasisymmetric.hpp"

using namespace qsym;

namespace {

Variable X(int i) { return Variable(Alphabet::X, i); }
Variable U(int i) { return Variable(Alphabet::U, i); }
Variable V(int i) { return Variable(Alphabet::V, i); }

}  // namespace

TEST_CASE("monomial expansions") {
  Series a({{Alphabet::X, 3}});
  a.add_term(Monomial({{X(1), 2}, {X(2), 1}}), 1);
  a.add_term(Monomial({{X(1), 2}, {X(3), 1}}), 1);
  a.add_term(Monomial({{X(2), 2}, {X(3), 1}}), 1);
  CHECK(expand_monomial(Composition({2, 1}), 3) == a);

  // Strict, weak, strict: i_1 >= 1, i_1 <= i_2 < i_3.
  Series s({{Alphabet::U, 3}, {Alphabet::V, 3}});
  s.add_term(Monomial({U(1), V(1), U(2)}), 1);
  s.add_term(Monomial({U(1), V(1), U(3)}), 1);
  s.add_term(Monomial({U(1), V(2), U(3)}), 1);
  s.add_term(Monomial({U(2), V(2), U(3)}), 1);
  CHECK(expand_monomial(SignedComposition({-1, 1, -1}), 3) == s);

  Series b({{Alphabet::X, 2}});
  b.add_term(Monomial({{X(0), 2}, {X(1), 1}}), 1);
  b.add_term(Monomial({{X(0), 2}, {X(2), 1}}), 1);
  CHECK(expand_monomial(PseudoComposition({2, 1}), 2) == b);

  Series b0({{Alphabet::X, 2}});
  b0.add_term(Monomial({{X(1), 2}, {X(2), 1}}), 1);
  CHECK(expand_monomial(PseudoComposition({0, 2, 1}), 2) == b0);

  // A positive first part may sit at index 0.
  Series v({{Alphabet::U, 1}, {Alphabet::V, 1}});
  v.add_term(Monomial({V(0)}), 1);
  v.add_term(Monomial({V(1)}), 1);
  CHECK(expand_monomial(SignedComposition({1}), 1) == v);

  CHECK(expand_monomial(Composition({2, 1}), 3, Side::Second).to_string() == "y1^2*y2 + y1^2*y3 + y2^2*y3");
  CHECK_THROWS_AS(expand_monomial(Composition({1}), 0), std::invalid_argument);
}

TEST_CASE("fundamental expansions agree with letter-level oracles") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& a : enumerate_compositions(n)) CHECK(expand_fundamental(a, 4) == oracle::fundamental_A(a, 4));
    for (const auto& a : enumerate_pseudo(n)) CHECK(expand_fundamental(a, 3) == oracle::fundamental_B(a, 3));
    for (const auto& a : enumerate_signed(n)) {
      CAPTURE(a.to_string());
      CHECK(expand_fundamental(a, 3) == oracle::fundamental_S(a, 3));
    }
  }
}

TEST_CASE("basis change") {
  const auto f21 = fundamental_in_monomial(Composition({2, 1}));
  CHECK(f21.basis() == Basis::Monomial);
  CHECK(f21.terms() == std::map<Composition, std::int64_t>{{Composition({2, 1}), 1}, {Composition({1, 1, 1}), 1}});

  const auto m21 = monomial_in_fundamental(Composition({2, 1}));
  CHECK(m21.basis() == Basis::Fundamental);
  CHECK(m21.terms() == std::map<Composition, std::int64_t>{{Composition({2, 1}), 1}, {Composition({1, 1, 1}), -1}});

  // Series level: F_(2,1) = M_(2,1) + M_(1,1,1).
  CHECK(expand_fundamental(Composition({2, 1}), 4) ==
        expand_monomial(Composition({2, 1}), 4) + expand_monomial(Composition({1, 1, 1}), 4));

  oracle::Gen gen(3);
  QSymVector<Composition> v(4, Basis::Fundamental);
  for (const auto& a : enumerate_compositions(4)) v.add(a, gen.uniform(-20, 20));
  const auto m = change_basis(v, Basis::Monomial);
  CHECK(change_basis(m, Basis::Fundamental) == v);
  CHECK(v.expand(4) == m.expand(4));
}

TEST_CASE("vector printing") {
  QSymVector<SignedComposition> v(2, Basis::Fundamental);
  CHECK(v.to_string() == "0");
  v.add(SignedComposition({-1, 1}), 2);
  v.add(SignedComposition({2}), -1);
  CHECK(v.to_string() == "2*(-1,1) + -1*(2)");
  CHECK(v.to_json().dump() ==
        R"({"basis":"fundamental","degree":2,"flavor":"S","terms":[{"coeff":2,"index":"-1,1"},{"coeff":-1,"index":"2"}]})");
  CHECK_THROWS_AS(v.add(SignedComposition({1}), 1), std::invalid_argument);
  v.add(SignedComposition({2}), 1);
  CHECK(v.terms().size() == 1);
}

TEST_CASE("gamma equals the fundamental function of the descent index") {
  CHECK(gamma_equals_fundamental_check(Permutation::parse("3,4,5,2,6,1"), 6));
  CHECK(gamma_equals_fundamental_check(SignedPermutation::parse("-3,2,-1"), 4, Flavor::B));
  CHECK(gamma_equals_fundamental_check(SignedPermutation::parse("-3,2,-1"), 4, Flavor::S));
  CHECK_THROWS_AS(gamma_equals_fundamental_check(SignedPermutation::parse("1"), 2, Flavor::A), std::invalid_argument);

  // Σ_{0<i<=j<k<=4} x_i x_j x_k, written out directly.
  Series expect({{Alphabet::X, 4}});
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k) expect.add_term(Monomial({X(i), X(j), X(k)}), 1);
  CHECK(gamma_B(SignedPermutation::parse("-3,2,-1"), 4) == expect);
}

TEST_CASE("inner product and coproduct at n = 2") {
  const Composition two({2});
  const Composition ones({1, 1});
  const auto table = compute_structure_constants<Composition>(2);
  CHECK(inner_product(ones, ones, table).terms() == std::map<Composition, std::int64_t>{{two, 1}});
  CHECK(inner_product(ones, two, table).terms() == std::map<Composition, std::int64_t>{{ones, 1}});
  CHECK(inner_product(two, two) == QSymVector<Composition>::basis_element(two, Basis::Fundamental));

  const auto cp = inner_coproduct(two, table);
  REQUIRE(cp.size() == 2);
  CHECK(cp[0].left == ones);
  CHECK(cp[0].right == ones);
  CHECK(cp[1].left == two);
  CHECK(cp[1].right == two);
  CHECK(inner_coproduct(ones).size() == 2);
  CHECK_THROWS_AS(inner_product(Composition({3}), Composition({3}), table), std::invalid_argument);
}

TEST_CASE("u = v specialization") {
  CHECK(specialize_u_equals_v(SignedComposition({-1, 1, -1}), Basis::Fundamental) ==
        QSymVector<PseudoComposition>::basis_element(PseudoComposition({0, 2, 1}), Basis::Fundamental));

  // Σ_{i>=0} v_i becomes x_0 + Σ_{i>=1} x_i.
  QSymVector<PseudoComposition> m1(1, Basis::Monomial);
  m1.add(PseudoComposition({1}), 1);
  m1.add(PseudoComposition({0, 1}), 1);
  CHECK(specialize_u_equals_v(SignedComposition({1}), Basis::Monomial) == m1);

  for (const auto& a : enumerate_signed(3)) {
    for (Basis basis : {Basis::Monomial, Basis::Fundamental}) {
      const Series s = basis == Basis::Monomial ? expand_monomial(a, 3) : expand_fundamental(a, 3);
      CHECK(rename_alphabet(substitute_u_equals_v(s), Alphabet::V, Alphabet::X) ==
            specialize_u_equals_v(a, basis).expand(3));
    }
  }
}
