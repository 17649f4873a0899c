#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evalcode/combinatorics.hpp"
#include "evalcode/error.hpp"
#include "evalcode/polyspace.hpp"
#include "evalcode/rng.hpp"
#include "support.hpp"

using namespace evalcode;

namespace {

using Term = std::pair<std::vector<Exponent>, std::int64_t>;

template <ExactField F>
PolyVec<F> form(const F& f, std::size_t k, std::size_t deg, const std::vector<Term>& terms) {
  auto basis = monomial_basis(k, deg);
  std::vector<typename F::value_type> coeffs(basis.size(), f.zero());
  for (const auto& [e, c] : terms) {
    auto& slot = coeffs[basis.index_of(e)];
    slot = f.add(slot, f.from_int(c));
  }
  return form_from_coeffs(f, k, deg, std::move(coeffs));
}

}  // namespace

TEST_CASE("monomial bases") {
  auto b31 = monomial_basis(3, 1);
  REQUIRE(b31.size() == 3);
  CHECK(std::vector<Exponent>(b31.exponent(0).begin(), b31.exponent(0).end()) ==
        std::vector<Exponent>{1, 0, 0});
  CHECK(std::vector<Exponent>(b31.exponent(2).begin(), b31.exponent(2).end()) ==
        std::vector<Exponent>{0, 0, 1});
  CHECK(monomial_basis(3, 2).size() == 6);
  CHECK(monomial_basis(4, 1).size() == 4);

  for (std::size_t k = 1; k <= 6; ++k) {
    for (std::size_t a = 0; a <= 8; ++a) {
      auto b = monomial_basis(k, a);
      CHECK(b.size() == binomial(a + k - 1, k - 1));
      std::vector<std::vector<Exponent>> seen;
      for (std::size_t i = 0; i < b.size(); ++i) {
        auto e = b.exponent(i);
        std::vector<Exponent> v(e.begin(), e.end());
        std::size_t total = 0;
        for (auto x : v) total += x;
        CHECK(total == a);
        CHECK(b.index_of(v) == i);
        seen.push_back(v);
      }
      // strictly decreasing in lex order means x_1 > x_2 > ... and no duplicates
      for (std::size_t i = 1; i < seen.size(); ++i) CHECK(seen[i - 1] > seen[i]);
    }
  }
}

TEST_CASE("evaluation matrices") {
  RationalField q;
  auto X39 = support::columns(q, support::g39);
  auto M = evaluation_matrix(X39, 1);
  REQUIRE(M.rows() == 7);
  REQUIRE(M.cols() == 3);
  // rows are the normalized representatives, i.e. the columns of G up to a nonzero scalar
  for (std::size_t i = 0; i < 7; ++i) {
    mpq_class scale = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      if (support::g39[j][i] != 0 && scale == 0) scale = M(i, j) / support::g39[j][i];
    }
    REQUIRE(scale != 0);
    for (std::size_t j = 0; j < 3; ++j) CHECK(M(i, j) == scale * support::g39[j][i]);
    CHECK(M(i, 0) == (support::g39[0][i] != 0 ? 1 : 0));
  }

  auto E = point_set_from_ints(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(evaluation_matrix(E, 1) == Matrix<RationalField>::identity(q, 3));

  PrimeField f5(5);
  auto one = point_set_from_ints(f5, 3, {{1, 1, 1}});
  auto M2 = evaluation_matrix(one, 2);
  REQUIRE(M2.rows() == 1);
  REQUIRE(M2.cols() == 6);
  for (std::size_t j = 0; j < 6; ++j) CHECK(M2(0, j) == 1);

  // normalized representatives are evaluated: [2,2,2] is the point [1,1,1]
  auto scaled = point_set_from_ints(f5, 3, {{2, 2, 2}});
  CHECK(evaluation_matrix(scaled, 3) == evaluation_matrix(one, 3));
}

TEST_CASE("variable elimination examples") {
  RationalField q;
  auto L = linear_form<RationalField>(q, {1, 1, 1});
  auto x3 = form(q, 3, 1, {{{0, 0, 1}, 1}});
  CHECK(eliminate_variable(x3, L, 2) == form(q, 2, 1, {{{1, 0}, -1}, {{0, 1}, -1}}));
  CHECK(eliminate_variable(L, L, 2).is_zero());

  PrimeField f7(7);
  auto L7 = linear_form<PrimeField>(f7, {1, 0, 1});
  auto x1x3 = form(f7, 3, 2, {{{1, 0, 1}, 1}});
  auto r = eliminate_variable(x1x3, L7, 2);
  CHECK(r == form(f7, 2, 2, {{{2, 0}, -1}}));
  // evaluate both sides on 20 random points of V(L): x3 = -x1
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    std::uint32_t a = rng.below(7), b = rng.below(7);
    std::vector<std::uint32_t> P{a, b, f7.neg(a)}, kept{a, b};
    CHECK(evaluate(x1x3, std::span<const std::uint32_t>(P)) ==
          evaluate(r, std::span<const std::uint32_t>(kept)));
  }

  try {
    eliminate_variable(x3, linear_form<RationalField>(q, {1, 1, 0}), 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::bad_linear_form);
  }
}

TEST_CASE("elimination agrees with evaluation on V(L)") {
  PrimeField f(31);
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 2 + rng.below(3), deg = rng.below(4);
    auto basis = monomial_basis(k, deg);
    std::vector<std::uint32_t> fc(basis.size()), lc(k);
    for (auto& c : fc) c = rng.below(31);
    for (auto& c : lc) c = rng.below(31);
    const std::size_t j = rng.below(k);
    if (lc[j] == 0) lc[j] = 1;
    auto fpoly = form_from_coeffs(f, k, deg, fc);
    auto L = linear_form(f, lc);
    auto g = eliminate_variable(fpoly, L, j);
    CHECK(g.k() == k - 1);
    for (int s = 0; s < 10; ++s) {
      std::vector<std::uint32_t> kept(k - 1), P(k);
      for (auto& c : kept) c = rng.below(31);
      // solve L(P) = 0 for x_j
      std::uint32_t acc = 0;
      for (std::size_t l = 0, t = 0; l < k; ++l) {
        if (l == j) continue;
        P[l] = kept[t++];
        acc = f.add(acc, f.mul(lc[l], P[l]));
      }
      P[j] = f.neg(f.div(acc, lc[j]));
      CHECK(evaluate(L, std::span<const std::uint32_t>(P)) == 0);
      CHECK(evaluate(fpoly, std::span<const std::uint32_t>(P)) ==
            evaluate(g, std::span<const std::uint32_t>(kept)));
    }
  }
}

TEST_CASE("multiplication by a variable") {
  RationalField q;
  auto x1 = form(q, 3, 1, {{{1, 0, 0}, 1}});
  CHECK(multiply_by_variable(x1, 1) == form(q, 3, 2, {{{1, 1, 0}, 1}}));
  CHECK(multiply_by_variable(zero_form(q, 3, 2), 0).is_zero());
  CHECK(multiply_by_variable(zero_form(q, 3, 2), 0).degree() == 3);
  PrimeField f3(3);
  auto s = form(f3, 2, 1, {{{1, 0}, 1}, {{0, 1}, 1}});
  CHECK(multiply_by_variable(s, 0) == form(f3, 2, 2, {{{2, 0}, 1}, {{1, 1}, 1}}));

  Rng rng(5);
  PrimeField f(13);
  for (int t = 0; t < 20; ++t) {
    const std::size_t k = 2 + rng.below(3), deg = rng.below(4);
    const auto n = monomial_basis(k, deg).size();
    std::vector<std::uint32_t> a(n), b(n);
    for (auto& c : a) c = rng.below(13);
    for (auto& c : b) c = rng.below(13);
    auto fa = form_from_coeffs(f, k, deg, a), fb = form_from_coeffs(f, k, deg, b);
    const std::size_t l = rng.below(k);
    CHECK(multiply_by_variable(add(fa, fb), l) ==
          add(multiply_by_variable(fa, l), multiply_by_variable(fb, l)));
    std::vector<std::uint32_t> P(k);
    for (auto& c : P) c = rng.below(13);
    CHECK(evaluate(multiply_by_variable(fa, l), std::span<const std::uint32_t>(P)) ==
          f.mul(P[l], evaluate(fa, std::span<const std::uint32_t>(P))));
  }
}

TEST_CASE("all-ones point evaluates every monomial to one") {
  RationalField q;
  auto X = point_set_from_ints(q, 4, {{1, 1, 1, 1}, {1, 2, 3, 4}});
  for (std::size_t a = 0; a <= 4; ++a) {
    auto M = evaluation_matrix(X, a);
    for (std::size_t j = 0; j < M.cols(); ++j) CHECK(M(0, j) == 1);
  }
}
