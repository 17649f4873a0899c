#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evalcode/combinatorics.hpp"
#include "evalcode/error.hpp"
#include "evalcode/field.hpp"
#include "evalcode/matrix.hpp"
#include "evalcode/rng.hpp"
#include "support.hpp"

using namespace evalcode;

namespace {

template <ExactField F>
Matrix<F> ints(const F& f, const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix<F> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.from_int(rows[r][c]);
  return m;
}

template <ExactField F>
Matrix<F> random_matrix(const F& f, std::size_t rows, std::size_t cols, Rng& rng,
                        std::int64_t lo, std::int64_t hi) {
  Matrix<F> m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.from_int(rng.between(lo, hi));
  return m;
}

}  // namespace

TEST_CASE("field specs validate the modulus") {
  CHECK(FieldSpec::prime(101).name() == "F_101");
  CHECK(FieldSpec::rationals().name() == "Q");
  CHECK_THROWS_AS(FieldSpec::prime(100), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(std::uint64_t{1} << 31), Error);
  CHECK_NOTHROW(PrimeField(2147483647));
  try {
    PrimeField bad(91);
    FAIL("91 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_field);
  }
}

TEST_CASE("field inverses") {
  PrimeField f7(7);
  CHECK(f7.inv(2) == 4);
  RationalField q;
  CHECK(q.inv(1) == 1);
  CHECK(q.inv(mpq_class(3, 4)) == mpq_class(4, 3));
  try {
    f7.inv(0);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::division_by_zero);
  }
  CHECK_THROWS_AS(q.inv(0), Error);
  // x * inv(x) = 1 for every nonzero residue
  PrimeField f101(101);
  for (std::uint32_t x = 1; x < 101; ++x) CHECK(f101.mul(x, f101.inv(x)) == 1);
}

TEST_CASE("canonical scalars") {
  PrimeField f5(5);
  CHECK(f5.from_int(-1) == 4);
  CHECK(f5.from_int(12) == 2);
  CHECK(parse_scalar(f5, "3/4") == f5.div(3, 4));
  RationalField q;
  auto v = parse_scalar(q, "6/-8");
  CHECK(v == mpq_class(-3, 4));
  CHECK(v.get_den() == 4);
  CHECK(q.to_string(v) == "-3/4");
  CHECK(q.to_string(parse_scalar(q, "10/5")) == "2");
  CHECK_THROWS_AS(parse_scalar(q, "1/0"), Error);
  CHECK_THROWS_AS(parse_scalar(q, "abc"), Error);
  CHECK_THROWS_AS(parse_scalar(f5, "1/5"), Error);
}

TEST_CASE("rref examples") {
  PrimeField f5(5);
  auto id = Matrix<PrimeField>::identity(f5, 2);
  auto e = rref(id);
  CHECK(e.reduced == id);
  CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
  CHECK(e.rank() == 2);

  RationalField q;
  auto m = ints(q, {{1, 2}, {2, 4}});
  auto r = rref(m);
  CHECK(r.reduced == ints(q, {{1, 2}, {0, 0}}));
  CHECK(r.rank() == 1);

  auto g = ints(q, support::g34);
  CHECK(rank(g) == 3);
  // oracle: naive elimination mod a large prime agrees
  std::vector<oracle::Row> rows;
  for (auto& row : support::g34) rows.emplace_back(row.begin(), row.end());
  CHECK(oracle::rank(rows, 1000003) == 3);
}

TEST_CASE("kernel bases") {
  PrimeField f2(2);
  auto k1 = kernel_basis(ints(f2, {{1, 1, 1}}));
  CHECK(k1.rows() == 2);
  RationalField q;
  CHECK(kernel_basis(Matrix<RationalField>::identity(q, 3)).rows() == 0);
}

TEST_CASE("row space membership") {
  RationalField q;
  auto m = ints(q, {{0, 1}});
  std::vector<mpq_class> zero{0, 0}, e1{1, 0};
  CHECK(in_row_space<RationalField>(zero, m));
  CHECK_FALSE(in_row_space<RationalField>(e1, m));
  PrimeField f7(7);
  std::vector<std::uint32_t> v{2, 4};
  CHECK(in_row_space<PrimeField>(v, ints(f7, {{1, 2}})));
}

TEST_CASE_TEMPLATE("linear algebra properties on random matrices", F, PrimeField, RationalField) {
  F field = [] {
    if constexpr (std::is_same_v<F, PrimeField>) {
      return PrimeField(7);
    } else {
      return RationalField{};
    }
  }();
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    // small entries make rank deficiency common
    auto m = random_matrix(field, rows, cols, rng, -1, 1);
    if (trial % 3 == 0 && rows > 1) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = field.add(m(0, c), m(1 % rows, c));
    }
    const auto r = rank(m);
    CHECK(r == rank(m.transpose()));
    auto kb = kernel_basis(m);
    CHECK(r + kb.rows() == cols);
    for (std::size_t i = 0; i < kb.rows(); ++i) {
      for (const auto& x : m.apply(kb.row(i))) CHECK(field.is_zero(x));
    }
    auto e = rref(m);
    auto again = rref(e.reduced);
    CHECK(again.reduced == e.reduced);
    CHECK(again.pivot_cols == e.pivot_cols);
    CHECK(std::is_sorted(e.pivot_cols.begin(), e.pivot_cols.end()));
    for (std::size_t i = 0; i < rows; ++i) CHECK(in_row_space<F>(m.row(i), e.reduced));
    CHECK(row_space_basis(m).rows() == r);
    if constexpr (std::is_same_v<F, PrimeField>) {
      std::vector<oracle::Row> plain;
      for (std::size_t i = 0; i < rows; ++i) plain.emplace_back(m.row(i).begin(), m.row(i).end());
      CHECK(oracle::rank(plain, 7) == r);
    }
  }
}

TEST_CASE("incremental echelon builder") {
  PrimeField f(11);
  EchelonBuilder<PrimeField> b(f, 3);
  std::vector<std::uint32_t> a{1, 2, 3}, twice{2, 4, 6}, c{0, 1, 0};
  CHECK(b.insert(a));
  CHECK_FALSE(b.insert(twice));
  CHECK(b.rank() == 1);
  CHECK(b.insert(c));
  CHECK(b.contains(std::vector<std::uint32_t>{1, 3, 3}));
  b.pop_back();
  CHECK(b.rank() == 1);
  CHECK_FALSE(b.contains(c));
  CHECK(b.contains(twice));
}

TEST_CASE("binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK_THROWS_AS(binomial(200, 100), Error);
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(0, 0) == 1);
}

TEST_CASE("generator reproducibility") {
  std::uint64_t s = 0;
  CHECK(splitmix64(s) == 0xE220A8397B1DCDAFULL);
  Rng a(5), b(5), c(6);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  Rng r(9);
  std::vector<int> counts(3, 0);
  for (int i = 0; i < 3000; ++i) {
    auto v = r.below(3);
    REQUIRE(v < 3);
    ++counts[v];
  }
  for (int cnt : counts) CHECK(cnt > 800);
  for (int i = 0; i < 200; ++i) {
    auto v = r.between(-2, 2);
    CHECK(v >= -2);
    CHECK(v <= 2);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 3) == derive_seed(1, 3));
}
