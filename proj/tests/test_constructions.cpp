#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "evalcode/bounds.hpp"
#include "evalcode/combinatorics.hpp"
#include "evalcode/constructions.hpp"
#include "evalcode/distance.hpp"
#include "evalcode/error.hpp"
#include "evalcode/geometry.hpp"
#include "evalcode/invariants.hpp"
#include "support.hpp"

using namespace evalcode;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("fixed configurations") {
  RationalField q;
  auto e34 = published_example("3.4", q);
  CHECK(e34.X.size() == 10);
  CHECK(e34.certificate.ok());
  CHECK(e34.X == support::columns(q, support::g34));
  CHECK(alpha(e34.X) == 4);
  CHECK(hyp_a(e34.X, 1).count == 4);
  CHECK(min_distance(e34.X, 2).d == 3);

  PrimeField f103(103);
  auto e42 = published_example("4.2", f103);
  CHECK(e42.X.size() == 10);
  CHECK(e42.X.k() == 4);
  CHECK(is_general_linear_position(e42.X));
  CHECK(min_distance(e42.X, 1).d == 7);
  CHECK(min_socle_degree(e42.X) == 2);
  CHECK(regularity(e42.X) == 2);

  PrimeField f101(101);
  CHECK(code_of([&] { published_example("4.2", f101); }) == ErrorCode::certificate_mismatch);
  auto unchecked = published_example_unchecked("4.2", f101);
  CHECK_FALSE(unchecked.certificate.ok());
  CHECK(unchecked.certificate.failures().find("glp") != std::string::npos);

  CHECK(code_of([&] { published_example("9.9", q); }) == ErrorCode::unknown_example);
  // coordinates up to 9 collapse over F_7
  CHECK(code_of([&] { published_example("4.2", PrimeField(7)); }) == ErrorCode::certificate_mismatch);
  for (const auto& id : published_example_ids()) {
    CHECK(published_example(id, q).certificate.ok());
    CHECK(published_example(id, PrimeField(1009)).certificate.ok());
  }
}

TEST_CASE("spanning simplex") {
  RationalField q;
  auto s3 = build_spanning_simplex(3, q);
  CHECK(s3.X.size() == 3);
  CHECK(min_distance(s3.X, 1).d == 1);
  auto s4 = build_spanning_simplex(4, PrimeField(5));
  CHECK(s4.X.size() == 4);
  CHECK(alpha(s4.X) == 2);
  auto s5 = build_spanning_simplex(5, PrimeField(7));
  CHECK(hyp_a(s5.X, 1).count == 4);
  CHECK(s5.certificate.ok());
  CHECK(code_of([&] { build_spanning_simplex(2, q); }) == ErrorCode::precondition);
}

TEST_CASE("split configurations") {
  PrimeField f(101);
  auto s3 = build_split_configuration(3, f, 1);
  CHECK(s3.X.size() == 7);
  CHECK(min_distance(s3.X, 1).d == 3);
  CHECK(s3.certificate.ok());
  auto s4 = build_split_configuration(4, f, 2024);
  CHECK(s4.X.size() == 10);
  CHECK(min_distance(s4.X, 1).d == 4);
  CHECK(alpha(s4.X) == 3);
  CHECK(code_of([&] { build_split_configuration(3, PrimeField(2), 1); }) ==
        ErrorCode::construction_failed);
}

TEST_CASE("beta-extremal configurations") {
  RationalField q;
  auto r = build_beta_extremal(3, 4, 4, q, 2024);
  CHECK(r.X.size() == 10);
  CHECK(r.certificate.ok());
  auto d = min_distance(r.X, 1);
  CHECK(d.d == 6);
  CHECK(d.d == static_cast<std::size_t>(beta(4, 3, 1)));

  PrimeField f(1009);
  auto big = build_beta_extremal(3, 5, 13, f, 2024);
  CHECK(big.X.size() == 23);
  CHECK(alpha(big.X) == 5);
  auto db = min_distance(big.X, 1);
  CHECK(db.d == 10);
  // the points off the witness are exactly the affine block Y, listed first
  std::vector<std::size_t> Y(10);
  std::iota(Y.begin(), Y.end(), std::size_t{0});
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < big.X.size(); ++i)
    if (!std::binary_search(db.witness.begin(), db.witness.end(), i)) off.push_back(i);
  CHECK(off == Y);
  auto Ys = big.X.subset(Y);
  CHECK(is_generic_position(Ys));
  CHECK(regularity(Ys) + 1 == alpha(Ys));
  CHECK(alpha(Ys) == 4);

  CHECK(code_of([&] { build_beta_extremal(3, 4, 1, q, 1); }) == ErrorCode::precondition);
  CHECK(code_of([&] { build_beta_extremal(3, 3, 5, q, 1); }) == ErrorCode::precondition);
}

TEST_CASE("conic configuration") {
  PrimeField f(1009);
  auto c = build_conic_configuration(f, 2024);
  CHECK(c.X.size() == 14);
  CHECK(c.certificate.ok());
  CHECK(is_general_linear_position(c.X));
  const auto s = min_socle_degree(c.X);
  CHECK(s == 4);
  auto d2 = min_distance(c.X, 2);
  CHECK(d2.d == 4);
  CHECK(static_cast<std::int64_t>(d2.d) == socle_bound_check(c.X, 2, s).bound);
  auto d3 = min_distance(c.X, 3);
  CHECK(d3.d == 2);
  CHECK(d3.hyp == 12);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    CHECK(code_of([&] { build_conic_configuration(PrimeField(5), seed); }) ==
          ErrorCode::construction_failed);
  }
  CHECK(code_of([&] { build_conic_configuration(PrimeField(2), 1); }) ==
        ErrorCode::construction_failed);
}

TEST_CASE("random point sets") {
  auto X = random_points(3, 5, PrimeField(7), 11);
  CHECK(X.size() == 5);
  auto all = random_points(3, 7, PrimeField(2), 1);
  CHECK(all.size() == 7);
  CHECK(code_of([&] { random_points(3, 8, PrimeField(2), 1); }) ==
        ErrorCode::construction_failed);
  auto g = random_glp_points(4, 10, PrimeField(103), 5);
  CHECK(g.size() == 10);
  CHECK(is_general_linear_position(g));
  auto rq = random_points(3, 12, RationalField{}, 4);
  CHECK(rq.size() == 12);
}

TEST_CASE("seeds determine outputs") {
  PrimeField f(101);
  CHECK(random_points(4, 9, f, 77) == random_points(4, 9, f, 77));
  CHECK_FALSE(random_points(4, 9, f, 77) == random_points(4, 9, f, 78));
  CHECK(build_split_configuration(4, f, 3).X == build_split_configuration(4, f, 3).X);
  CHECK(build_conic_configuration(PrimeField(1009), 9).X ==
        build_conic_configuration(PrimeField(1009), 9).X);
  RationalField q;
  CHECK(build_beta_extremal(3, 4, 5, q, 6).X == build_beta_extremal(3, 4, 5, q, 6).X);
  CHECK(random_points(3, 10, q, 8) == random_points(3, 10, q, 8));
}

TEST_CASE("named constructions") {
  PrimeField f(101);
  ConstructionSpec spec;
  spec.name = "split";
  spec.params["k"] = 4;
  spec.seed = 2024;
  CHECK(construct(spec, f).X == build_split_configuration(4, f, 2024).X);

  ConstructionSpec ex;
  ex.name = "example";
  ex.example = "3.9";
  auto r = construct(ex, RationalField{});
  CHECK(r.X.size() == 7);

  ConstructionSpec missing;
  missing.name = "beta-extremal";
  missing.params["k"] = 3;
  CHECK(code_of([&] { construct(missing, f); }) == ErrorCode::precondition);

  ConstructionSpec bogus;
  bogus.name = "nonsense";
  CHECK_THROWS_AS(construct(bogus, f), Error);
  for (const auto& name : construction_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("certificates") {
  Certificate c;
  c.check("alpha", std::size_t{3}, std::size_t{3});
  CHECK(c.ok());
  c.check("glp", true, false);
  c.check("hf", std::string("1 3"), std::string("1 2"));
  CHECK_FALSE(c.ok());
  CHECK(c.failures() == "glp: expected true, computed false; hf: expected 1 3, computed 1 2");
}
