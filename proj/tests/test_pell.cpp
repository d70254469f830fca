#include <doctest.h>

#include "oracles.hpp"
#include "pell3/errors.hpp"
#include "pell3/pell.hpp"

using namespace pell3;

namespace {

using Coeffs = std::vector<BigInteger>;

oracle::Dense oracle_family(Family f, long n) {
  switch (f) {
    case Family::r:
      return oracle::dense_recurrence({}, {1}, {0, 2}, n);
    case Family::s:
      return oracle::dense_recurrence({}, {2}, {0, 2}, n);
    case Family::sigma:
      return oracle::dense_recurrence({3}, {0, 2}, {0, 0, 4}, n);
  }
  return {};
}

}  // namespace

TEST_CASE("recurrence_gen examples") {
  CHECK(recurrence_gen(Family::r, 18).coeffs == Coeffs{131072, 245760, 159744, 42240, 4032, 84});
  CHECK(recurrence_gen(Family::sigma, 0).coeffs == Coeffs{3});
  CHECK(render_plain(recurrence_gen(Family::s, 4)) == "8x^3+2");
  // 2x(8x^3 + 1) + 2x.
  CHECK(render_plain(recurrence_gen(Family::r, 5)) == "16x^4+4x");
  CHECK(recurrence_gen(Family::r, 0).coeffs.empty());
  CHECK_THROWS_AS(recurrence_gen(Family::r, -1), DomainError);
}

TEST_CASE("initial values") {
  const auto r = initial_values(Family::r);
  CHECK(render_plain(r[0]) == "0");
  CHECK(render_plain(r[1]) == "1");
  CHECK(render_plain(r[2]) == "2x");
  const auto s = initial_values(Family::s);
  CHECK(render_plain(s[0]) == "0");
  CHECK(render_plain(s[1]) == "2");
  CHECK(render_plain(s[2]) == "2x");
  const auto sigma = initial_values(Family::sigma);
  CHECK(render_plain(sigma[0]) == "3");
  CHECK(render_plain(sigma[1]) == "2x");
  CHECK(render_plain(sigma[2]) == "4x^2");
}

TEST_CASE("recurrence_gen matches a dense-vector recurrence") {
  for (Family f : {Family::r, Family::s, Family::sigma}) {
    for (long n = 0; n <= 60; ++n) {
      INFO(family_name(f) << "_" << n);
      CHECK(to_dense(recurrence_gen(f, n)).coeffs() == oracle_family(f, n));
    }
  }
}

TEST_CASE("closed_form examples") {
  CHECK(render_plain(closed_form(Family::r, 4)) == "8x^3+1");
  CHECK(render_plain(closed_form(Family::s, 3)) == "4x^2");
  CHECK(render_plain(closed_form(Family::sigma, 3)) == "8x^3+3");
  CHECK(closed_form(Family::r, 0).coeffs.empty());
  CHECK(closed_form(Family::s, 2).coeffs == Coeffs{2});
  CHECK(closed_form(Family::sigma, 1).coeffs == Coeffs{2});
}

TEST_CASE("closed_form rejects indices below its validity threshold") {
  CHECK_THROWS_AS(closed_form(Family::s, 1), DomainError);
  CHECK_THROWS_AS(closed_form(Family::s, 0), DomainError);
  CHECK_THROWS_AS(closed_form(Family::sigma, 0), DomainError);
  CHECK_THROWS_AS(closed_form(Family::r, -1), DomainError);
  CHECK(closed_form_min_index(Family::r) == 0);
  CHECK(closed_form_min_index(Family::s) == 2);
  CHECK(closed_form_min_index(Family::sigma) == 1);
}

TEST_CASE("closed_form equals recurrence through n = 300") {
  for (Family f : {Family::r, Family::s, Family::sigma}) {
    const auto rows = coefficient_triangle(f, 300);
    for (long n = closed_form_min_index(f); n <= 300; ++n) {
      INFO(family_name(f) << "_" << n);
      CHECK(closed_form(f, n) == rows[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("degrees and exponent classes") {
  for (Family f : {Family::r, Family::s, Family::sigma}) {
    for (const auto& p : coefficient_triangle(f, 90)) {
      const DensePoly d = to_dense(p);
      if (p.n >= delta(f)) CHECK(d.degree() == p.n - delta(f));
      for (std::size_t e = 0; e < d.coeffs().size(); ++e) {
        if (sgn(d.coeffs()[e]) != 0) CHECK((p.n - delta(f) - static_cast<long>(e)) % 3 == 0);
      }
      // All coefficients of these families are positive.
      for (const auto& c : p.coeffs) CHECK(sgn(c) > 0);
    }
  }
}

TEST_CASE("coefficient_triangle examples") {
  const auto r = coefficient_triangle(Family::r, 4);
  REQUIRE(r.size() == 5);
  CHECK(r[0].coeffs.empty());
  CHECK(r[1].coeffs == Coeffs{1});
  CHECK(r[2].coeffs == Coeffs{2});
  CHECK(r[3].coeffs == Coeffs{4});
  CHECK(r[4].coeffs == Coeffs{8, 1});

  const auto sigma = coefficient_triangle(Family::sigma, 1);
  REQUIRE(sigma.size() == 2);
  CHECK(sigma[0].coeffs == Coeffs{3});
  CHECK(sigma[1].coeffs == Coeffs{2});

  const auto s = coefficient_triangle(Family::s, 2);
  REQUIRE(s.size() == 3);
  CHECK(s[0].coeffs.empty());
  CHECK(s[1].coeffs == Coeffs{2});
  CHECK(s[2].coeffs == Coeffs{2});

  CHECK(coefficient_triangle(Family::r, 0).size() == 1);
  CHECK_THROWS_AS(coefficient_triangle(Family::r, -1), DomainError);
}

TEST_CASE("coefficient_triangle rows equal recurrence_gen") {
  for (Family f : {Family::r, Family::s, Family::sigma}) {
    for (const auto& row : coefficient_triangle(f, 40)) CHECK(row == recurrence_gen(f, row.n));
  }
}

TEST_CASE("triangle exports") {
  const auto rows = coefficient_triangle(Family::r, 4);
  CHECK(triangle_csv(rows) == "n,l,coeff\n1,0,1\n2,0,2\n3,0,4\n4,0,8\n4,1,1\n");
  CHECK(triangle_json(Family::sigma, coefficient_triangle(Family::sigma, 1)) ==
        R"({"family":"sigma","rows":[{"n":0,"coeffs":["3"]},{"n":1,"coeffs":["2"]}]})");
}
