#include <doctest.h>

#include <algorithm>

#include "milnor/cyclotomic.hpp"
#include "milnor/zeta.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace milnor;

namespace {
const std::vector<std::string> XYZ{"x", "y", "z"};
MultiPolynomial P(const std::string& s, const std::vector<std::string>& v = XYZ) { return parse_polynomial(s, v); }
CyclotomicProduct Z(const std::string& s) { return parse_zeta(s); }
const char* kSexticTotal = "(1-t^6)^-9 (1-t^21)^6 (1-t^14)^6 (1-t^42)^-6 (1-t^7)^-6";
}  // namespace

TEST_CASE("products of cyclotomic factors") {
  CHECK(zp_mul(Z("(1-t^2)"), Z("(1-t^2)^-1")).is_one());
  CHECK(zp_pow(Z("(1-t^4)^-1"), 3) == Z("(1-t^4)^-3"));
  CHECK(zp_mul(Z("(1-t^6)(1-t^3)^-1"), Z("(1-t^2)^-1")) == Z("(1-t^6)(1-t^2)^-1(1-t^3)^-1"));
  CHECK(zp_inv(Z("(1-t^5)^2")) == Z("(1-t^5)^-2"));
}

TEST_CASE("degree and Milnor number") {
  CHECK(degree(Z("(1-t^4)^-3")) == -12);
  CHECK(degree(Z("1")) == 0);
  CHECK(degree(Z(kSexticTotal)) == -138);
  CHECK(milnor_from_zeta(Z("(1-t^4)^-3"), 3) == 11);
  CHECK(milnor_from_zeta(Z("(1-t^6)(1-t^2)^-1(1-t^3)^-1"), 2) == 2);
  CHECK(milnor_from_zeta(Z(kSexticTotal), 3) == 137);
  CHECK_THROWS_AS(milnor_from_zeta(Z("(1-t^3)^2"), 3), InconsistencyError);
}

TEST_CASE("rendering") {
  CHECK(render_zeta(Z("(1-t^4)^-3")) == "(1-t^4)^-3");
  CHECK(render_zeta(CyclotomicProduct{}) == "1");
  CHECK(render_zeta(Z("(1-t^6)^-21 (1-t^6)^12")) == "(1-t^6)^-9");
  CHECK(Z(render_zeta(Z(kSexticTotal))) == Z(kSexticTotal));
  CHECK_THROWS_AS(Z("(1-s^2)"), ParseError);
}

TEST_CASE("power series of a product") {
  // (1-t^2)^-1 = 1 + t^2 + t^4 + ...
  auto s = zeta_series(Z("(1-t^2)^-1"), 5);
  CHECK(s == std::vector<BigInt>{1, 0, 1, 0, 1, 0});
}

TEST_CASE("Varchenko formula on worked cases") {
  CHECK(varchenko_zeta(P("(x-y)^2+y^3", {"x", "y"})).is_one());
  CHECK(varchenko_zeta(P("x^3+y^3+z^3-3*x*y*z+z^4")) == Z("(1-t^3)^-3"));
  CHECK(varchenko_zeta(P("w3^6*(w1^3+w2^2+w3)", {"w1", "w2", "w3"})) == Z("(1-t^21)(1-t^14)(1-t^42)^-1(1-t^7)^-1"));
  CHECK(varchenko_zeta(P("x^6+y^6+z^6")) == Z("(1-t^6)^-21"));
  CHECK(varchenko_zeta(P("x^2+y^2+z^2")) == Z("(1-t^2)^-1"));
}

TEST_CASE("single subset factors") {
  const std::vector<std::string> u{"u1", "u2"};
  auto pulled = P("u1^3+u1^2*u2^2", u);
  CHECK(zeta_subset(pulled, {0}) == Z("(1-t^3)^-1"));
  CHECK(zeta_subset(pulled, {0, 1}) == Z("(1-t^6)"));
  CHECK(zeta_subset(P("x^2+z^7"), {2}) == Z("(1-t^7)^-1"));
}

TEST_CASE("nodal cone characteristic polynomial") {
  CHECK(char_poly_top_nodal(6, 0).top_char_poly == Z("(1-t^6)^21(1-t)^-1"));
  CHECK(char_poly_top_nodal(3, 1).top_char_poly == Z("(1-t^3)^2(1-t)^-1"));
  for (long long d = 3; d <= 8; ++d)
    for (long long k = 0; k <= std::min(3LL, (d - 1) * (d - 2) / 2); ++k) CHECK(degree(char_poly_top_nodal(d, k).zeta) == -d * (d * d - 3 * d + 3 - k));
}

TEST_CASE("nodal cone input range") {
  CHECK_THROWS_AS(char_poly_top_nodal(2, 0), DomainError);
  CHECK_THROWS_AS(char_poly_top_nodal(3, 2), DomainError);
}

TEST_CASE("homogeneous baseline") {
  for (long long d = 2; d <= 9; ++d) {
    const std::string s = "x^" + std::to_string(d) + "+y^" + std::to_string(d) + "+z^" + std::to_string(d);
    auto z = varchenko_zeta(P(s));
    CHECK(z == CyclotomicProduct::factor(d, -(d * d - 3 * d + 3)));
    CHECK(milnor_from_zeta(z, 3) == (d - 1) * (d - 1) * (d - 1));
  }
}

TEST_CASE("Varchenko formula matches Milnor-Orlik on weighted homogeneous germs") {
  auto r = props::varchenko_matches_milnor_orlik(3, 60);
  INFO(r.summary());
  CHECK(r.ok(60));
}
