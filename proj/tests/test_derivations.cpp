#include <catch2/catch_amalgamated.hpp>

#include "folres/foliation.hpp"
#include "folres/parse.hpp"
#include "helpers.hpp"

using namespace folres;
using folres::testing::make_rng;
using folres::testing::random_poly;

namespace {

RingPtr rxy(std::uint32_t p = 5) { return Ring::make(p, {"x", "y"}); }
RingPtr rxyz(std::uint32_t p = 5) { return Ring::make(p, {"x", "y", "z"}); }
Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

Derivation make_derivation(const RingPtr& r, const std::vector<std::string>& coeffs) {
  std::vector<Poly> cs;
  for (const auto& s : coeffs) cs.push_back(parse_poly(r, s));
  return Derivation(QuotientRing(r), std::move(cs));
}

/// Independent oracle: D applied `times` times in sequence.
Poly iterated_apply(const Derivation& d, Poly f, unsigned times) {
  for (unsigned i = 0; i < times; ++i) f = d.apply(f);
  return f;
}

}  // namespace

TEST_CASE("apply on the named examples") {
  auto r = rxy();
  auto d = make_derivation(r, {"x", "3*y"});
  // Euler-type identity: (x dx + 3y dy)(x^a y^b) = (a + 3b) x^a y^b
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b) {
      Poly m = Poly::monomial(r, {a, b}, Fp(1, 5));
      CHECK(d.apply(m) == m * Fp(a + 3 * b, 5));
    }
  CHECK(make_derivation(r, {"1", "0"}).apply(P(r, "y")).is_zero());
}

TEST_CASE("apply reduces in quotient rings") {
  auto r = Ring::make(2, {"u", "v", "w", "t"});
  QuotientRing q(r, Ideal(r, {P(r, "t^2 - u*v")}));
  Derivation tdt(q, {P(r, "0"), P(r, "0"), P(r, "0"), P(r, "t")});
  CHECK(tdt.apply(P(r, "t^2")).is_zero());  // 2 t^2 = 0 in char 2
}

TEST_CASE("derivations on quotient rings must preserve the relations") {
  auto r = Ring::make(5, {"u", "v", "t"});
  QuotientRing q(r, Ideal(r, {P(r, "t^2 - u*v")}));
  // t dt sends t^2 - uv to 2t^2, not in the ideal when p = 5
  CHECK_THROWS_AS(Derivation(q, {P(r, "0"), P(r, "0"), P(r, "t")}), UnsupportedInputError);
  Derivation ok(q, {P(r, "u"), P(r, "v"), P(r, "t")});
  CHECK(ok.apply(P(r, "t^2 - u*v")).is_zero());
}

TEST_CASE("lie_bracket on the named examples") {
  auto r = rxy();
  auto dx = make_derivation(r, {"1", "0"});
  auto xdx = make_derivation(r, {"x", "0"});
  CHECK(lie_bracket(dx, xdx) == dx);
  auto ydy = make_derivation(r, {"0", "y"});
  CHECK(lie_bracket(xdx, ydy).is_zero());
  auto r3 = rxyz();
  auto dz = make_derivation(r3, {"0", "0", "1"});
  auto diag = make_derivation(r3, {"x", "3*y", "0"});
  CHECK(lie_bracket(dz, diag).is_zero());
}

TEST_CASE("Leibniz rule holds on random inputs") {
  auto rng = make_rng(10);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = Ring::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 20; ++trial) {
      Derivation d(QuotientRing(r), {random_poly(rng, r, 2, 3), random_poly(rng, r, 2, 3),
                                     random_poly(rng, r, 2, 3)});
      Poly f = random_poly(rng, r, 3, 3), g = random_poly(rng, r, 3, 3);
      CHECK(d.apply(f * g) == f * d.apply(g) + g * d.apply(f));
    }
  }
}

TEST_CASE("p_power on the named examples") {
  auto r = rxy();
  CHECK(p_power(make_derivation(r, {"1", "0"})).is_zero());
  auto diag = make_derivation(r, {"x", "3*y"});
  CHECK(p_power(diag) == diag);
  auto r1 = Ring::make(2, {"x"});
  auto d = Derivation(QuotientRing(r1), {P(r1, "x^2")});
  CHECK(p_power(d).is_zero());
}

TEST_CASE("p_power agrees with iterated composition on random derivations") {
  auto rng = make_rng(11);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = Ring::make(p, {"x", "y"});
    for (int trial = 0; trial < 12; ++trial) {
      Derivation d(QuotientRing(r), {random_poly(rng, r, 2, 2), random_poly(rng, r, 2, 2)});
      Derivation dp = p_power(d);
      for (std::size_t i = 0; i < r->nvars(); ++i) {
        Poly xi = Poly::variable(r, i);
        CHECK(dp.coeffs()[i] == iterated_apply(d, xi, p));
      }
    }
  }
}

TEST_CASE("closure checks on the named examples") {
  auto r = rxy();
  FoliationPresentation f1({make_derivation(r, {"x", "3*y"})});
  CHECK(is_involutive(f1));
  CHECK(is_p_closed(f1));

  auto r3 = rxyz();
  FoliationPresentation f2(
      {make_derivation(r3, {"0", "0", "1"}), make_derivation(r3, {"x", "3*y", "0"})});
  CHECK(is_involutive(f2));
  CHECK(is_p_closed(f2));

  auto r2f2 = rxy(2);
  FoliationPresentation f3({make_derivation(r2f2, {"y", "0"})});
  CHECK(is_involutive(f3));
  CHECK(is_p_closed(f3));

  // [dx, x dy] = dy, not in <x dy, dx>: bracket closure fails
  FoliationPresentation f5(
      {make_derivation(rxy(3), {"0", "x"}), make_derivation(rxy(3), {"1", "0"})});
  CHECK_FALSE(is_involutive(f5));
}

TEST_CASE("generic_rank on the named examples") {
  auto r = rxy();
  CHECK(generic_rank(FoliationPresentation({make_derivation(r, {"x", "3*y"})})) == 1);
  auto r3 = rxyz();
  CHECK(generic_rank(FoliationPresentation(
            {make_derivation(r3, {"0", "0", "1"}), make_derivation(r3, {"x", "3*y", "0"})})) == 2);
  CHECK(generic_rank(FoliationPresentation(
            {make_derivation(r, {"x", "0"}), make_derivation(r, {"x", "0"})})) == 1);
}

TEST_CASE("singular_ideal on the named examples") {
  auto r = rxy();
  Ideal s1 = singular_ideal(FoliationPresentation({make_derivation(r, {"x", "3*y"})}));
  CHECK(s1.same_ideal_as(Ideal(r, {P(r, "x"), P(r, "y")})));

  Ideal s2 = singular_ideal(FoliationPresentation({make_derivation(r, {"1", "0"})}));
  CHECK(s2.is_unit());

  auto r3 = rxyz();
  Ideal s3 = singular_ideal(FoliationPresentation(
      {make_derivation(r3, {"0", "0", "1"}), make_derivation(r3, {"x", "3*y", "0"})}));
  CHECK(s3.same_ideal_as(Ideal(r3, {P(r3, "x"), P(r3, "y")})));
}

TEST_CASE("singular_ideal is invariant under invertible recombination") {
  auto r3 = rxyz();
  auto d1 = make_derivation(r3, {"x^2", "y", "z"});
  auto d2 = make_derivation(r3, {"0", "x*y", "1"});
  FoliationPresentation f({d1, d2});
  Ideal s = singular_ideal(f);
  CHECK(singular_ideal(FoliationPresentation({d2, d1})).same_ideal_as(s));
  for (std::uint32_t c = 1; c < 5; ++c) {
    FoliationPresentation g({d1 * Fp(c, 5), d2 * Fp(c == 4 ? 1 : c + 1, 5)});
    CHECK(singular_ideal(g).same_ideal_as(s));
  }
  FoliationPresentation h({d1, d2 + d1 * P(r3, "x")});
  CHECK(singular_ideal(h).same_ideal_as(s));
}

TEST_CASE("saturate_rank_one on the named examples") {
  auto r = rxy();
  SECTION("x' dx' saturates to dx'") {
    auto d = make_derivation(r, {"x", "0"});
    CHECK(saturate_rank_one(d) == make_derivation(r, {"1", "0"}));
  }
  SECTION("content-free diagonal derivation is unchanged") {
    auto d = make_derivation(r, {"x", "3*y"});
    CHECK(saturate_rank_one(d) == d);
  }
  SECTION("gcd = xy is extracted") {
    auto d = make_derivation(r, {"x^2*y", "x*y^2"});
    CHECK(saturate_rank_one(d) == make_derivation(r, {"x", "y"}));
  }
  SECTION("zero derivation is rejected") {
    CHECK_THROWS_AS(saturate_rank_one(make_derivation(r, {"0", "0"})), std::invalid_argument);
  }
}

TEST_CASE("saturate_rank_one output is content-free and regenerates the input") {
  auto rng = make_rng(13);
  auto r = rxy(3);
  for (int trial = 0; trial < 15; ++trial) {
    Poly content = folres::testing::random_nonzero_poly(rng, r, 2, 2);
    Poly a = random_poly(rng, r, 2, 2), b = random_poly(rng, r, 2, 2);
    if (a.is_zero() && b.is_zero()) continue;
    Derivation d(QuotientRing(r), {content * a, content * b});
    if (d.is_zero()) continue;
    Derivation s = saturate_rank_one(d);
    std::vector<Poly> nz;
    for (const auto& c : s.coeffs())
      if (!c.is_zero()) nz.push_back(c);
    CHECK(poly_gcd(nz).is_constant());
    auto member = module_membership(d.coeffs(), {s.coeffs()});
    CHECK(member.has_value());
  }
}

TEST_CASE("poly_gcd is a correct multivariate gcd") {
  auto r = rxy();
  CHECK(poly_gcd(P(r, "x^2*y"), P(r, "x*y^2")) == P(r, "x*y"));
  CHECK(poly_gcd(P(r, "x"), P(r, "y")).is_constant());
  CHECK(poly_gcd(P(r, "(x+y)^2*x"), P(r, "(x+y)*y")) == P(r, "x + y"));
  CHECK(poly_gcd(Poly::zero(r), P(r, "2*x")) == P(r, "x"));
}
