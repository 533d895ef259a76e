#include <gmpxx.h>

#include "doctest.h"
#include "support.hpp"

using namespace pdtensor;

namespace {

PolyRingPtr qq(std::vector<std::string> vars) { return PolyRing::make(Field::rationals(), std::move(vars)); }

FieldScalar random_scalar(const Field& f, SeededRng& rng) {
  const std::int64_t num = rng.uniform(-40, 40);
  const std::int64_t den = rng.uniform(1, 17);
  if (!f.is_rational()) return FieldScalar::from_int(f, num);
  return FieldScalar::from_rational(f, mpq_class(num, den));
}

Polynomial random_poly(const PolyRingPtr& ring, SeededRng& rng) {
  std::vector<Term> terms;
  const int n = static_cast<int>(rng.uniform(0, 4));
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(ring->nvars());
    for (auto& x : e) x = static_cast<int>(rng.uniform(0, 3));
    terms.push_back({Monomial(e), random_scalar(ring->field(), rng)});
  }
  return Polynomial(ring, std::move(terms));
}

Monomial random_mono(std::size_t n, SeededRng& rng) {
  std::vector<int> e(n);
  for (auto& x : e) x = static_cast<int>(rng.uniform(0, 3));
  return Monomial(e);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  const Field q = Field::rationals();
  auto a = FieldScalar::from_rational(q, mpq_class(1, 3));
  auto b = FieldScalar::from_rational(q, mpq_class(2, 6));
  CHECK(a == b);
  CHECK((a + a + a).is_one());
  CHECK((a * a.inverse()).is_one());
  CHECK((a - b).is_zero());
  CHECK(a.to_string() == "1/3");
  CHECK_THROWS_AS(FieldScalar::zero(q).inverse(), AlgebraError);
}

TEST_CASE("rationals promote to GMP without losing exactness") {
  const Field q = Field::rationals();
  auto big = FieldScalar::from_int(q, std::int64_t{1} << 62);
  auto sq = big * big;
  mpq_class expect = mpq_class(mpz_class(1) << 124);
  CHECK(sq.to_mpq() == expect);
  CHECK((sq / big) == big);
  CHECK((sq - sq).is_zero());
}

TEST_CASE("prime field arithmetic") {
  const Field f7 = Field::prime(7);
  auto three = FieldScalar::from_int(f7, 3);
  CHECK((three * three.inverse()).is_one());
  CHECK(FieldScalar::from_int(f7, -1) == FieldScalar::from_int(f7, 6));
  CHECK(FieldScalar::from_int(f7, 14).is_zero());
  CHECK_THROWS_AS(Field::prime(8), AlgebraError);
  CHECK_THROWS_AS(three + FieldScalar::one(Field::rationals()), AlgebraError);
}

TEST_CASE("field axioms on seeded random scalars") {
  for (const Field& f : {Field::rationals(), Field::prime(101)}) {
    SeededRng rng(11);
    for (int t = 0; t < 300; ++t) {
      auto a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK(((a + b) + c) == (a + (b + c)));
      CHECK(((a * b) * c) == (a * (b * c)));
      CHECK((a * (b + c)) == (a * b + a * c));
      CHECK((a + b) == (b + a));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      if (!b.is_zero()) CHECK(((a / b) * b) == a);
    }
  }
}

TEST_CASE("polynomial multiplication examples") {
  auto S = qq({"x", "y"});
  auto p = parse_polynomial(S, "x+y") * parse_polynomial(S, "x-y");
  CHECK(p == parse_polynomial(S, "x^2 - y^2"));
  CHECK((p * Polynomial(S)).is_zero());
  auto F2 = PolyRing::make(Field::prime(2), {"x", "y"});
  auto s = parse_polynomial(F2, "x+y");
  CHECK(s * s == parse_polynomial(F2, "x^2 + y^2"));
}

TEST_CASE("homogeneous degree sentinel") {
  auto S = qq({"x", "y", "z"});
  auto d = parse_polynomial(S, "x*y - z^2").homogeneous_degree();
  CHECK(d.kind == HomogeneousDegree::Kind::kDegree);
  CHECK(d.degree == 2);
  CHECK(parse_polynomial(S, "x^2 + y").homogeneous_degree().kind == HomogeneousDegree::Kind::kInhomogeneous);
  CHECK(Polynomial(S).homogeneous_degree().kind == HomogeneousDegree::Kind::kAnyDegree);
}

TEST_CASE("monomial order examples") {
  MonomialOrder grevlex;
  CHECK(monomial_compare(grevlex, Monomial{2, 0}, Monomial{1, 1}) == Ordering::kGreater);
  CHECK(monomial_compare(grevlex, Monomial{1, 0}, Monomial{0, 2}) == Ordering::kLess);
  MonomialOrder lex(MonomialOrder::Kind::kLex);
  CHECK(monomial_compare(lex, Monomial{1, 0}, Monomial{0, 2}) == Ordering::kGreater);
  CHECK(monomial_compare(lex, Monomial{1, 3}, Monomial{1, 3}) == Ordering::kEqual);
  CHECK_THROWS_AS(grevlex.compare(Monomial{1}, Monomial{1, 0}), AlgebraError);
}

TEST_CASE("monomial order is antisymmetric, transitive and multiplicative") {
  SeededRng rng(5);
  for (const MonomialOrder& o : {MonomialOrder(), MonomialOrder(MonomialOrder::Kind::kLex)}) {
    for (int t = 0; t < 500; ++t) {
      auto a = random_mono(3, rng), b = random_mono(3, rng), c = random_mono(3, rng);
      CHECK(o.compare(a, b) == -o.compare(b, a));
      if (o.compare(a, b) < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
      CHECK((o.compare(a, b) < 0) == (o.compare(a * c, b * c) < 0));
    }
  }
}

TEST_CASE("polynomial ring laws on seeded random triples") {
  auto S = qq({"x", "y", "z"});
  SeededRng rng(3);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(S, rng), b = random_poly(S, rng), c = random_poly(S, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(Polynomial(S, a.terms()) == a);
    CHECK(parse_polynomial(S, a.to_string()) == a);
  }
}

TEST_CASE("parser accepts rationals and parentheses and reports columns") {
  auto S = qq({"x", "y"});
  CHECK(parse_polynomial(S, "3/2*x^2 - (x+y)*y") == parse_polynomial(S, "3/2*x^2 - x*y - y^2"));
  CHECK(parse_polynomial(S, "2*x").to_string() == "2*x");
  try {
    parse_polynomial(S, "x + q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("monomials cap the variable count") {
  CHECK_THROWS_AS(Monomial(9), AlgebraError);
  CHECK(Monomial{1, 2}.lcm(Monomial{2, 1}) == Monomial{2, 2});
  CHECK(Monomial{1, 0}.divides(Monomial{2, 1}));
  CHECK_FALSE(Monomial{0, 2}.divides(Monomial{2, 1}));
}
