#include <random>

#include "doctest.h"
#include "wexp/cycnum.hpp"
#include "wexp/finite_field.hpp"
#include "wexp/qpoly.hpp"

using namespace wexp;

namespace {

QPoly random_poly(std::mt19937_64& rng, int max_deg, bool laurent = false) {
  const int deg = static_cast<int>(rng() % (max_deg + 1));
  const int low = laurent ? -static_cast<int>(rng() % 3) : 0;
  std::vector<std::pair<int, mpz_class>> terms;
  for (int e = low; e <= deg; ++e) terms.push_back({e, mpz_class(static_cast<long>(rng() % 41) - 20)});
  return QPoly::from_terms(terms, laurent);
}

CycNum random_cyc(std::mt19937_64& rng, const FiniteField& F) {
  CycNum x(F.p(), F.q(), 0);
  for (int i = 0; i < 4; ++i)
    x += CycNum::psi(F, static_cast<int>(rng() % F.q())).mul_int(static_cast<long>(rng() % 11) - 5);
  return x.div_q_pow(static_cast<int>(rng() % 3));
}

const QPoly q = QPoly::q();

}  // namespace

TEST_CASE("exact division") {
  CHECK(qpoly_exact_div(q * q - QPoly(1), q - QPoly(1)) == q + QPoly(1));
  const QPoly a = q * q + q + QPoly(1);
  CHECK(qpoly_exact_div(a * (q - QPoly(2)), q - QPoly(2)) == a);
  CHECK_THROWS_AS(qpoly_exact_div(q, q - QPoly(1)), DivisionNotExact);
  try {
    qpoly_exact_div(q, q - QPoly(1));
  } catch (const DivisionNotExact& e) {
    CHECK(e.remainder == QPoly(1));
  }
}

TEST_CASE("interpolation examples") {
  CHECK(qpoly_interpolate({{2, 1}, {3, 2}, {5, 4}}, 1) == q - QPoly(1));
  std::vector<std::pair<long, mpz_class>> s;
  for (long x : {2, 3, 4, 5}) s.push_back({x, mpz_class(x * (x - 1))});
  CHECK(qpoly_interpolate(s, 2) == q * q - q);
  CHECK_THROWS_AS(qpoly_interpolate({{2, 1}, {3, 2}, {5, 5}}, 1), Inconsistent);
  CHECK_THROWS_AS(qpoly_interpolate({{0, 0}, {2, 1}}, 1), NonIntegral);
}

TEST_CASE("interpolation round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const QPoly p = random_poly(rng, 8);
    std::vector<std::pair<long, mpz_class>> s;
    for (long x = 2; x <= 10; ++x) s.push_back({x, p.specialize(x)});
    CHECK(qpoly_interpolate(s, 8) == p);
  }
}

TEST_CASE("ring axioms and specialization") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const bool l = t % 2;
    const QPoly a = random_poly(rng, 6, l), b = random_poly(rng, 6, l), c = random_poly(rng, 6, l);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == QPoly());
    if (!l) {
      const long x = static_cast<long>(rng() % 9) - 4;
      CHECK((a * b).specialize(x) == a.specialize(x) * b.specialize(x));
      CHECK((a + b).specialize(x) == a.specialize(x) + b.specialize(x));
    }
  }
}

TEST_CASE("qpoly serialization") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const QPoly a = random_poly(rng, 5, t % 2);
    CHECK(QPoly::from_json(a.to_json()) == a);
  }
  const nlohmann::json j = (q - QPoly(2)).to_json();
  CHECK(j.at("laurent") == false);
  CHECK(j.at("terms").size() == 2);
  const QPoly big = QPoly::from_terms({{3, mpz_class("123456789012345678901234567890")}});
  CHECK(QPoly::from_json(big.to_json()) == big);
}

TEST_CASE("counting positivity from q = 2") {
  CHECK((q - QPoly(1)).shift_var(2) == q + QPoly(1));
  CHECK((q - QPoly(1)).nonnegative_from_two());
  CHECK((q - QPoly(2)).nonnegative_from_two());
  CHECK((q * q * q - q * q).nonnegative_from_two());
  CHECK_FALSE((q - QPoly(3)).nonnegative_from_two());
  CHECK_FALSE(QPoly(-1).nonnegative_from_two());
}

TEST_CASE("finite fields") {
  for (int qq : {2, 3, 4, 5, 7, 8, 9, 25, 49}) {
    REQUIRE(FiniteField::is_supported(qq));
    const FiniteField F(qq);
    int order = 1;
    for (int x = F.primitive(); x != 1; x = F.mul(x, F.primitive())) ++order;
    CHECK(order == qq - 1);
    for (int a = 1; a < qq; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    for (int a = 0; a < qq; ++a)
      for (int b = 0; b < qq; ++b) {
        CHECK(F.trace(F.add(a, b)) == (F.trace(a) + F.trace(b)) % F.p());
        CHECK(F.add(F.sub(a, b), b) == a);
      }
  }
  CHECK_FALSE(FiniteField::is_supported(6));
  CHECK_FALSE(FiniteField::is_supported(1));
}

TEST_CASE("additive character") {
  const FiniteField F3(3);
  CHECK(CycNum::psi(F3, 0) == CycNum(3, 3, 1));
  CHECK(CycNum::psi(F3, 1) * CycNum::psi(F3, 2) == CycNum(3, 3, 1));
  for (int qq : {2, 3, 4, 5, 7, 8, 9}) {
    const FiniteField F(qq);
    CycNum sum(F.p(), qq, 0);
    bool nontrivial = false;
    for (int a = 0; a < qq; ++a) {
      sum += CycNum::psi(F, a);
      nontrivial = nontrivial || CycNum::psi(F, a) != CycNum(F.p(), qq, 1);
      for (int b = 0; b < qq; ++b) CHECK(CycNum::psi(F, F.add(a, b)) == CycNum::psi(F, a) * CycNum::psi(F, b));
    }
    CHECK(sum.is_zero());
    CHECK(nontrivial);
  }
}

TEST_CASE("cyclotomic ring axioms") {
  std::mt19937_64 rng(5);
  for (int qq : {3, 4, 5, 7}) {
    const FiniteField F(qq);
    for (int t = 0; t < 50; ++t) {
      const CycNum a = random_cyc(rng, F), b = random_cyc(rng, F), c = random_cyc(rng, F);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
    }
  }
  mpz_class v;
  CHECK(CycNum(5, 5, 25).div_q_pow(2).is_integer(&v));
  CHECK(v == 1);
  CHECK_FALSE(CycNum(5, 5, 1).div_q_pow(1).is_integer());
  CHECK(CycNum(5, 5, 7).div_q_pow(1).mul_int(5) == CycNum(5, 5, 7));
}

TEST_CASE("cyclotomic base must be prime") {
  CHECK_THROWS_AS(CycNum(4, 4, 1), ConfigError);
  CHECK_THROWS_AS(CycNum(3, 4, 1), ConfigError);
}
