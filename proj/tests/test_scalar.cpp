#include <doctest.h>

#include <limits>
#include <random>

#include "hopfkit/scalar.hpp"

using namespace hopfkit;

namespace {

Rational from_mpq(const mpq_class& q) { return Rational(q); }

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP, including past int64") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> small(-1000, 1000);
  std::uniform_int_distribution<long long> huge(std::numeric_limits<long long>::min() / 2,
                                                std::numeric_limits<long long>::max() / 2);
  for (int i = 0; i < 2000; ++i) {
    auto pick = [&]() { return i % 3 == 0 ? huge(rng) : small(rng); };
    long long an = pick(), ad = pick(), bn = pick(), bd = pick();
    if (ad == 0) ad = 1;
    if (bd == 0) bd = 3;
    mpq_class qa(mpz_class(std::to_string(an)), mpz_class(std::to_string(ad)));
    mpq_class qb(mpz_class(std::to_string(bn)), mpz_class(std::to_string(bd)));
    qa.canonicalize();
    qb.canonicalize();
    Rational a = from_mpq(qa), b = from_mpq(qb);
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (qb != 0) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a == b) == (qa == qb));
    CHECK((a < b) == (qa < qb));
  }
}

TEST_CASE("canonical strings round-trip") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational::parse("-3/2") == Rational(-3, 2));
  CHECK(Rational::parse("4") == Rational(4));
  CHECK(Rational::parse("10/4").str() == "5/2");
  Rational big = Rational(std::numeric_limits<long long>::max()) * Rational(3);
  CHECK(Rational::parse(big.str()) == big);
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("x"), InputError);
}

TEST_CASE("GF(p) arithmetic agrees with integer residues") {
  for (long long p : {2LL, 3LL, 7LL, 101LL}) {
    Field f = Field::prime(p);
    for (long long a = 0; a < std::min(p, 20LL); ++a)
      for (long long b = 0; b < std::min(p, 20LL); ++b) {
        CHECK(f.add(Scalar(a), Scalar(b)) == Scalar((a + b) % p));
        CHECK(f.mul(Scalar(a), Scalar(b)) == Scalar((a * b) % p));
        CHECK(f.sub(Scalar(a), Scalar(b)) == Scalar(((a - b) % p + p) % p));
        if (b != 0) CHECK(f.mul(f.div(Scalar(a), Scalar(b)), Scalar(b)) == Scalar(a));
      }
    if (p != 2) {
      CHECK(f.from_rational(Rational(1, 2)) == f.inv(Scalar(2)));
    } else {
      CHECK_THROWS_AS(f.from_rational(Rational(1, 2)), DomainError);
    }
  }
  CHECK_THROWS_AS(Field::prime(1), InputError);
  CHECK_THROWS_AS(Field::prime(91), InputError);
  CHECK_THROWS_AS(Field::prime(5).parse("7"), InputError);
}
