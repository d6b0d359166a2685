#include <doctest.h>

#include <braidlab/braid_word.hpp>
#include <braidlab/burau.hpp>
#include <braidlab/errors.hpp>
#include <braidlab/random.hpp>

#include "oracles.hpp"

using namespace braidlab;

namespace {

oracle::Mat at_minus_one(const LaurentMatrix& m) {
  return {m(0, 0).evaluate(-1), m(0, 1).evaluate(-1), m(1, 0).evaluate(-1), m(1, 1).evaluate(-1)};
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly ti = LaurentPoly::monomial(1, -1);
  CHECK(t * ti == LaurentPoly(1));
  CHECK((t + 1) * (t - 1) == t * t - 1);
  CHECK((t - t).is_zero());
  CHECK((t * t + t * 3).evaluate(2) == 10);
  CHECK(to_string(LaurentPoly(0)) == "0");
}

TEST_CASE("burau matrices of small words") {
  CHECK(burau_matrix(BraidWord()) == LaurentMatrix::identity());
  const LaurentMatrix s1 = burau_matrix(parse_braid("s1"));
  CHECK(at_minus_one(s1) == oracle::Mat{1, 1, 0, 1});
  CHECK(s1(0, 0).evaluate(1) == -1);
  CHECK(s1(0, 1).evaluate(1) == 1);
  CHECK(s1(1, 0).evaluate(1) == 0);
  CHECK(s1(1, 1).evaluate(1) == 1);
  for (int i = 1; i <= 2; ++i) {
    for (int s : {1, -1}) {
      CHECK(burau_generator(i, s) * burau_generator(i, -s) == LaurentMatrix::identity());
      CHECK(burau_generator(i, s).determinant() == LaurentPoly::monomial(-1, s));
    }
  }
}

TEST_CASE("braid_equal") {
  CHECK(braid_equal(parse_braid("s1 s2 s1"), parse_braid("s2 s1 s2")));
  CHECK_FALSE(braid_equal(parse_braid("s1"), parse_braid("s2")));
  CHECK(braid_equal(delta(2) * parse_braid("s2"), parse_braid("s2") * delta(2)));
  CHECK(braid_equal(delta(1) * parse_braid("s1") * delta(-1), parse_braid("s2")));
  CHECK_THROWS_AS(burau_matrix(parse_braid("s3", 4)), DomainError);
}

TEST_CASE("burau is a homomorphism and matches the integer specialisation") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord u = random_braid(rng, 40);
    const BraidWord v = random_braid(rng, 40);
    CHECK(burau_matrix(u * v) == burau_matrix(u) * burau_matrix(v));
    CHECK(at_minus_one(burau_matrix(u)) == oracle::burau_at_minus_one(u.signed_letters()));
  }
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  const BraidWord w = braid_power(parse_braid("s1 s2^-1"), 120);
  const LaurentMatrix m = burau_matrix(w);
  CHECK(at_minus_one(m) == oracle::burau_at_minus_one(w.signed_letters()));
  BigInt largest = 0;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (const auto& [e, coeff] : m(r, c).terms()) largest = std::max(largest, BigInt(abs(coeff)));
  CHECK(largest > BigInt(std::numeric_limits<long long>::max()));
}
