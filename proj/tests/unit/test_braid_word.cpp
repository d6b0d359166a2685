#include <doctest.h>

#include <braidlab/braid_word.hpp>
#include <braidlab/burau.hpp>
#include <braidlab/errors.hpp>
#include <braidlab/random.hpp>

#include "oracles.hpp"

using namespace braidlab;

TEST_CASE("parse_braid maps tokens and compact aliases") {
  const BraidWord expected(3, {{1, 1}, {2, -1}});
  CHECK(parse_braid("s1 s2^-1") == expected);
  CHECK(parse_braid("aB") == expected);
  CHECK(parse_braid("s1^3 s1^-1") == BraidWord(3, {{1, 2}}));
  CHECK(parse_braid("").empty());
  CHECK(parse_braid("s3 s4^2", 6).strands() == 6);
}

TEST_CASE("parse_braid rejects out-of-range indices and bad syntax with offsets") {
  CHECK_THROWS_AS(parse_braid("s3"), DomainError);
  CHECK_THROWS_AS(parse_braid("s0"), ParseError);
  try {
    parse_braid("s1 q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse_braid("s1^"), ParseError);
  CHECK_THROWS_AS(parse_braid("ab", 4), ParseError);
}

TEST_CASE("free_reduce_braid cancels and merges runs") {
  CHECK(free_reduce_braid(parse_braid("s1 s1^-1")).empty());
  CHECK(free_reduce_braid(parse_braid("s1 s1")) == BraidWord(3, {{1, 2}}));
  const BraidWord w = parse_braid("s1 s2 s1^-1");
  CHECK(free_reduce_braid(w) == w);
  CHECK(format_braid(w) == "s1 s2 s1^-1");
  CHECK(format_braid(BraidWord()) == "");
}

TEST_CASE("products and inverses") {
  const BraidWord u = parse_braid("s1 s2^-1");
  CHECK((u * braid_inverse(u)).empty());
  CHECK(braid_inverse(u) == parse_braid("s2 s1^-1"));
  CHECK(parse_braid("s1") * parse_braid("s1^-1 s2") == parse_braid("s2"));
  CHECK(braid_power(u, 3) == u * u * u);
  CHECK(braid_power(u, -2) == braid_inverse(u * u));
  CHECK(braid_power(u, 0).empty());
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(parse_braid("s1 s2^-1")) == 0);
  CHECK(exponent_sum(delta(2)) == 6);
  CHECK(exponent_sum(delta(2) * BraidWord::generator(2, -6)) == 0);
  CHECK(exponent_sum(parse_braid("s1^3 s2^-1 s1"), 1) == 4);
  CHECK(exponent_sum(parse_braid("s1^3 s2^-1 s1"), 2) == -1);
  CHECK(delta(1) == parse_braid("s1 s2 s1"));
  CHECK(delta(-1) == braid_inverse(parse_braid("s1 s2 s1")));
}

TEST_CASE("normal form agrees with naive reduction on random words") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Letters raw;
    const auto len = rng.uniform(0, 40);
    for (long long k = 0; k < len; ++k) raw.push_back(static_cast<int>(rng.uniform(1, 2)) * (rng.coin() ? 1 : -1));
    const BraidWord w = BraidWord::from_signed_letters(3, raw);
    CHECK(w.signed_letters() == oracle::naive_free_reduce(raw));
    CHECK(free_reduce_braid(w) == w);
    CHECK(parse_braid(format_braid(w)) == w);
  }
}

TEST_CASE("product is a homomorphism and inverse an involution") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord u = random_braid(rng, 30);
    const BraidWord v = random_braid(rng, 30);
    CHECK((u * v).signed_letters() == oracle::naive_free_reduce(oracle::concat(u.signed_letters(), v.signed_letters())));
    CHECK(braid_inverse(braid_inverse(u)) == u);
    CHECK(braid_inverse(u * v) == braid_inverse(v) * braid_inverse(u));
    CHECK(exponent_sum(u * v) == exponent_sum(u) + exponent_sum(v));
  }
}

TEST_CASE("random_zero_sum_braid lies in the exponent-sum kernel") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) CHECK(exponent_sum(random_zero_sum_braid(rng, 60)) == 0);
}
