#include <doctest.h>

#include <braidlab/braid_word.hpp>
#include <braidlab/burau.hpp>
#include <braidlab/dehornoy.hpp>
#include <braidlab/errors.hpp>
#include <braidlab/exotic_order.hpp>
#include <braidlab/free_group.hpp>
#include <braidlab/random.hpp>

#include "oracles.hpp"

using namespace braidlab;

namespace {

FreeWord w2(const char* text) { return parse_free(text, 2); }

}  // namespace

TEST_CASE("embed examples") {
  CHECK(embed(w2("x")) == parse_braid("s1 s2^-1"));
  CHECK(embed(w2("y")) == parse_braid("s1^2 s2^-2"));
  CHECK(embed(w2("x^-1")) == parse_braid("s2 s1^-1"));
  CHECK(embed(FreeWord(2)).empty());
  CHECK_THROWS_AS(embed(parse_free("g1", 3)), DomainError);
}

TEST_CASE("commutator_rewrite examples") {
  CHECK(commutator_rewrite(parse_braid("s1 s2^-1")) == w2("x"));
  CHECK(commutator_rewrite(parse_braid("s1^2 s2^-2")) == w2("y"));
  const BraidWord d = delta(2) * BraidWord::generator(2, -6);
  CHECK(braid_equal(embed(commutator_rewrite(d)), d));
  CHECK_THROWS_AS(commutator_rewrite(parse_braid("s1")), DomainError);
}

TEST_CASE("embed and commutator_rewrite are mutually inverse") {
  Rng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const FreeWord g = random_free_word(rng, 20);
    CHECK(exponent_sum(embed(g)) == 0);
    CHECK(commutator_rewrite(embed(g)) == g);
    const BraidWord b = random_zero_sum_braid(rng, 40);
    CHECK(braid_equal(embed(commutator_rewrite(b)), b));
  }
}

TEST_CASE("exotic_compare examples") {
  const auto f2 = ExoticContext::f2();
  CHECK(exotic_compare(FreeWord(2), w2("x"), f2) == Ordering::less);
  CHECK(exotic_compare(w2("x y^-2"), w2("x y^-2"), f2) == Ordering::equal);
  // x^-1 y embeds to a braid equal to s2 s1 s2^-2, which is 1-positive by definition.
  const BraidWord witness = parse_braid("s2 s1 s2^-2");
  REQUIRE(braid_equal(embed(w2("x^-1 y")), witness));
  REQUIRE(sigma_sign_of_word(witness)->positive());
  CHECK(exotic_compare(w2("x"), w2("y"), f2) == Ordering::less);
  CHECK(exotic_compare(w2("y"), w2("x"), f2) == Ordering::greater);
  const auto k3 = ExoticContext::kn(3);
  for (int i = 1; i <= 3; ++i) CHECK(exotic_compare(FreeWord(3), FreeWord::letter(i, 1, 3), k3) == Ordering::less);
}

TEST_CASE("contexts") {
  CHECK(ExoticContext::parse("f2").name() == "f2");
  const auto k4 = ExoticContext::parse("kn:4");
  CHECK(k4.is_kn());
  CHECK(k4.rank() == 4);
  CHECK(k4.basis() == kn_basis(4));
  CHECK(k4.to_f2(parse_free("g3", 4)) == w2("x y x^2"));
  CHECK_THROWS_AS(ExoticContext::parse("kn:1"), DomainError);
  CHECK_THROWS_AS(ExoticContext::parse("q"), DomainError);
}

TEST_CASE("exotic order is a left order on F2 and K_n") {
  Rng rng(42);
  for (const auto& ctx : {ExoticContext::f2(), ExoticContext::kn(3), ExoticContext::kn(5)}) {
    const FreeWord one(ctx.rank());
    for (int trial = 0; trial < 60; ++trial) {
      const FreeWord f = random_free_word(rng, 8, ctx.rank());
      const FreeWord g = random_free_word(rng, 8, ctx.rank());
      const FreeWord h = random_free_word(rng, 8, ctx.rank());
      const Ordering gh = exotic_compare(g, h, ctx);
      CHECK((gh == Ordering::equal) == (g == h));
      CHECK(exotic_compare(f * g, f * h, ctx) == gh);
      if (gh != Ordering::equal) CHECK(exotic_compare(h, g, ctx) != gh);
      if (exotic_compare(one, g, ctx) == Ordering::less && exotic_compare(one, h, ctx) == Ordering::less)
        CHECK(exotic_compare(one, g * h, ctx) == Ordering::less);
    }
  }
}

TEST_CASE("conjugation by s2 acts as phi on the commutator subgroup") {
  Rng rng(43);
  const auto phi = phi_automorphism();
  const BraidWord s2 = parse_braid("s2");
  for (int trial = 0; trial < 100; ++trial) {
    const FreeWord g = random_free_word(rng, 20);
    CHECK(braid_equal(embed(apply_automorphism(phi, g)), braid_inverse(s2) * embed(g) * s2));
  }
}
