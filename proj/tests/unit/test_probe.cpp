#include <doctest.h>

#include <braidlab/dehornoy.hpp>
#include <braidlab/exotic_order.hpp>
#include <braidlab/free_group.hpp>
#include <braidlab/probe.hpp>

#include "oracles.hpp"

using namespace braidlab;

namespace {

std::vector<FreeWord> words(std::initializer_list<const char*> texts) {
  std::vector<FreeWord> out;
  for (const char* t : texts) out.push_back(parse_free(t, 2));
  return out;
}

// Reorders by length, then by letter code, as the ball definition states.
bool shortlex_less(const FreeWord& a, const FreeWord& b) {
  const auto la = a.signed_letters();
  const auto lb = b.signed_letters();
  if (la.size() != lb.size()) return la.size() < lb.size();
  for (std::size_t i = 0; i < la.size(); ++i)
    if (la[i] != lb[i]) return letter_code(la[i]) < letter_code(lb[i]);
  return false;
}

}  // namespace

TEST_CASE("ball examples") {
  const auto b1 = ball(1, 2);
  std::vector<FreeWord> expected{FreeWord(1), FreeWord::letter(1, 1, 1), FreeWord::letter(1, -1, 1),
                                 FreeWord::letter(1, 2, 1), FreeWord::letter(1, -2, 1)};
  CHECK(b1 == expected);
  const auto b2 = ball(2, 2);
  CHECK(b2.size() == 17);
  CHECK(b2[1] == parse_free("x", 2));
}

TEST_CASE("ball sizes and order match brute force") {
  for (std::size_t r = 0; r <= 6; ++r) {
    const auto b = ball(2, r);
    std::size_t expected = 2;
    for (std::size_t k = 0; k < r; ++k) expected *= 3;
    CHECK(b.size() == expected - 1);
    CHECK(b.size() == oracle::all_reduced(2, r).size());
    for (std::size_t i = 1; i < b.size(); ++i) CHECK(shortlex_less(b[i - 1], b[i]));
  }
  BallEnumerator e(3, 1);
  std::size_t count = 0;
  while (e.next()) ++count;
  CHECK(count == 7);
}

TEST_CASE("convexity probe examples") {
  const auto f2 = ExoticContext::f2();
  const auto trivial = convexity_probe({FreeWord(2)}, f2);
  CHECK_FALSE(trivial.witness);
  CHECK(trivial.vacuous);
  for (const auto& gens : {words({"x"}), words({"y"}), words({"x^2", "y"}), words({"y", "x^2", "x y x"})}) {
    const auto res = convexity_probe(gens, f2);
    REQUIRE(res.witness);
    CHECK(witness_is_valid(*res.witness, gens));
    const auto& w = *res.witness;
    CHECK(exotic_compare(w.c_low, w.g, f2) == Ordering::less);
    CHECK(exotic_compare(w.g, w.c_high, f2) == Ordering::less);
  }
  CHECK(convexity_probe(words({"x", "y"}), f2).vacuous);
}

TEST_CASE("convexity probe inside K_3") {
  const auto k3 = ExoticContext::kn(3);
  const std::vector<FreeWord> gens{FreeWord::letter(1, 1, 3)};
  const auto res = convexity_probe(gens, k3, {6, {}, 4096});
  REQUIRE(res.witness);
  CHECK(witness_is_valid(*res.witness, gens));
}

TEST_CASE("witness validation rejects forged triples") {
  const auto f2 = ExoticContext::f2();
  const auto gens = words({"x"});
  auto w = *convexity_probe(gens, f2).witness;
  ConvexityWitness forged = w;
  forged.g = parse_free("x", 2);  // a member
  CHECK_FALSE(witness_is_valid(forged, gens));
  forged = w;
  std::swap(forged.c_low, forged.c_high);
  CHECK_FALSE(witness_is_valid(forged, gens));
}

TEST_CASE("a witness found at radius r persists at larger radii") {
  const auto f2 = ExoticContext::f2();
  for (const auto& gens : {words({"x"}), words({"x^2", "y"})}) {
    std::optional<std::size_t> first;
    for (std::size_t r = 0; r <= 6; ++r) {
      const auto res = convexity_probe(gens, f2, {r, 6, 4096});
      if (first) {
        REQUIRE(res.witness);
        CHECK(res.witness_index == *first);
      } else if (res.witness) {
        first = res.witness_index;
      }
    }
    CHECK(first.has_value());
  }
}

TEST_CASE("conradian violation search") {
  const auto f2 = ExoticContext::f2();
  CHECK_FALSE(conradian_violation_search(f2, 0));
  const auto pair = conradian_violation_search(f2, 6);
  REQUIRE(pair);
  const auto& [g, h] = *pair;
  const FreeWord one(2);
  CHECK(exotic_compare(one, g, f2) == Ordering::less);
  CHECK(exotic_compare(one, h, f2) == Ordering::less);
  CHECK(exotic_compare(h * g * g, g, f2) == Ordering::less);
}

TEST_CASE("an empty search space is inconclusive, not vacuous") {
  const auto f2 = ExoticContext::f2();
  const auto res = convexity_probe(words({"x"}), f2, {0, {}, 4096});
  CHECK_FALSE(res.witness);
  CHECK_FALSE(res.vacuous);
  CHECK(convexity_probe(words({"x y", "y"}), f2).vacuous);
  CHECK_FALSE(convexity_probe(kn_basis(3), f2).vacuous);
}
