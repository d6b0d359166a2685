#include "braidlab/random.hpp"

#include <vector>

namespace braidlab {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng Rng::substream(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ fnv1a(tag)) ^ index));
}

long long Rng::uniform(long long lo, long long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(next());  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r = next();
  while (r >= limit) r = next();
  return lo + static_cast<long long>(r % span);
}

BraidWord random_braid(Rng& rng, std::size_t max_length, int strands) {
  const auto length = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(max_length)));
  std::vector<int> letters(length);
  for (auto& l : letters) {
    const int index = static_cast<int>(rng.uniform(1, strands - 1));
    l = rng.coin() ? index : -index;
  }
  return BraidWord::from_signed_letters(strands, letters);
}

BraidWord random_zero_sum_braid(Rng& rng, std::size_t max_length) {
  const auto half = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(max_length / 2)));
  std::vector<int> signs(2 * half, -1);
  for (std::size_t k = 0; k < half; ++k) signs[k] = 1;
  // Fisher-Yates with our own bounded draws.
  for (std::size_t k = signs.size(); k > 1; --k)
    std::swap(signs[k - 1], signs[static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(k - 1)))]);
  for (auto& s : signs) s *= static_cast<int>(rng.uniform(1, 2));
  return BraidWord::from_signed_letters(3, signs);
}

FreeWord random_free_word(Rng& rng, std::size_t max_length, int rank) {
  const auto length = static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(max_length)));
  std::vector<int> letters(length);
  for (auto& l : letters) {
    const int index = static_cast<int>(rng.uniform(1, rank));
    l = rng.coin() ? index : -index;
  }
  return FreeWord::from_signed_letters(rank, letters);
}

}  // namespace braidlab
