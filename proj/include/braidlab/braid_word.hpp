#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidlab {

/// One run σ_index^exponent of a braid word.
struct BraidLetter {
  int index = 1;
  int exponent = 1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A braid word on a fixed number of strands, kept in run-length normal
/// form: no zero exponents and no two adjacent runs on the same generator.
/// Every constructor normalizes, so two words compare equal here exactly when
/// they are freely equal (this is not braid equality; see burau.hpp).
class BraidWord {
 public:
  explicit BraidWord(int strands = 3);
  BraidWord(int strands, std::vector<BraidLetter> letters);

  /// σ_index^exponent.
  static BraidWord generator(int index, int exponent = 1, int strands = 3);

  /// Builds from single signed letters: +i is σ_i, -i is σ_i^-1.
  static BraidWord from_signed_letters(int strands, std::span<const int> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<BraidLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  /// Number of single letters, i.e. the sum of |exponent| over runs.
  std::size_t length() const noexcept;

  /// Expansion into single signed letters (+i / -i).
  std::vector<int> signed_letters() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

/// Parses "s1 s2^-1" style text, or the compact B3 form over {a,A,b,B}.
/// Throws ParseError on malformed tokens, DomainError on an out-of-range
/// generator index.
BraidWord parse_braid(std::string_view text, int strands = 3);

/// Renders in the token grammar; the empty word renders as "".
std::string format_braid(const BraidWord& w);

/// Words are always stored normalized, so this is a copy; kept as a named
/// operation for callers that build words by hand.
BraidWord free_reduce_braid(const BraidWord& w);

BraidWord braid_product(const BraidWord& u, const BraidWord& v);
BraidWord braid_inverse(const BraidWord& u);
BraidWord braid_power(const BraidWord& u, long long k);

inline BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  return braid_product(u, v);
}

/// Total exponent sum, or the sum over one generator when given.
long long exponent_sum(const BraidWord& w, std::optional<int> generator = std::nullopt);

/// Δ^power for Δ = σ1 σ2 σ1 in B3.
BraidWord delta(long long power = 1);

}  // namespace braidlab
