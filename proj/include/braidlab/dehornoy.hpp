#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "braidlab/braid_word.hpp"

namespace braidlab {

enum class SignKind { negative = -1, trivial = 0, positive = 1 };

/// Result of a σ-positivity decision. `main_index` is the lowest generator
/// occurring in the handle-free representative, 0 when trivial.
struct OrderVerdict {
  SignKind kind = SignKind::trivial;
  int main_index = 0;

  bool positive() const noexcept { return kind == SignKind::positive; }
  bool negative() const noexcept { return kind == SignKind::negative; }
  bool trivial() const noexcept { return kind == SignKind::trivial; }

  friend bool operator==(const OrderVerdict&, const OrderVerdict&) = default;
};

/// "positive(1)", "negative(2)", "trivial".
std::string to_string(const OrderVerdict& v);

enum class Ordering { less, equal, greater };

std::string to_string(Ordering o);

/// A subword σ_i^sign v σ_i^-sign of the single-letter expansion, with v over
/// generators of index > i. Positions are 0-based and inclusive.
struct Handle {
  std::size_t start = 0;
  std::size_t end = 0;
  int index = 1;
  int sign = 1;

  friend bool operator==(const Handle&, const Handle&) = default;
};

struct ReductionStep {
  std::uint64_t step = 0;
  Handle handle;
  const BraidWord& word;  // word after this step
};

struct ReductionOptions {
  /// Maximum number of handle reductions; defaults to
  /// default_step_budget(input length).
  std::optional<std::uint64_t> budget;
  std::function<void(const ReductionStep&)> trace;
};

struct ReductionResult {
  BraidWord word;
  std::uint64_t steps = 0;
};

/// 10^6 × max(1, length), unless a process-wide override is set.
std::uint64_t default_step_budget(std::size_t length);

/// Process-wide override for the default budget (nullopt clears it). The CLI
/// sets this from BRAIDLAB_BUDGET.
void set_step_budget_override(std::optional<std::uint64_t> budget);

/// Handle reduction, always reducing the first handle that closes when the
/// word is scanned left to right. That handle has a handle-free interior, so
/// it is permitted. Returns a fully handle-free word equal to `w` as a braid.
/// Throws BudgetExceeded when the budget runs out.
ReductionResult handle_reduce_traced(const BraidWord& w, const ReductionOptions& options = {});

BraidWord handle_reduce(const BraidWord& w);

/// Reads the i-positive / i-negative definition directly off a word:
/// the lowest occurring generator must appear with a single sign. Returns
/// nullopt when it appears with both signs (the word is not σ-definite as
/// written).
std::optional<OrderVerdict> sigma_sign_of_word(const BraidWord& w);

OrderVerdict dehornoy_sign(const BraidWord& w);

/// u < v iff u^-1 v is σ-positive.
Ordering braid_compare(const BraidWord& u, const BraidWord& v);

/// Least k >= 1 with w < Δ^{2k}; throws CapExceeded past `cap`.
int cofinal_bound(const BraidWord& w, int cap = 64);

/// uv == vu as B3 braids (Burau oracle).
bool commutes(const BraidWord& u, const BraidWord& v);

}  // namespace braidlab
