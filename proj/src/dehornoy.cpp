#include "braidlab/dehornoy.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>

#include "braidlab/burau.hpp"
#include "braidlab/errors.hpp"

namespace braidlab {
namespace {

std::atomic<std::uint64_t> g_budget_override{0};

int sign_of(int letter) { return letter > 0 ? 1 : -1; }

}  // namespace

std::string to_string(const OrderVerdict& v) {
  switch (v.kind) {
    case SignKind::positive: return "positive(" + std::to_string(v.main_index) + ")";
    case SignKind::negative: return "negative(" + std::to_string(v.main_index) + ")";
    case SignKind::trivial: break;
  }
  return "trivial";
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "equal";
}

std::uint64_t default_step_budget(std::size_t length) {
  if (const auto o = g_budget_override.load(std::memory_order_relaxed); o != 0) return o;
  const std::uint64_t len = std::max<std::uint64_t>(1, length);
  constexpr std::uint64_t kPerLetter = 1'000'000;
  if (len > std::numeric_limits<std::uint64_t>::max() / kPerLetter)
    return std::numeric_limits<std::uint64_t>::max();
  return kPerLetter * len;
}

void set_step_budget_override(std::optional<std::uint64_t> budget) {
  g_budget_override.store(budget.value_or(0), std::memory_order_relaxed);
}

ReductionResult handle_reduce_traced(const BraidWord& w, const ReductionOptions& options) {
  const int strands = w.strands();
  const std::size_t width = static_cast<std::size_t>(strands - 1);
  const std::uint64_t budget = options.budget.value_or(default_step_budget(w.length()));

  std::vector<int> word = w.signed_letters();
  // Row p holds, for each generator i, the last position < p whose letter has
  // index <= i (or -1). Rows only depend on the prefix, so they survive a
  // reduction that leaves that prefix intact.
  std::vector<long> last(width, -1);
  last.reserve((word.size() + 1) * width);

  std::uint64_t steps = 0;
  std::size_t p = 0;
  while (p < word.size()) {
    const int letter = word[p];
    const int i = std::abs(letter);
    const long q = last[p * width + static_cast<std::size_t>(i - 1)];
    if (q >= 0 && word[static_cast<std::size_t>(q)] == -letter) {
      if (steps >= budget)
        throw BudgetExceeded("handle reduction exceeded its budget of " + std::to_string(budget) +
                             " steps");
      ++steps;
      const auto start = static_cast<std::size_t>(q);
      const int e = sign_of(word[start]);

      std::vector<int> out(word.begin(), word.begin() + static_cast<long>(start));
      out.reserve(word.size() + 2 * (p - start));
      std::size_t stable = start;
      const auto push = [&](int x) {
        if (!out.empty() && out.back() == -x) {
          out.pop_back();
          stable = std::min(stable, out.size());
        } else {
          out.push_back(x);
        }
      };
      for (std::size_t k = start + 1; k < p; ++k) {
        const int x = word[k];
        if (std::abs(x) == i + 1) {
          // σ_{i+1}^d -> σ_{i+1}^{-e} σ_i^d σ_{i+1}^e
          push(-(i + 1) * e);
          push(i * sign_of(x));
          push((i + 1) * e);
        } else {
          push(x);
        }
      }
      for (std::size_t k = p + 1; k < word.size(); ++k) push(word[k]);

      const Handle handle{start, p, i, e};
      word = std::move(out);
      last.resize((stable + 1) * width);
      p = stable;
      if (options.trace) {
        const BraidWord current = BraidWord::from_signed_letters(strands, word);
        options.trace(ReductionStep{steps, handle, current});
      }
      continue;
    }
    // Extend the prefix table by one row.
    const std::size_t base = last.size();
    last.resize(base + width);
    std::copy_n(last.begin() + static_cast<long>(base - width), width,
                last.begin() + static_cast<long>(base));
    for (std::size_t j = static_cast<std::size_t>(i - 1); j < width; ++j)
      last[base + j] = static_cast<long>(p);
    ++p;
  }
  return {BraidWord::from_signed_letters(strands, word), steps};
}

BraidWord handle_reduce(const BraidWord& w) { return handle_reduce_traced(w).word; }

std::optional<OrderVerdict> sigma_sign_of_word(const BraidWord& w) {
  if (w.empty()) return OrderVerdict{};
  int lowest = std::numeric_limits<int>::max();
  for (const auto& l : w.letters()) lowest = std::min(lowest, l.index);
  bool pos = false;
  bool neg = false;
  for (const auto& l : w.letters()) {
    if (l.index != lowest) continue;
    (l.exponent > 0 ? pos : neg) = true;
  }
  if (pos && neg) return std::nullopt;
  return OrderVerdict{pos ? SignKind::positive : SignKind::negative, lowest};
}

OrderVerdict dehornoy_sign(const BraidWord& w) {
  const BraidWord reduced = handle_reduce(w);
  // A handle-free word is σ-definite.
  return *sigma_sign_of_word(reduced);
}

Ordering braid_compare(const BraidWord& u, const BraidWord& v) {
  const OrderVerdict s = dehornoy_sign(braid_inverse(u) * v);
  if (s.positive()) return Ordering::less;
  if (s.trivial()) return Ordering::equal;
  return Ordering::greater;
}

int cofinal_bound(const BraidWord& w, int cap) {
  if (w.strands() != 3) throw DomainError("cofinal_bound is defined on B3");
  for (int k = 1; k <= cap; ++k)
    if (braid_compare(w, delta(2LL * k)) == Ordering::less) return k;
  throw CapExceeded("no k <= " + std::to_string(cap) + " with w < Delta^(2k)");
}

bool commutes(const BraidWord& u, const BraidWord& v) { return braid_equal(u * v, v * u); }

}  // namespace braidlab
