#pragma once

// Experiment engine: ball enumeration, convexity-violation and
// non-Conradian witness searches, and the seeded verification suite.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "braidlab/dehornoy.hpp"
#include "braidlab/exotic_order.hpp"
#include "braidlab/free_group.hpp"
#include "braidlab/stallings.hpp"

namespace braidlab {

/// All freely reduced words of length <= radius, shortest first, each length
/// in lexicographic order with x < x^-1 < y < y^-1 (g1 < g1^-1 < g2 < ...).
class BallEnumerator {
 public:
  BallEnumerator(int rank, std::size_t radius);

  std::optional<FreeWord> next();

 private:
  bool advance();  // next word of the current length; false when exhausted

  int rank_;
  std::size_t radius_;
  std::size_t length_ = 0;
  std::vector<int> codes_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<FreeWord> ball(int rank, std::size_t radius);

/// c_low < g < c_high with c_low, c_high in the candidate subgroup and g not.
struct ConvexityWitness {
  FreeWord c_low;
  FreeWord c_high;
  FreeWord g;
  ExoticContext context;
};

struct ConvexityOptions {
  std::size_t radius = 8;
  /// Longest subgroup element used for bounding pairs; 2 × radius when unset.
  std::optional<std::size_t> subgroup_length;
  /// Cap on the number of subgroup elements enumerated.
  std::size_t max_subgroup_elements = 4096;
};

struct ConvexityResult {
  std::optional<ConvexityWitness> witness;
  /// The subgroup is trivial or the whole group, so no witness exists.
  bool vacuous = false;
  std::size_t candidates_examined = 0;
  std::size_t subgroup_elements = 0;
  /// 1-based position of g in the ball enumeration, 0 when none.
  std::size_t witness_index = 0;
};

/// Searches the ball for a witness that <generators> is not convex. A result
/// without a witness is inconclusive; it does not show convexity.
ConvexityResult convexity_probe(const std::vector<FreeWord>& generators, const ExoticContext& ctx,
                                const ConvexityOptions& options = {});

/// Re-checks a witness through exotic_compare and subgroup membership.
bool witness_is_valid(const ConvexityWitness& w, const std::vector<FreeWord>& generators);

/// First (g, h) in ball order with 1 < g, 1 < h and h g^2 < g.
std::optional<std::pair<FreeWord, FreeWord>> conradian_violation_search(const ExoticContext& ctx,
                                                                        std::size_t radius);

// ---------------------------------------------------------------------------
// Verification suite.

using SignOracle = std::function<OrderVerdict(const BraidWord&)>;

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  /// Trials run on this many threads; results do not depend on it.
  unsigned threads = 1;
  /// Replaces dehornoy_sign inside the suite. Test hook.
  SignOracle sign_oracle;
};

struct CheckFailure {
  long long trial = 0;  // -1 for the deterministic part of a check
  nlohmann::ordered_json inputs;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string property;
  std::size_t trials = 0;
  std::vector<CheckFailure> failures;
  std::uint64_t steps = 0;  // handle reductions performed
  nlohmann::ordered_json evidence;  // witnesses and other findings

  bool passed() const noexcept { return failures.empty(); }
};

struct ExperimentReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::uint64_t total_steps() const;
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Individual checks. `count` is the number of random trials; deterministic
/// checks ignore it.
namespace checks {
CheckResult order_trichotomy(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult order_transitivity(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult order_left_invariance(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult order_cone_closure(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult reduction_soundness(const SuiteOptions& o, std::size_t count, std::size_t max_length = 200);
CheckResult sign_antisymmetry(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult oracle_consistency(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult subword_property(const SuiteOptions& o, std::size_t count, std::size_t max_length = 60);
CheckResult lemma_conform(const SuiteOptions& o, std::size_t count);
CheckResult lemma_fix(const SuiteOptions& o, std::size_t count);
CheckResult lemma_gen(const SuiteOptions& o, std::size_t count);
CheckResult lemma_pos(const SuiteOptions& o, std::size_t count);
CheckResult case2_sandwich(const SuiteOptions& o, std::size_t count);
CheckResult kn_sandwich(const SuiteOptions& o, std::size_t count);
CheckResult braid_identities(const SuiteOptions& o);
CheckResult case1_cofinality(const SuiteOptions& o);
CheckResult no_neutral_commutators(const SuiteOptions& o, std::size_t count);
CheckResult rewrite_round_trips(const SuiteOptions& o, std::size_t count);
CheckResult convexity_probes(const SuiteOptions& o, std::size_t radius);
CheckResult conradian_witness(const SuiteOptions& o, std::size_t radius);
}  // namespace checks

/// Runs every check with options.trials trials each.
ExperimentReport lemma_suite(const SuiteOptions& options);

}  // namespace braidlab
