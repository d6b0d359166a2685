#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

#include "braidlab/burau.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/probe.hpp"
#include "braidlab/random.hpp"

namespace braidlab {
namespace {

using json = nlohmann::ordered_json;

const BraidWord kSigma1 = BraidWord::generator(1);
const BraidWord kSigma2 = BraidWord::generator(2);

// Per-trial view of the sign oracle; counts handle reductions.
class Oracle {
 public:
  explicit Oracle(const SuiteOptions& o) : options_(o) {}

  OrderVerdict sign(const BraidWord& w) {
    if (options_.sign_oracle) return options_.sign_oracle(w);
    const auto r = handle_reduce_traced(w);
    steps_ += r.steps;
    return *sigma_sign_of_word(r.word);
  }

  Ordering compare(const BraidWord& u, const BraidWord& v) {
    const OrderVerdict s = sign(braid_inverse(u) * v);
    if (s.positive()) return Ordering::less;
    if (s.trivial()) return Ordering::equal;
    return Ordering::greater;
  }

  bool less(const BraidWord& u, const BraidWord& v) { return compare(u, v) == Ordering::less; }

  std::uint64_t steps() const { return steps_; }
  void add_steps(std::uint64_t n) { steps_ += n; }

 private:
  const SuiteOptions& options_;
  std::uint64_t steps_ = 0;
};

struct Trial {
  Oracle oracle;
  Rng rng;
  long long index;
  std::vector<CheckFailure> failures;

  void fail(json inputs, std::string detail) {
    failures.push_back({index, std::move(inputs), std::move(detail)});
  }
};

std::string b(const BraidWord& w) { return format_braid(w); }
std::string f(const FreeWord& w) { return format_free(w); }

// Runs `body` once per trial; each trial has its own substream and failure
// slot, so the merged result is independent of the thread count.
template <typename Body>
CheckResult run_trials(const SuiteOptions& o, std::string name, std::string property,
                       std::size_t count, Body body) {
  struct Slot {
    std::vector<CheckFailure> failures;
    std::uint64_t steps = 0;
  };
  std::vector<Slot> slots(count);
  const auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < count; t += stride) {
      Trial trial{Oracle(o), Rng::substream(o.seed, name, t), static_cast<long long>(t), {}};
      try {
        body(trial);
      } catch (const std::exception& e) {
        trial.fail(json::object(), std::string("exception: ") + e.what());
      }
      slots[t] = {std::move(trial.failures), trial.oracle.steps()};
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(o.threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, k, threads);
    for (auto& th : pool) th.join();
  }
  CheckResult r;
  r.name = std::move(name);
  r.property = std::move(property);
  r.trials = count;
  for (auto& s : slots) {
    r.steps += s.steps;
    for (auto& fl : s.failures) r.failures.push_back(std::move(fl));
  }
  return r;
}

// Deterministic part of a check, recorded as trial -1.
template <typename Body>
void run_fixed(const SuiteOptions& o, CheckResult& r, Body body) {
  Trial trial{Oracle(o), Rng(0), -1, {}};
  try {
    body(trial);
  } catch (const std::exception& e) {
    trial.fail(json::object(), std::string("exception: ") + e.what());
  }
  r.steps += trial.oracle.steps();
  r.failures.insert(r.failures.begin(), trial.failures.begin(), trial.failures.end());
}

// A word equal to w as a braid but usually different as a word: inserts
// conjugates of the braid relator at random positions.
BraidWord scramble(Rng& rng, const BraidWord& w) {
  static const std::vector<int> relator{1, 2, 1, -2, -1, -2};
  std::vector<int> letters = w.signed_letters();
  const int inserts = static_cast<int>(rng.uniform(1, 3));
  for (int i = 0; i < inserts; ++i) {
    std::vector<int> r = relator;
    if (rng.coin()) {
      std::reverse(r.begin(), r.end());
      for (auto& l : r) l = -l;
    }
    std::rotate(r.begin(), r.begin() + rng.uniform(0, 5), r.end());
    const auto at = static_cast<long>(rng.uniform(0, static_cast<long long>(letters.size())));
    letters.insert(letters.begin() + at, r.begin(), r.end());
  }
  return BraidWord::from_signed_letters(3, letters);
}

// Nontrivial 1-positive β in [B3, B3] not commuting with σ2, drawn by
// rejection from embedded random words of `source`.
template <typename Source>
std::optional<BraidWord> draw_case2_beta(Trial& t, Source source) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const BraidWord beta = source(t.rng);
    if (beta.empty()) continue;
    const OrderVerdict s = t.oracle.sign(beta);
    if (!(s.positive() && s.main_index == 1)) continue;
    if (commutes(beta, kSigma2)) continue;
    return beta;
  }
  return std::nullopt;
}

// Exponent of a leading σ2 run in the handle-free form of β (σ2^u σ1 w).
int leading_sigma2(const BraidWord& reduced) {
  if (!reduced.empty() && reduced.letters().front().index == 2) return reduced.letters().front().exponent;
  return 0;
}

}  // namespace

namespace checks {

CheckResult order_trichotomy(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "order_trichotomy", "exactly one of u<v, u=v, u>v, consistently both ways",
                    count, [&](Trial& t) {
    const BraidWord u = random_braid(t.rng, max_length);
    const BraidWord v = t.rng.uniform(0, 7) == 0 ? scramble(t.rng, u) : random_braid(t.rng, max_length);
    const Ordering a = t.oracle.compare(u, v);
    const Ordering c = t.oracle.compare(v, u);
    const bool ok = (a == Ordering::less && c == Ordering::greater) ||
                    (a == Ordering::greater && c == Ordering::less) ||
                    (a == Ordering::equal && c == Ordering::equal);
    if (!ok) t.fail({{"u", b(u)}, {"v", b(v)}}, "compare(u,v)=" + to_string(a) + " compare(v,u)=" + to_string(c));
  });
}

CheckResult order_transitivity(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "order_transitivity", "pairwise comparisons of a triple fit one ranking",
                    count, [&](Trial& t) {
    const std::array<BraidWord, 3> w{random_braid(t.rng, max_length), random_braid(t.rng, max_length),
                                     random_braid(t.rng, max_length)};
    Ordering r[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) r[i][j] = t.oracle.compare(w[i], w[j]);
    // Some ranks (0..2)^3 must reproduce all three verdicts.
    bool consistent = false;
    for (int code = 0; code < 27 && !consistent; ++code) {
      const int rank[3] = {code % 3, (code / 3) % 3, code / 9};
      bool all = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const Ordering want = rank[i] < rank[j] ? Ordering::less
                                : rank[i] == rank[j] ? Ordering::equal
                                                     : Ordering::greater;
          all = all && want == r[i][j];
        }
      consistent = all;
    }
    if (!consistent)
      t.fail({{"u", b(w[0])}, {"v", b(w[1])}, {"w", b(w[2])}},
             "u?v=" + to_string(r[0][1]) + " v?w=" + to_string(r[1][2]) + " u?w=" + to_string(r[0][2]));
  });
}

CheckResult order_left_invariance(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "order_left_invariance", "u<v implies fu<fv", count, [&](Trial& t) {
    const BraidWord f = random_braid(t.rng, max_length);
    const BraidWord u = random_braid(t.rng, max_length);
    const BraidWord v = random_braid(t.rng, max_length);
    // Scrambling keeps (fu)^-1 (fv) from collapsing to u^-1 v by free reduction.
    const BraidWord fu = scramble(t.rng, f * u);
    const BraidWord fv = scramble(t.rng, f * v);
    const Ordering before = t.oracle.compare(u, v);
    const Ordering after = t.oracle.compare(fu, fv);
    if (before != after)
      t.fail({{"f", b(f)}, {"u", b(u)}, {"v", b(v)}}, to_string(before) + " became " + to_string(after));
  });
}

CheckResult order_cone_closure(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "order_cone_closure", "P.P is contained in P", count, [&](Trial& t) {
    const auto draw_positive = [&]() -> BraidWord {
      for (int attempt = 0; attempt < 10'000; ++attempt) {
        const BraidWord w = random_braid(t.rng, max_length);
        const OrderVerdict s = t.oracle.sign(w);
        if (s.positive()) return w;
        if (s.negative()) return braid_inverse(w);
      }
      throw CapExceeded("no nontrivial braid drawn");
    };
    const BraidWord u = draw_positive();
    const BraidWord v = draw_positive();
    if (!t.oracle.sign(u * v).positive()) t.fail({{"u", b(u)}, {"v", b(v)}}, "uv is not positive");
  });
}

CheckResult reduction_soundness(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "reduction_soundness",
                    "handle reduction preserves the Burau matrix and ends sigma-definite and handle-free",
                    count, [&](Trial& t) {
    const BraidWord w = random_braid(t.rng, max_length);
    const ReductionResult r = handle_reduce_traced(w);
    t.oracle.add_steps(r.steps);
    if (burau_matrix(r.word) != burau_matrix(w)) t.fail({{"w", b(w)}}, "Burau matrix changed");
    if (!sigma_sign_of_word(r.word)) t.fail({{"w", b(w)}}, "output is not sigma-definite");
    if (handle_reduce_traced(r.word).steps != 0) t.fail({{"w", b(w)}}, "output still has a handle");
  });
}

CheckResult sign_antisymmetry(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "sign_antisymmetry", "sign(w^-1) is the negation of sign(w)", count, [&](Trial& t) {
    const BraidWord w = random_braid(t.rng, max_length);
    const OrderVerdict s = t.oracle.sign(w);
    const OrderVerdict r = t.oracle.sign(braid_inverse(w));
    const bool ok = static_cast<int>(s.kind) == -static_cast<int>(r.kind) && s.main_index == r.main_index;
    if (!ok) t.fail({{"w", b(w)}}, "sign(w)=" + to_string(s) + " sign(w^-1)=" + to_string(r));
  });
}

CheckResult oracle_consistency(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "oracle_consistency", "sign(w^-1 v) is trivial iff Burau says w = v", count,
                    [&](Trial& t) {
    const BraidWord w = random_braid(t.rng, max_length);
    const BraidWord v = t.rng.coin() ? scramble(t.rng, w) : random_braid(t.rng, max_length);
    const bool trivial = t.oracle.sign(braid_inverse(w) * v).trivial();
    const bool equal = braid_equal(w, v);
    if (trivial != equal)
      t.fail({{"w", b(w)}, {"v", b(v)}},
             std::string("handle reduction says ") + (trivial ? "equal" : "different") + ", Burau says " +
                 (equal ? "equal" : "different"));
  });
}

CheckResult subword_property(const SuiteOptions& o, std::size_t count, std::size_t max_length) {
  return run_trials(o, "subword_property", "beta sigma_k beta^-1 is positive", count, [&](Trial& t) {
    const BraidWord beta = random_braid(t.rng, max_length);
    const BraidWord s = BraidWord::generator(static_cast<int>(t.rng.uniform(1, 2)));
    const BraidWord c = beta * s * braid_inverse(beta);
    if (!t.oracle.sign(c).positive())
      t.fail({{"beta", b(beta)}, {"sigma", b(s)}}, "conjugate is " + to_string(t.oracle.sign(c)));
  });
}

CheckResult lemma_conform(const SuiteOptions& o, std::size_t count) {
  const GroupAutomorphism phi = phi_automorphism();
  auto r = run_trials(o, "lemma_conform", "embed(phi(w)) = sigma2^-1 embed(w) sigma2", count, [&](Trial& t) {
    const FreeWord w = random_free_word(t.rng, 20);
    const BraidWord lhs = embed(apply_automorphism(phi, w));
    const BraidWord rhs = braid_inverse(kSigma2) * embed(w) * kSigma2;
    if (!braid_equal(lhs, rhs)) t.fail({{"w", f(w)}}, "conjugation identity fails");
  });
  run_fixed(o, r, [&](Trial& t) {
    // The two generator computations, step by step.
    const std::vector<std::vector<std::string>> chains{
        {"s1 s2^-1 s2^2 s1^-2 s1 s2^-1", "s1 s2 s1^-1 s2^-1", "s2^-1 s1 s2 s2^-1",
         "s2^-1 s1 s2^-1 s2"},
        {"s1 s2^-1 s2^2 s1^-2 s1 s2^-1 s1 s2^-1", "s1 s2 s1^-1 s2^-1 s1 s2^-1",
         "s2^-1 s1 s2 s2^-1 s1 s2^-1", "s2^-1 s1^2 s2^-1", "s2^-1 s1^2 s2^-2 s2"}};
    const std::vector<FreeWord> gens{FreeWord::letter(1), FreeWord::letter(2)};
    for (std::size_t g = 0; g < 2; ++g) {
      std::vector<BraidWord> steps;
      steps.push_back(embed(apply_automorphism(phi, gens[g])));
      for (const auto& s : chains[g]) steps.push_back(parse_braid(s));
      steps.push_back(braid_inverse(kSigma2) * embed(gens[g]) * kSigma2);
      for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
        if (!braid_equal(steps[k], steps[k + 1]) || !t.oracle.sign(braid_inverse(steps[k]) * steps[k + 1]).trivial())
          t.fail({{"generator", f(gens[g])}, {"from", b(steps[k])}, {"to", b(steps[k + 1])}},
                 "step of the generator computation fails");
      }
    }
    // Every shipped automorphism is a conjugation in B3.
    struct Shipped {
      GroupAutomorphism a;
      BraidWord conjugator;  // a(g) = c^-1 g c
    };
    const std::vector<Shipped> shipped{
        {phi, kSigma2},
        {phi.inverse(), braid_inverse(kSigma2)},
        {delta_prime_automorphism(), braid_inverse(delta(1))},
        {psi_automorphism(), kSigma1},
        {psi_automorphism().inverse(), braid_inverse(kSigma1)}};
    for (const auto& s : shipped)
      for (const auto& g : gens)
        if (!braid_equal(embed(apply_automorphism(s.a, g)), braid_inverse(s.conjugator) * embed(g) * s.conjugator))
          t.fail({{"automorphism", s.a.name()}, {"generator", f(g)}}, "not the expected conjugation");
  });
  return r;
}

CheckResult lemma_fix(const SuiteOptions& o, std::size_t count) {
  const GroupAutomorphism phi = phi_automorphism();
  constexpr int kFirstN = 3;
  constexpr int kLastN = 8;
  const std::size_t per_n = count;
  const auto random_kn = [](Rng& rng, int n) {
    return substitute(random_free_word(rng, 8, n), kn_basis(n));
  };
  auto r = run_trials(o, "lemma_fix", "phi^6 maps K_n into K_n; the abelianized phi has order 6",
                      per_n * (kLastN - kFirstN + 1), [&](Trial& t) {
    const int n = kFirstN + static_cast<int>(static_cast<std::size_t>(t.index) / per_n);
    const FreeWord w = random_kn(t.rng, n);
    if (!kn_member(w, n)) t.fail({{"n", n}, {"w", f(w)}}, "sampled word is not in K_n");
    const FreeWord image = apply_automorphism(phi, w, 6);
    if (!kn_member(image, n)) t.fail({{"n", n}, {"w", f(w)}}, "phi^6(w) left K_n");
  });
  run_fixed(o, r, [&](Trial& t) {
    const IntMatrix2 m = automorphism_abelianization(phi);
    if (m != IntMatrix2{2, 3, -1, -1}) t.fail(json::object(), "abelianized phi is not [[2,3],[-1,-1]]");
    if (m.determinant() != 1) t.fail(json::object(), "abelianized phi does not have determinant 1");
    for (unsigned p = 1; p <= 5; ++p)
      if (matrix_power(m, p) == IntMatrix2::identity())
        t.fail({{"p", p}}, "abelianized phi has order below 6");
    if (matrix_power(m, 6) != IntMatrix2::identity()) t.fail(json::object(), "sixth power is not the identity");
    GroupAutomorphism phi6 = phi;
    for (int k = 1; k < 6; ++k) phi6 = compose(phi, phi6);
    if (automorphism_abelianization(phi6) != IntMatrix2::identity())
      t.fail(json::object(), "phi composed six times does not abelianize to the identity");

    // Whether a power below 6 is needed for some n: the congruence defining
    // K_n is preserved by phi^p iff M^p keeps the lattice {a = 0 mod n-1}
    // (generated by (n-1, 0) and (0, 1)). A witness must turn up exactly
    // when the matrix predicts one.
    json witnesses = json::array();
    for (int n = kFirstN; n <= kLastN; ++n) {
      const BigInt mod = n - 1;
      bool predicted = false;
      for (unsigned p = 1; p <= 5; ++p) {
        const IntMatrix2 mp = matrix_power(m, p);
        predicted = predicted || mp.b % mod != 0;  // image of (0, 1); (n-1, 0) always stays
      }
      std::optional<std::pair<FreeWord, int>> found;
      std::vector<FreeWord> pool = kn_basis(n);
      Rng rng = Rng::substream(o.seed, "lemma_fix.witness", static_cast<std::uint64_t>(n));
      for (int k = 0; k < 200; ++k) pool.push_back(random_kn(rng, n));
      for (const auto& w : pool) {
        for (int p = 1; p <= 5 && !found; ++p)
          if (!kn_member(apply_automorphism(phi, w, p), n)) found.emplace(w, p);
        if (found) break;
      }
      if (found.has_value() != predicted)
        t.fail({{"n", n}, {"predicted", predicted}, {"found", found.has_value()}},
               "witness search disagrees with the abelianized phi modulo n-1");
      if (found) witnesses.push_back({{"n", n}, {"w", f(found->first)}, {"p", found->second}});
      else witnesses.push_back({{"n", n}, {"w", nullptr}, {"note", "phi already preserves K_n"}});
    }
    r.evidence["nonvacuous_power"] = witnesses;
  });
  return r;
}

CheckResult lemma_gen(const SuiteOptions& o, std::size_t count) {
  constexpr int kFirstN = 3;
  constexpr int kLastN = 6;
  auto r = run_trials(o, "lemma_gen", "kn_rewrite expresses K_n elements in the basis",
                      count * (kLastN - kFirstN + 1), [&](Trial& t) {
    const int n = kFirstN + static_cast<int>(static_cast<std::size_t>(t.index) / count);
    // Random F2 word pushed into K_n by a trailing power of x.
    FreeWord w = random_free_word(t.rng, 30);
    const long long ex = abelianize(w)[0];
    const long long m = n - 1;
    w = w * FreeWord::letter(1, -static_cast<int>(((ex % m) + m) % m));
    const FreeWord rewritten = kn_rewrite(w, n);
    if (rewritten.rank() != n || substitute(rewritten, kn_basis(n)) != w)
      t.fail({{"n", n}, {"w", f(w)}, {"rewritten", format_free(rewritten, FreeAlphabet::indexed)}},
             "substituting the basis does not give back w");
  });
  run_fixed(o, r, [&](Trial& t) {
    json ranks = json::array();
    for (int n = 2; n <= 10; ++n) {
      // y, x^{n-1}, x y x^{n-2}, ..., x^{n-2} y x, written out directly.
      std::vector<FreeWord> expected{parse_free("y"), FreeWord::letter(1, n - 1)};
      for (int i = 1; i <= n - 2; ++i)
        expected.push_back(parse_free("x^" + std::to_string(i) + " y x^" + std::to_string(n - 1 - i)));
      const auto basis = kn_basis(n);
      if (basis != expected) t.fail({{"n", n}}, "basis differs from y, x^{n-1}, x^i y x^{n-1-i}");
      for (const auto& g : basis)
        if (!kn_member(g, n)) t.fail({{"n", n}, {"g", f(g)}}, "basis element is not in K_n");
      const SubgroupGraph graph = stallings_graph(basis, 2);
      if (!graph.is_folded() || !graph.is_core()) t.fail({{"n", n}}, "Stallings graph is not a folded core graph");
      if (graph.subgroup_rank() != n)
        t.fail({{"n", n}, {"rank", graph.subgroup_rank()}}, "Stallings rank differs from n");
      ranks.push_back({{"n", n}, {"rank", graph.subgroup_rank()}, {"vertices", graph.vertex_count()}});
    }
    r.evidence["stallings"] = ranks;
  });
  return r;
}

CheckResult lemma_pos(const SuiteOptions& o, std::size_t count) {
  return run_trials(o, "lemma_pos",
                    "sigma2^k1 sigma1^l1 ... sigma2^km sigma1^lm sigma2^n sigma1 is 1-positive (k>0, l<0, n>1)",
                    count, [&](Trial& t) {
    const int m = static_cast<int>(t.rng.uniform(0, 6));
    std::vector<BraidLetter> runs;
    for (int i = 0; i < m; ++i) {
      runs.push_back({2, static_cast<int>(t.rng.uniform(1, 5))});
      runs.push_back({1, static_cast<int>(t.rng.uniform(-5, -1))});
    }
    runs.push_back({2, static_cast<int>(t.rng.uniform(2, 5))});
    runs.push_back({1, 1});
    const BraidWord w(3, runs);
    const OrderVerdict s = t.oracle.sign(w);
    if (!(s.positive() && s.main_index == 1)) t.fail({{"word", b(w)}}, "sign is " + to_string(s));
  });
}

CheckResult case2_sandwich(const SuiteOptions& o, std::size_t count) {
  const BraidWord x = embed(FreeWord::letter(1));
  const BraidWord y = embed(FreeWord::letter(2));
  return run_trials(o, "case2_sandwich",
                    "1 < beta sigma2^k beta^-1 sigma2^-k < beta; x, y < sigma2^k beta sigma2^-k when u+k > 0",
                    count, [&](Trial& t) {
    const auto beta = draw_case2_beta(t, [](Rng& rng) { return embed(random_free_word(rng, 10)); });
    if (!beta) {
      t.fail(json::object(), "rejection sampling found no beta");
      return;
    }
    const int k = static_cast<int>(t.rng.uniform(1, 6));
    const BraidWord s = BraidWord::generator(2, k);
    const BraidWord s_inv = BraidWord::generator(2, -k);
    const BraidWord conj = *beta * s * braid_inverse(*beta);
    const BraidWord c = conj * s_inv;
    const json in{{"beta", b(*beta)}, {"k", k}};
    if (!t.oracle.sign(conj).positive()) t.fail(in, "beta sigma2^k beta^-1 is not positive");
    if (!t.oracle.sign(s * braid_inverse(*beta) * s_inv).negative())
      t.fail(in, "sigma2^k beta^-1 sigma2^-k is not negative");
    if (exponent_sum(c) != 0) t.fail(in, "commutator has nonzero exponent sum");
    if (!t.oracle.less(BraidWord(3), c)) t.fail(in, "1 < commutator fails");
    if (!t.oracle.less(c, *beta)) t.fail(in, "commutator < beta fails");

    // Conjugate so the leading σ2 run becomes positive, then both generators
    // sit below the conjugate.
    const int u = leading_sigma2(handle_reduce(*beta));
    const int shift = std::max(1, 1 - u);
    const BraidWord beta2 = BraidWord::generator(2, shift) * *beta * BraidWord::generator(2, -shift);
    if (!t.oracle.less(x, beta2)) t.fail(in, "x < sigma2^k beta sigma2^-k fails");
    if (!t.oracle.less(y, beta2)) t.fail(in, "y < sigma2^k beta sigma2^-k fails");
  });
}

CheckResult kn_sandwich(const SuiteOptions& o, std::size_t count) {
  constexpr int kFirstN = 3;
  constexpr int kLastN = 5;
  return run_trials(o, "kn_sandwich",
                    "beta sigma2^6k beta^-1 sigma2^-6k lies in K_n and between 1 and beta; basis below a "
                    "sigma2^6-conjugate of beta",
                    count * (kLastN - kFirstN + 1), [&](Trial& t) {
    const int n = kFirstN + static_cast<int>(static_cast<std::size_t>(t.index) / count);
    const auto basis = kn_basis(n);
    const auto beta = draw_case2_beta(t, [&](Rng& rng) {
      return embed(substitute(random_free_word(rng, 4, n), basis));
    });
    if (!beta) {
      t.fail({{"n", n}}, "rejection sampling found no beta");
      return;
    }
    const int k = static_cast<int>(t.rng.uniform(1, 2));
    const BraidWord s = BraidWord::generator(2, 6 * k);
    const BraidWord c = *beta * s * braid_inverse(*beta) * braid_inverse(s);
    const json in{{"n", n}, {"beta", b(*beta)}, {"k", k}};
    if (!kn_member(commutator_rewrite(*beta), n)) t.fail(in, "beta is not in K_n");
    if (!kn_member(commutator_rewrite(c), n)) t.fail(in, "commutator left K_n");
    if (!t.oracle.less(BraidWord(3), c)) t.fail(in, "1 < commutator fails");
    if (!t.oracle.less(c, *beta)) t.fail(in, "commutator < beta fails");

    // σ2^{6j} β σ2^{-6j} = σ2^{u'} σ1 w with u' > 1, and every basis element
    // lies below it.
    const int u = leading_sigma2(handle_reduce(*beta));
    int j = 1;
    while (u + 6 * j <= 1) ++j;
    const BraidWord beta2 = BraidWord::generator(2, 6 * j) * *beta * BraidWord::generator(2, -6 * j);
    if (!kn_member(commutator_rewrite(beta2), n)) t.fail(in, "sigma2^6j conjugate left K_n");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const BraidWord g = embed(basis[i]);
      if (!t.oracle.less(BraidWord(3), g)) t.fail(in, "basis element g" + std::to_string(i + 1) + " is not > 1");
      if (!t.oracle.less(g, beta2))
        t.fail(in, "g" + std::to_string(i + 1) + " < sigma2^6j beta sigma2^-6j fails");
    }
  });
}

CheckResult braid_identities(const SuiteOptions& o) {
  CheckResult r;
  r.name = "braid_identities";
  r.property = "sigma1^k sigma2 sigma1 = sigma2 sigma1 sigma2^k and sigma1^-1 sigma2^k sigma1 = "
               "sigma2 sigma1^k sigma2^-1, k in [-5, 5]";
  r.trials = 1;
  run_fixed(o, r, [&](Trial& t) {
    for (int k = -5; k <= 5; ++k) {
      const BraidWord s1k = braid_power(kSigma1, k);
      const BraidWord s2k = braid_power(kSigma2, k);
      const std::pair<BraidWord, BraidWord> pairs[2] = {
          {s1k * kSigma2 * kSigma1, kSigma2 * kSigma1 * s2k},
          {braid_inverse(kSigma1) * s2k * kSigma1, kSigma2 * s1k * braid_inverse(kSigma2)}};
      for (int i = 0; i < 2; ++i) {
        const auto& [lhs, rhs] = pairs[i];
        if (!braid_equal(lhs, rhs) || !t.oracle.sign(braid_inverse(lhs) * rhs).trivial())
          t.fail({{"identity", i + 1}, {"k", k}, {"lhs", b(lhs)}, {"rhs", b(rhs)}}, "identity fails");
      }
    }
  });
  return r;
}

CheckResult case1_cofinality(const SuiteOptions& o) {
  CheckResult r;
  r.name = "case1_cofinality";
  r.property = "for beta = Delta^2p sigma2^-6p: Delta^2 < beta^2, and beta powers exceed every basis generator";
  r.trials = 1;
  run_fixed(o, r, [&](Trial& t) {
    std::vector<BraidWord> targets{embed(FreeWord::letter(1)), embed(FreeWord::letter(2))};
    for (const auto& g : kn_basis(3)) targets.push_back(embed(g));
    json bounds = json::array();
    for (int p = 1; p <= 4; ++p) {
      const BraidWord beta = delta(2 * p) * BraidWord::generator(2, -6 * p);
      const json in{{"p", p}};
      if (exponent_sum(beta) != 0) t.fail(in, "beta has nonzero exponent sum");
      if (!commutes(beta, kSigma2)) t.fail(in, "beta does not commute with sigma2");
      const OrderVerdict s = t.oracle.sign(beta);
      if (!(s.positive() && s.main_index == 1)) t.fail(in, "beta is " + to_string(s));
      if (!t.oracle.less(delta(2), beta * beta)) t.fail(in, "Delta^2 < beta^2 fails");
      // Least power of beta above every target.
      int found = 0;
      for (int k = 1; k <= 64 && found == 0; ++k) {
        const BraidWord bk = braid_power(beta, k);
        bool above = true;
        for (const auto& g : targets) above = above && t.oracle.less(g, bk);
        if (above) found = k;
      }
      if (found == 0) t.fail(in, "no power of beta up to 64 exceeds the generators");
      bounds.push_back({{"p", p}, {"k", found}});
    }
    r.evidence["cofinal_powers"] = bounds;
  });
  return r;
}

CheckResult no_neutral_commutators(const SuiteOptions& o, std::size_t count) {
  return run_trials(o, "no_neutral_commutators", "nontrivial elements of [B3,B3] have main index 1", count,
                    [&](Trial& t) {
    FreeWord w = random_free_word(t.rng, 20);
    if (w.empty()) w = FreeWord::letter(2, -1);
    const OrderVerdict s = t.oracle.sign(embed(w));
    if (s.main_index != 1) t.fail({{"w", f(w)}}, "sign is " + to_string(s));
  });
}

CheckResult rewrite_round_trips(const SuiteOptions& o, std::size_t count) {
  return run_trials(o, "rewrite_round_trips", "commutator_rewrite inverts embed", count, [&](Trial& t) {
    const FreeWord w = random_free_word(t.rng, 40);
    const FreeWord back = commutator_rewrite(embed(w));
    if (back != w) t.fail({{"w", f(w)}, {"rewrite", f(back)}}, "rewrite(embed(w)) != w");
    const BraidWord beta = random_zero_sum_braid(t.rng, 60);
    if (!braid_equal(embed(commutator_rewrite(beta)), beta))
      t.fail({{"beta", b(beta)}}, "embed(rewrite(beta)) != beta");
  });
}

CheckResult convexity_probes(const SuiteOptions& o, std::size_t radius) {
  CheckResult r;
  r.name = "convexity_probes";
  r.property = "proper nontrivial subgroups have re-checkable non-convexity witnesses; the trivial one none";
  r.trials = 1;
  run_fixed(o, r, [&](Trial& t) {
    struct Case {
      ExoticContext ctx;
      std::vector<std::string> gens;
    };
    const std::vector<Case> cases{{ExoticContext::f2(), {"x"}},
                                  {ExoticContext::f2(), {"y"}},
                                  {ExoticContext::f2(), {"x^2", "y"}},
                                  {ExoticContext::f2(), {"y", "x^2", "x y x"}},
                                  {ExoticContext::kn(3), {"g1"}},
                                  {ExoticContext::kn(3), {"g2", "g3"}}};
    json found = json::array();
    for (const auto& c : cases) {
      std::vector<FreeWord> gens;
      for (const auto& g : c.gens) gens.push_back(parse_free(g, c.ctx.rank()));
      ConvexityOptions options;
      options.radius = radius;
      const ConvexityResult res = convexity_probe(gens, c.ctx, options);
      const json in{{"context", c.ctx.name()}, {"generators", c.gens}, {"radius", radius}};
      if (!res.witness) {
        t.fail(in, "no witness found (inconclusive search)");
        continue;
      }
      if (!witness_is_valid(*res.witness, gens)) t.fail(in, "witness does not re-check");
      const auto fmt = [&](const FreeWord& w) {
        return format_free(w, c.ctx.is_kn() ? FreeAlphabet::indexed : FreeAlphabet::automatic);
      };
      found.push_back({{"context", c.ctx.name()}, {"generators", c.gens}, {"c_low", fmt(res.witness->c_low)},
                       {"g", fmt(res.witness->g)}, {"c_high", fmt(res.witness->c_high)},
                       {"ball_index", res.witness_index}});
    }
    const ConvexityResult trivial = convexity_probe({FreeWord(2)}, ExoticContext::f2(), {radius, {}, 64});
    if (trivial.witness || !trivial.vacuous) t.fail({{"generators", {""}}}, "trivial subgroup produced a witness");
    r.evidence["witnesses"] = found;
    r.evidence["note"] = "a missing witness would be inconclusive, not a proof of convexity";
  });
  return r;
}

CheckResult conradian_witness(const SuiteOptions& o, std::size_t radius) {
  CheckResult r;
  r.name = "conradian_witness";
  r.property = "some g, h > 1 have h g^2 < g, so the order is not Conradian";
  r.trials = 1;
  run_fixed(o, r, [&](Trial& t) {
    json found = json::array();
    for (const auto& ctx : {ExoticContext::f2(), ExoticContext::kn(3)}) {
      const auto pair = conradian_violation_search(ctx, radius);
      if (!pair) {
        t.fail({{"context", ctx.name()}, {"radius", radius}}, "no violating pair found");
        continue;
      }
      const auto& [g, h] = *pair;
      const FreeWord one(ctx.rank());
      const bool ok = exotic_compare(one, g, ctx) == Ordering::less &&
                      exotic_compare(one, h, ctx) == Ordering::less &&
                      exotic_compare(h * g * g, g, ctx) == Ordering::less;
      const auto fmt = [&](const FreeWord& w) {
        return format_free(w, ctx.is_kn() ? FreeAlphabet::indexed : FreeAlphabet::automatic);
      };
      if (!ok) t.fail({{"context", ctx.name()}, {"g", fmt(g)}, {"h", fmt(h)}}, "pair does not re-check");
      found.push_back({{"context", ctx.name()}, {"g", fmt(g)}, {"h", fmt(h)}});
    }
    r.evidence["pairs"] = found;
  });
  return r;
}

}  // namespace checks

bool ExperimentReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

std::uint64_t ExperimentReport::total_steps() const {
  std::uint64_t s = 0;
  for (const auto& c : checks) s += c.steps;
  return s;
}

nlohmann::ordered_json ExperimentReport::to_json() const {
  json out;
  out["seed"] = seed;
  out["trials"] = trials;
  out["all_passed"] = all_passed();
  out["total_steps"] = total_steps();
  out["checks"] = json::array();
  for (const auto& c : checks) {
    json j;
    j["name"] = c.name;
    j["property"] = c.property;
    j["status"] = c.passed() ? "pass" : "fail";
    j["trials"] = c.trials;
    j["failed"] = c.failures.size();
    j["steps"] = c.steps;
    if (!c.evidence.is_null()) j["evidence"] = c.evidence;
    j["failures"] = json::array();
    for (const auto& fl : c.failures)
      j["failures"].push_back({{"trial", fl.trial}, {"inputs", fl.inputs}, {"detail", fl.detail}});
    out["checks"].push_back(std::move(j));
  }
  return out;
}

std::string ExperimentReport::to_text() const {
  std::ostringstream os;
  os << "seed " << seed << ", " << trials << " trials per check\n";
  for (const auto& c : checks) {
    os << (c.passed() ? "PASS " : "FAIL ") << c.name << "  (" << c.trials - std::min(c.trials, c.failures.size())
       << "/" << c.trials << " trials clean, " << c.steps << " reduction steps)\n";
    for (const auto& fl : c.failures)
      os << "    trial " << fl.trial << ": " << fl.detail << "  " << fl.inputs.dump() << "\n";
  }
  os << (all_passed() ? "all checks passed" : "some checks FAILED") << ", " << total_steps()
     << " reduction steps\n";
  return os.str();
}

ExperimentReport lemma_suite(const SuiteOptions& o) {
  if (o.trials < 1) throw DomainError("lemma_suite needs at least one trial");
  const std::size_t n = o.trials;
  ExperimentReport report;
  report.seed = o.seed;
  report.trials = n;
  auto& c = report.checks;
  c.push_back(checks::order_trichotomy(o, n));
  c.push_back(checks::order_transitivity(o, n));
  c.push_back(checks::order_left_invariance(o, n));
  c.push_back(checks::order_cone_closure(o, n));
  c.push_back(checks::reduction_soundness(o, n));
  c.push_back(checks::sign_antisymmetry(o, n));
  c.push_back(checks::oracle_consistency(o, n));
  c.push_back(checks::subword_property(o, n));
  c.push_back(checks::lemma_conform(o, n));
  c.push_back(checks::lemma_fix(o, n));
  c.push_back(checks::lemma_gen(o, n));
  c.push_back(checks::lemma_pos(o, n));
  c.push_back(checks::case2_sandwich(o, n));
  c.push_back(checks::kn_sandwich(o, n));
  c.push_back(checks::braid_identities(o));
  c.push_back(checks::case1_cofinality(o));
  c.push_back(checks::no_neutral_commutators(o, n));
  c.push_back(checks::rewrite_round_trips(o, n));
  c.push_back(checks::convexity_probes(o, 8));
  c.push_back(checks::conradian_witness(o, 6));
  return report;
}

}  // namespace braidlab
