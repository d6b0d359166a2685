#include "braidlab/exotic_order.hpp"

#include <array>
#include <charconv>
#include <cstdlib>

#include "braidlab/errors.hpp"

namespace braidlab {
namespace {

// σ1^s g σ1^-s for g in {x, x^-1}, computed by s applications of ψ^-1.
FreeWord sigma1_conjugate_naive(long long s, const FreeWord& g) {
  static const GroupAutomorphism psi = psi_automorphism();
  return apply_automorphism(psi, g, -s);
}

struct ConjugationTables {
  // conj[r][0] = σ1^r x σ1^-r, conj[r][1] = σ1^r x^-1 σ1^-r, r in 0..5.
  std::array<std::array<FreeWord, 2>, 6> conj;
  // σ1^6 agrees with c = σ1^6 Δ^-2 up to the central Δ^2, and c lies in F2.
  FreeWord c;
  FreeWord c_inv;
};

FreeWord rewrite_naive(const BraidWord& b) {
  const FreeWord x = FreeWord::letter(1, 1);
  const FreeWord x_inv = FreeWord::letter(1, -1);
  std::vector<FreeLetter> runs;
  long long t = 0;
  for (int l : b.signed_letters()) {
    if (std::abs(l) == 1) {
      t += l > 0 ? 1 : -1;
      continue;
    }
    const FreeWord h = l > 0 ? sigma1_conjugate_naive(t, x_inv) : sigma1_conjugate_naive(t - 1, x);
    runs.insert(runs.end(), h.letters().begin(), h.letters().end());
    t += l > 0 ? 1 : -1;
  }
  return FreeWord(2, std::move(runs));
}

const ConjugationTables& tables() {
  static const ConjugationTables t = [] {
    ConjugationTables out;
    for (int r = 0; r < 6; ++r) {
      out.conj[static_cast<std::size_t>(r)][0] = sigma1_conjugate_naive(r, FreeWord::letter(1, 1));
      out.conj[static_cast<std::size_t>(r)][1] = sigma1_conjugate_naive(r, FreeWord::letter(1, -1));
    }
    out.c = rewrite_naive(BraidWord::generator(1, 6) * delta(-2));
    out.c_inv = free_inverse(out.c);
    return out;
  }();
  return t;
}

// σ1^s g σ1^-s, with s = 6q + r: c^q (σ1^r g σ1^-r) c^-q.
void emit_conjugate(std::vector<FreeLetter>& runs, long long s, int which) {
  const auto& t = tables();
  long long q = s / 6;
  long long r = s % 6;
  if (r < 0) {
    r += 6;
    --q;
  }
  const FreeWord& outer = q >= 0 ? t.c : t.c_inv;
  const long long reps = q >= 0 ? q : -q;
  for (long long k = 0; k < reps; ++k) runs.insert(runs.end(), outer.letters().begin(), outer.letters().end());
  const FreeWord& core = t.conj[static_cast<std::size_t>(r)][static_cast<std::size_t>(which)];
  runs.insert(runs.end(), core.letters().begin(), core.letters().end());
  const FreeWord& back = q >= 0 ? t.c_inv : t.c;
  for (long long k = 0; k < reps; ++k) runs.insert(runs.end(), back.letters().begin(), back.letters().end());
}

}  // namespace

BraidWord embed(const FreeWord& w) {
  if (w.rank() != 2) throw DomainError("embed expects a word in F2 = <x, y>");
  std::vector<BraidLetter> runs;
  for (const auto& l : w.letters()) {
    const int reps = std::abs(l.exponent);
    for (int k = 0; k < reps; ++k) {
      if (l.index == 1) {
        if (l.exponent > 0) runs.insert(runs.end(), {{1, 1}, {2, -1}});
        else runs.insert(runs.end(), {{2, 1}, {1, -1}});
      } else {
        if (l.exponent > 0) runs.insert(runs.end(), {{1, 2}, {2, -2}});
        else runs.insert(runs.end(), {{2, 2}, {1, -2}});
      }
    }
  }
  return BraidWord(3, std::move(runs));
}

FreeWord commutator_rewrite(const BraidWord& b) {
  if (b.strands() != 3) throw DomainError("commutator_rewrite expects a 3-strand braid");
  if (exponent_sum(b) != 0)
    throw DomainError("braid has exponent sum " + std::to_string(exponent_sum(b)) +
                      ", so it is not in the commutator subgroup");
  // Schreier rewriting with transversal {σ1^t}: a σ2 read at height t
  // contributes σ1^t σ2 σ1^-(t+1) = σ1^t x^-1 σ1^-t, and a σ2^-1 contributes
  // σ1^t σ2^-1 σ1^-(t-1) = σ1^(t-1) x σ1^-(t-1).
  std::vector<FreeLetter> runs;
  long long t = 0;
  for (int l : b.signed_letters()) {
    if (l == 2) emit_conjugate(runs, t, 1);
    else if (l == -2) emit_conjugate(runs, t - 1, 0);
    t += l > 0 ? 1 : -1;
  }
  return FreeWord(2, std::move(runs));
}

ExoticContext ExoticContext::f2() { return {}; }

ExoticContext ExoticContext::kn(int n) {
  ExoticContext ctx;
  ctx.basis_ = kn_basis(n);
  ctx.n_ = n;
  return ctx;
}

ExoticContext ExoticContext::parse(std::string_view text) {
  if (text == "f2" || text == "F2") return f2();
  if (text.starts_with("kn:") || text.starts_with("Kn:")) {
    const auto digits = text.substr(3);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return kn(n);
  }
  throw DomainError("unknown context '" + std::string(text) + "' (expected f2 or kn:<n>)");
}

std::string ExoticContext::name() const { return is_kn() ? "kn:" + std::to_string(n_) : "f2"; }

FreeWord ExoticContext::to_f2(const FreeWord& w) const {
  if (w.rank() != rank())
    throw DomainError("context " + name() + " expects words of rank " + std::to_string(rank()));
  if (!is_kn()) return w;
  return substitute(w, basis_);
}

OrderVerdict exotic_sign(const FreeWord& w, const ExoticContext& ctx) {
  return dehornoy_sign(embed(ctx.to_f2(w)));
}

Ordering exotic_compare(const FreeWord& u, const FreeWord& v, const ExoticContext& ctx) {
  const OrderVerdict s = exotic_sign(free_inverse(u) * v, ctx);
  if (s.positive()) return Ordering::less;
  if (s.trivial()) return Ordering::equal;
  return Ordering::greater;
}

}  // namespace braidlab
