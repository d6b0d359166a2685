#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "braidlab/braid_word.hpp"
#include "braidlab/dehornoy.hpp"
#include "braidlab/free_group.hpp"

namespace braidlab {

/// x -> σ1 σ2^-1, y -> σ1^2 σ2^-2, identifying F2 with [B3, B3].
BraidWord embed(const FreeWord& w);

/// Inverse of `embed` on braids of total exponent sum 0. Throws DomainError
/// otherwise. The output is only determined up to free equality with the
/// preimage; embed(commutator_rewrite(b)) equals b as a braid.
FreeWord commutator_rewrite(const BraidWord& b);

/// Where an exotic comparison takes place: F2 itself, or K_n with words over
/// its basis g1..gn.
class ExoticContext {
 public:
  static ExoticContext f2();
  static ExoticContext kn(int n);
  /// "f2" or "kn:<n>".
  static ExoticContext parse(std::string_view text);

  bool is_kn() const noexcept { return n_ != 0; }
  int n() const noexcept { return n_; }
  /// Rank of the words this context accepts.
  int rank() const noexcept { return is_kn() ? n_ : 2; }
  const std::vector<FreeWord>& basis() const noexcept { return basis_; }
  std::string name() const;

  /// Image in F2 (identity for the F2 context). Throws DomainError on a rank
  /// mismatch.
  FreeWord to_f2(const FreeWord& w) const;

 private:
  int n_ = 0;
  std::vector<FreeWord> basis_;
};

/// Dehornoy sign of embed(to_f2(w)).
OrderVerdict exotic_sign(const FreeWord& w, const ExoticContext& ctx);

/// u < v iff u^-1 v is Dehornoy-positive once mapped into B3.
Ordering exotic_compare(const FreeWord& u, const FreeWord& v, const ExoticContext& ctx);

}  // namespace braidlab
