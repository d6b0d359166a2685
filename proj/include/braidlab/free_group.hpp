#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidlab/burau.hpp"  // BigInt

namespace braidlab {

/// One run a_index^exponent of a free-group word.
struct FreeLetter {
  int index = 1;
  int exponent = 1;

  friend bool operator==(const FreeLetter&, const FreeLetter&) = default;
};

/// Freely reduced word over letters 1..rank. For rank 2, letter 1 is x and
/// letter 2 is y. Always stored reduced, so == is equality in the free group.
class FreeWord {
 public:
  explicit FreeWord(int rank = 2);
  FreeWord(int rank, std::vector<FreeLetter> letters);

  static FreeWord letter(int index, int exponent = 1, int rank = 2);
  /// +a is letter a, -a its inverse.
  static FreeWord from_signed_letters(int rank, std::span<const int> letters);

  int rank() const noexcept { return rank_; }
  const std::vector<FreeLetter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t length() const noexcept;
  std::vector<int> signed_letters() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<FreeLetter> letters_;
};

enum class FreeAlphabet {
  automatic,  // x, y up to rank 2; g1..gn above
  indexed,    // always g1..gn
};

/// Tokens "x", "y", "g<INT>" with optional "^SINT", whitespace separated, or
/// a compact token over {x,X,y,Y}; a lone "1" token is the identity.
/// Throws ParseError / DomainError.
FreeWord parse_free(std::string_view text, int rank = 2);
std::string format_free(const FreeWord& w, FreeAlphabet alphabet = FreeAlphabet::automatic);

FreeWord free_reduce(const FreeWord& w);
FreeWord free_product(const FreeWord& u, const FreeWord& v);
FreeWord free_inverse(const FreeWord& u);
FreeWord free_power(const FreeWord& u, long long k);

inline FreeWord operator*(const FreeWord& u, const FreeWord& v) { return free_product(u, v); }

/// Exponent-sum vector, one entry per letter.
std::vector<long long> abelianize(const FreeWord& w);

/// Homomorphic substitution: letter a goes to images[a-1]. The images share
/// one rank, which becomes the rank of the result.
FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images);

/// Endomorphism of a free group given by generator images, optionally with a
/// verified inverse.
class GroupAutomorphism {
 public:
  GroupAutomorphism(std::string name, std::vector<FreeWord> images,
                    std::optional<std::vector<FreeWord>> inverse_images = std::nullopt);

  const std::string& name() const noexcept { return name_; }
  int rank() const noexcept { return rank_; }
  const std::vector<FreeWord>& images() const noexcept { return images_; }
  const std::optional<std::vector<FreeWord>>& inverse_images() const noexcept {
    return inverse_images_;
  }

  /// The inverse automorphism; throws DomainError when none is stored.
  GroupAutomorphism inverse() const;

 private:
  std::string name_;
  int rank_;
  std::vector<FreeWord> images_;
  std::optional<std::vector<FreeWord>> inverse_images_;
};

/// (a ∘ b)(g) = a(b(g)). The inverse is carried along when both have one.
GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b);

/// Applies `a` |power| times, through the stored inverse for negative power.
FreeWord apply_automorphism(const GroupAutomorphism& a, const FreeWord& w, long long power = 1);

/// Automorphisms of F2 = <x, y>.
GroupAutomorphism identity_automorphism(int rank = 2);
/// x -> x y^-1 x, y -> x y^-1 x^2 (conjugation g -> σ2^-1 g σ2).
GroupAutomorphism phi_automorphism();
/// x -> x^-1, y -> y^-1 (conjugation by Δ).
GroupAutomorphism delta_prime_automorphism();
/// δ' ∘ φ ∘ δ' (conjugation g -> σ1^-1 g σ1).
GroupAutomorphism psi_automorphism();

/// Looks up "phi", "psi", "delta", "id" (also "delta-prime", "identity").
GroupAutomorphism automorphism_by_name(std::string_view name);

/// 2×2 integer matrix.
struct IntMatrix2 {
  BigInt a = 0, b = 0, c = 0, d = 0;  // [[a, b], [c, d]]

  static IntMatrix2 identity() { return {1, 0, 0, 1}; }
  BigInt determinant() const { return a * d - b * c; }

  friend IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c,
            l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 matrix_power(const IntMatrix2& m, unsigned k);

/// Columns are the abelianized images of x and y. Rank-2 only.
IntMatrix2 automorphism_abelianization(const GroupAutomorphism& a);

// ---------------------------------------------------------------------------
// K_n = kernel of F2 -> Z/(n-1), x -> 1, y -> 0.

bool kn_member(const FreeWord& w, int n);

/// One entry x^coset g = h x^target of the Schreier table, for transversal
/// 1, x, ..., x^{n-2} and g in {x, x^-1, y, y^-1} (generator 1..4).
struct SchreierEntry {
  int coset = 0;
  int generator = 1;
  FreeWord h;
  int target = 0;
};

std::vector<SchreierEntry> schreier_table(int n);

/// y, x^{n-1}, x y x^{n-2}, ..., x^{n-2} y x, derived from the Schreier table.
std::vector<FreeWord> kn_basis(int n);

/// Rewrites w in K_n as a word over the kn_basis letters g1..gn (rank n).
/// Throws DomainError if w is not in K_n.
FreeWord kn_rewrite(const FreeWord& w, int n);

}  // namespace braidlab
