#include "braidlab/free_group.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "braidlab/errors.hpp"

namespace braidlab {
namespace {

void check_rank(int rank) {
  if (rank < 1) throw DomainError("free group rank must be at least 1");
}

void check_letter(int index, int rank) {
  if (index < 1 || index > rank)
    throw DomainError("letter " + std::to_string(index) + " out of range for rank " +
                      std::to_string(rank));
}

void push_run(std::vector<FreeLetter>& out, FreeLetter run) {
  while (run.exponent != 0) {
    if (out.empty() || out.back().index != run.index) {
      out.push_back(run);
      return;
    }
    run.exponent += out.back().exponent;
    out.pop_back();
    if (run.exponent == 0) return;
  }
}

}  // namespace

FreeWord::FreeWord(int rank) : rank_(rank) { check_rank(rank); }

FreeWord::FreeWord(int rank, std::vector<FreeLetter> letters) : rank_(rank) {
  check_rank(rank);
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    check_letter(l.index, rank);
    push_run(letters_, l);
  }
}

FreeWord FreeWord::letter(int index, int exponent, int rank) {
  return FreeWord(rank, {{index, exponent}});
}

FreeWord FreeWord::from_signed_letters(int rank, std::span<const int> letters) {
  FreeWord w(rank);
  for (int l : letters) {
    check_letter(std::abs(l), rank);
    push_run(w.letters_, {std::abs(l), l > 0 ? 1 : -1});
  }
  return w;
}

std::size_t FreeWord::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

std::vector<int> FreeWord::signed_letters() const {
  std::vector<int> out;
  out.reserve(length());
  for (const auto& l : letters_)
    for (int k = 0; k < std::abs(l.exponent); ++k)
      out.push_back(l.exponent > 0 ? l.index : -l.index);
  return out;
}

FreeWord parse_free(std::string_view text, int rank) {
  check_rank(rank);
  std::vector<FreeLetter> runs;
  std::size_t pos = 0;
  const auto at_end = [&] { return pos >= text.size(); };
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  const auto read_int = [&]() -> int {
    if (at_end() || text[pos] < '1' || text[pos] > '9')
      throw ParseError("expected a positive integer", pos);
    long long v = 0;
    while (!at_end() && text[pos] >= '0' && text[pos] <= '9') {
      v = v * 10 + (text[pos] - '0');
      if (v > std::numeric_limits<int>::max()) throw ParseError("integer too large", pos);
      ++pos;
    }
    return static_cast<int>(v);
  };
  const auto add = [&](int index, int exponent, std::size_t at) {
    if (index > rank)
      throw DomainError("letter " + std::to_string(index) + " out of range for rank " +
                        std::to_string(rank) + " (offset " + std::to_string(at) + ")");
    runs.push_back({index, exponent});
  };

  while (true) {
    while (!at_end() && is_space(text[pos])) ++pos;
    if (at_end()) break;
    const std::size_t start = pos;
    std::size_t end = start;
    while (end < text.size() && !is_space(text[end])) ++end;
    const std::string_view token = text.substr(start, end - start);
    if (token == "1") {  // the identity, as printed by the CLI
      pos = end;
      continue;
    }

    const bool compact = token.find_first_not_of("xXyY") == std::string_view::npos;
    if (compact) {
      for (std::size_t k = 0; k < token.size(); ++k) {
        const char c = token[k];
        add(std::tolower(static_cast<unsigned char>(c)) == 'x' ? 1 : 2,
            std::isupper(static_cast<unsigned char>(c)) ? -1 : 1, start + k);
      }
      pos = end;
      continue;
    }

    int index = 0;
    const char c = text[pos];
    if (c == 'x' || c == 'y') {
      index = c == 'x' ? 1 : 2;
      ++pos;
    } else if (c == 'g' || c == 'G') {
      ++pos;
      index = read_int();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    int exponent = 1;
    if (!at_end() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (!at_end() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      exponent = read_int();
      if (negative) exponent = -exponent;
    }
    if (pos != end) throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
    add(index, exponent, start);
  }
  return FreeWord(rank, std::move(runs));
}

std::string format_free(const FreeWord& w, FreeAlphabet alphabet) {
  const bool named = alphabet == FreeAlphabet::automatic && w.rank() <= 2;
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    if (named) {
      out += l.index == 1 ? 'x' : 'y';
    } else {
      out += 'g';
      out += std::to_string(l.index);
    }
    if (l.exponent != 1) {
      out += '^';
      out += std::to_string(l.exponent);
    }
  }
  return out;
}

FreeWord free_reduce(const FreeWord& w) { return FreeWord(w.rank(), w.letters()); }

FreeWord free_product(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank())
    throw DomainError("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                      std::to_string(v.rank()));
  std::vector<FreeLetter> runs = u.letters();
  runs.insert(runs.end(), v.letters().begin(), v.letters().end());
  return FreeWord(u.rank(), std::move(runs));
}

FreeWord free_inverse(const FreeWord& u) {
  std::vector<FreeLetter> runs(u.letters().rbegin(), u.letters().rend());
  for (auto& l : runs) l.exponent = -l.exponent;
  return FreeWord(u.rank(), std::move(runs));
}

FreeWord free_power(const FreeWord& u, long long k) {
  const FreeWord base = k < 0 ? free_inverse(u) : u;
  std::vector<FreeLetter> runs;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i)
    runs.insert(runs.end(), base.letters().begin(), base.letters().end());
  return FreeWord(u.rank(), std::move(runs));
}

std::vector<long long> abelianize(const FreeWord& w) {
  std::vector<long long> v(static_cast<std::size_t>(w.rank()), 0);
  for (const auto& l : w.letters()) v[static_cast<std::size_t>(l.index - 1)] += l.exponent;
  return v;
}

FreeWord substitute(const FreeWord& w, std::span<const FreeWord> images) {
  if (images.size() != static_cast<std::size_t>(w.rank()))
    throw DomainError("substitution needs one image per letter");
  const int target_rank = images.empty() ? 1 : images.front().rank();
  std::vector<FreeLetter> runs;
  for (const auto& l : w.letters()) {
    const FreeWord& img = images[static_cast<std::size_t>(l.index - 1)];
    if (img.rank() != target_rank) throw DomainError("substitution images differ in rank");
    const bool inv = l.exponent < 0;
    for (int k = 0; k < std::abs(l.exponent); ++k) {
      if (inv) {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it)
          runs.push_back({it->index, -it->exponent});
      } else {
        runs.insert(runs.end(), img.letters().begin(), img.letters().end());
      }
    }
  }
  return FreeWord(target_rank, std::move(runs));
}

// ---------------------------------------------------------------------------

GroupAutomorphism::GroupAutomorphism(std::string name, std::vector<FreeWord> images,
                                     std::optional<std::vector<FreeWord>> inverse_images)
    : name_(std::move(name)),
      rank_(static_cast<int>(images.size())),
      images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (rank_ < 1) throw DomainError("automorphism needs at least one generator");
  for (const auto& img : images_)
    if (img.rank() != rank_) throw DomainError("automorphism image has the wrong rank");
  if (inverse_images_) {
    if (inverse_images_->size() != images_.size())
      throw DomainError("inverse has the wrong number of images");
    // The stored inverse must undo the map on generators, both ways.
    for (int g = 1; g <= rank_; ++g) {
      const FreeWord gen = FreeWord::letter(g, 1, rank_);
      const auto& fwd = images_[static_cast<std::size_t>(g - 1)];
      const auto& bwd = (*inverse_images_)[static_cast<std::size_t>(g - 1)];
      if (substitute(bwd, images_) != gen || substitute(fwd, *inverse_images_) != gen)
        throw DomainError("stored inverse of " + name_ + " does not invert it");
    }
  }
}

GroupAutomorphism GroupAutomorphism::inverse() const {
  if (!inverse_images_) throw DomainError("automorphism " + name_ + " has no stored inverse");
  return GroupAutomorphism(name_ + "^-1", *inverse_images_, images_);
}

GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b) {
  if (a.rank() != b.rank()) throw DomainError("cannot compose automorphisms of different rank");
  std::vector<FreeWord> images;
  for (const auto& img : b.images()) images.push_back(substitute(img, a.images()));
  std::optional<std::vector<FreeWord>> inverse;
  if (a.inverse_images() && b.inverse_images()) {
    inverse.emplace();
    for (const auto& img : *a.inverse_images())
      inverse->push_back(substitute(img, *b.inverse_images()));
  }
  return GroupAutomorphism(a.name() + "*" + b.name(), std::move(images), std::move(inverse));
}

FreeWord apply_automorphism(const GroupAutomorphism& a, const FreeWord& w, long long power) {
  if (w.rank() != a.rank())
    throw DomainError("word rank " + std::to_string(w.rank()) + " does not match automorphism rank " +
                      std::to_string(a.rank()));
  if (power < 0 && !a.inverse_images())
    throw DomainError("automorphism " + a.name() + " has no stored inverse");
  const std::vector<FreeWord>& images = power < 0 ? *a.inverse_images() : a.images();
  FreeWord out = w;
  for (long long k = 0; k < (power < 0 ? -power : power); ++k) out = substitute(out, images);
  return out;
}

GroupAutomorphism identity_automorphism(int rank) {
  std::vector<FreeWord> images;
  for (int g = 1; g <= rank; ++g) images.push_back(FreeWord::letter(g, 1, rank));
  return GroupAutomorphism("id", images, images);
}

GroupAutomorphism phi_automorphism() {
  return GroupAutomorphism("phi", {parse_free("x y^-1 x"), parse_free("x y^-1 x^2")},
                           std::vector<FreeWord>{parse_free("x^-1 y"), parse_free("x^-1 y x^-2 y")});
}

GroupAutomorphism delta_prime_automorphism() {
  std::vector<FreeWord> images{parse_free("x^-1"), parse_free("y^-1")};
  return GroupAutomorphism("delta", images, images);
}

GroupAutomorphism psi_automorphism() {
  const auto d = delta_prime_automorphism();
  const auto c = compose(d, compose(phi_automorphism(), d));
  return GroupAutomorphism("psi", c.images(), c.inverse_images());
}

GroupAutomorphism automorphism_by_name(std::string_view name) {
  if (name == "phi") return phi_automorphism();
  if (name == "psi") return psi_automorphism();
  if (name == "delta" || name == "delta-prime") return delta_prime_automorphism();
  if (name == "id" || name == "identity") return identity_automorphism();
  throw DomainError("unknown automorphism '" + std::string(name) + "' (expected phi, psi, delta, id)");
}

IntMatrix2 matrix_power(const IntMatrix2& m, unsigned k) {
  IntMatrix2 out = IntMatrix2::identity();
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

IntMatrix2 automorphism_abelianization(const GroupAutomorphism& a) {
  if (a.rank() != 2) throw DomainError("abelianization matrix is defined for rank 2");
  const auto cx = abelianize(a.images()[0]);
  const auto cy = abelianize(a.images()[1]);
  return {cx[0], cy[0], cx[1], cy[1]};
}

// ---------------------------------------------------------------------------

namespace {

void check_n(int n) {
  if (n < 2) throw DomainError("K_n needs n >= 2");
}

long long floor_mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

// x^i y x^-i
FreeWord y_conjugate(int i) {
  return FreeWord(2, {{1, i}, {2, 1}, {1, -i}});
}

}  // namespace

bool kn_member(const FreeWord& w, int n) {
  check_n(n);
  if (w.rank() != 2) throw DomainError("K_n membership is defined on F2 words");
  return floor_mod(abelianize(w)[0], n - 1) == 0;
}

std::vector<SchreierEntry> schreier_table(int n) {
  check_n(n);
  const int m = n - 1;
  std::vector<SchreierEntry> table;
  for (int i = 0; i <= n - 2; ++i) {
    // x^i x = h x^k with k = i + 1 mod m
    table.push_back({i, 1, i == n - 2 ? FreeWord::letter(1, m) : FreeWord(2), (i + 1) % m});
    // x^i x^-1
    table.push_back({i, 2, i == 0 ? FreeWord::letter(1, -m) : FreeWord(2), i == 0 ? m - 1 : i - 1});
    // x^i y^±1 = (x^i y^±1 x^-i) x^i
    const FreeWord c = y_conjugate(i);
    table.push_back({i, 3, c, i});
    table.push_back({i, 4, free_inverse(c), i});
  }
  return table;
}

std::vector<FreeWord> kn_basis(int n) {
  check_n(n);
  // Keep one of each {h, h^-1}, preferring the representative with positive
  // exponent sum.
  std::vector<FreeWord> gens;
  for (const auto& e : schreier_table(n)) {
    if (e.h.empty()) continue;
    const auto ab = abelianize(e.h);
    const FreeWord rep = ab[0] + ab[1] > 0 ? e.h : free_inverse(e.h);
    bool seen = false;
    for (const auto& g : gens) seen = seen || g == rep;
    if (!seen) gens.push_back(rep);
  }
  // Order as y, x^{n-1}, x y x^-1, ..., x^{n-2} y x^{-(n-2)}.
  const FreeWord x_power = FreeWord::letter(1, n - 1);
  std::vector<FreeWord> basis{y_conjugate(0), x_power};
  for (int i = 1; i <= n - 2; ++i) basis.push_back(y_conjugate(i));
  for (const auto& b : basis) {
    bool found = false;
    for (const auto& g : gens) found = found || g == b;
    if (!found) throw std::logic_error("Schreier table is missing an expected generator");
  }
  if (gens.size() != basis.size()) throw std::logic_error("unexpected Schreier generator");
  // Right-multiply the conjugates x^i y x^-i (i >= 1) by x^{n-1}.
  for (std::size_t k = 2; k < basis.size(); ++k) basis[k] = basis[k] * x_power;
  return basis;
}

FreeWord kn_rewrite(const FreeWord& w, int n) {
  check_n(n);
  if (!kn_member(w, n))
    throw DomainError("word " + format_free(w) + " is not in K_" + std::to_string(n));
  const auto table = schreier_table(n);
  const auto G = [](int index, int exponent) { return FreeLetter{index, exponent}; };

  // Basis expression of each Schreier generator h(i, j).
  const auto in_basis = [&](const SchreierEntry& e) -> std::vector<FreeLetter> {
    if (e.h.empty()) return {};
    switch (e.generator) {
      case 1: return {G(2, 1)};
      case 2: return {G(2, -1)};
      case 3: return e.coset == 0 ? std::vector{G(1, 1)} : std::vector{G(e.coset + 2, 1), G(2, -1)};
      default: return e.coset == 0 ? std::vector{G(1, -1)} : std::vector{G(2, 1), G(e.coset + 2, -1)};
    }
  };

  std::vector<FreeLetter> runs;
  int coset = 0;
  for (int l : w.signed_letters()) {
    const int generator = l == 1 ? 1 : l == -1 ? 2 : l == 2 ? 3 : 4;
    const SchreierEntry& e = table[static_cast<std::size_t>(coset * 4 + generator - 1)];
    const auto part = in_basis(e);
    runs.insert(runs.end(), part.begin(), part.end());
    coset = e.target;
  }
  return FreeWord(n, std::move(runs));
}

}  // namespace braidlab
