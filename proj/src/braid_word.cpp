#include "braidlab/braid_word.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

#include "braidlab/errors.hpp"

namespace braidlab {
namespace {

void check_strands(int strands) {
  if (strands < 2) throw DomainError("braid words need at least 2 strands");
}

void check_index(int index, int strands) {
  if (index < 1 || index > strands - 1)
    throw DomainError("generator index " + std::to_string(index) +
                      " out of range for " + std::to_string(strands) + " strands");
}

// Appends a run, merging with the tail and dropping zero runs.
void push_run(std::vector<BraidLetter>& out, BraidLetter run) {
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

BraidWord::BraidWord(int strands) : strands_(strands) { check_strands(strands); }

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands) {
  check_strands(strands);
  letters_.reserve(letters.size());
  for (const auto& l : letters) {
    check_index(l.index, strands);
    push_run(letters_, l);
  }
}

BraidWord BraidWord::generator(int index, int exponent, int strands) {
  return BraidWord(strands, {{index, exponent}});
}

BraidWord BraidWord::from_signed_letters(int strands, std::span<const int> letters) {
  BraidWord w(strands);
  for (int l : letters) {
    const int index = std::abs(l);
    check_index(index, strands);
    push_run(w.letters_, {index, l > 0 ? 1 : -1});
  }
  return w;
}

std::size_t BraidWord::length() const noexcept {
  std::size_t n = 0;
  for (const auto& l : letters_) n += static_cast<std::size_t>(std::abs(l.exponent));
  return n;
}

std::vector<int> BraidWord::signed_letters() const {
  std::vector<int> out;
  out.reserve(length());
  for (const auto& l : letters_) {
    const int s = l.exponent > 0 ? l.index : -l.index;
    for (int k = 0; k < std::abs(l.exponent); ++k) out.push_back(s);
  }
  return out;
}

BraidWord parse_braid(std::string_view text, int strands) {
  check_strands(strands);
  std::vector<BraidLetter> runs;
  std::size_t pos = 0;
  const auto at_end = [&] { return pos >= text.size(); };
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  const auto is_digit = [](char c) { return c >= '0' && c <= '9'; };

  // INT := [1-9][0-9]*
  const auto read_int = [&](std::size_t token_start) -> int {
    if (at_end() || text[pos] < '1' || text[pos] > '9')
      throw ParseError("expected a positive integer", at_end() ? pos : pos);
    long long v = 0;
    while (!at_end() && is_digit(text[pos])) {
      v = v * 10 + (text[pos] - '0');
      if (v > std::numeric_limits<int>::max())
        throw ParseError("integer too large", token_start);
      ++pos;
    }
    return static_cast<int>(v);
  };

  while (true) {
    while (!at_end() && is_space(text[pos])) ++pos;
    if (at_end()) break;
    const std::size_t start = pos;
    const char c = text[pos];
    if (c == 's') {
      ++pos;
      const int index = read_int(start);
      int exponent = 1;
      if (!at_end() && text[pos] == '^') {
        ++pos;
        bool negative = false;
        if (!at_end() && text[pos] == '-') {
          negative = true;
          ++pos;
        }
        exponent = read_int(start);
        if (negative) exponent = -exponent;
      }
      if (!at_end() && !is_space(text[pos]))
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      if (index > strands - 1)
        throw DomainError("generator index " + std::to_string(index) +
                          " out of range for " + std::to_string(strands) + " strands");
      runs.push_back({index, exponent});
    } else if (c == 'a' || c == 'A' || c == 'b' || c == 'B') {
      if (strands != 3) throw ParseError("compact a/A/b/B form is only defined for 3 strands", start);
      while (!at_end() && !is_space(text[pos])) {
        switch (text[pos]) {
          case 'a': runs.push_back({1, 1}); break;
          case 'A': runs.push_back({1, -1}); break;
          case 'b': runs.push_back({2, 1}); break;
          case 'B': runs.push_back({2, -1}); break;
          default:
            throw ParseError(std::string("unexpected character '") + text[pos] + "'", pos);
        }
        ++pos;
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }
  return BraidWord(strands, std::move(runs));
}

std::string format_braid(const BraidWord& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(l.index);
    if (l.exponent != 1) {
      out += '^';
      out += std::to_string(l.exponent);
    }
  }
  return out;
}

BraidWord free_reduce_braid(const BraidWord& w) { return BraidWord(w.strands(), w.letters()); }

BraidWord braid_product(const BraidWord& u, const BraidWord& v) {
  if (u.strands() != v.strands())
    throw DomainError("strand-count mismatch: " + std::to_string(u.strands()) + " vs " +
                      std::to_string(v.strands()));
  std::vector<BraidLetter> runs = u.letters();
  runs.insert(runs.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(runs));
}

BraidWord braid_inverse(const BraidWord& u) {
  std::vector<BraidLetter> runs(u.letters().rbegin(), u.letters().rend());
  for (auto& l : runs) l.exponent = -l.exponent;
  return BraidWord(u.strands(), std::move(runs));
}

BraidWord braid_power(const BraidWord& u, long long k) {
  const BraidWord base = k < 0 ? braid_inverse(u) : u;
  std::vector<BraidLetter> runs;
  const long long n = k < 0 ? -k : k;
  runs.reserve(base.letters().size() * static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    runs.insert(runs.end(), base.letters().begin(), base.letters().end());
  return BraidWord(u.strands(), std::move(runs));
}

long long exponent_sum(const BraidWord& w, std::optional<int> generator) {
  long long s = 0;
  for (const auto& l : w.letters())
    if (!generator || l.index == *generator) s += l.exponent;
  return s;
}

BraidWord delta(long long power) {
  static const BraidWord half_twist(3, {{1, 1}, {2, 1}, {1, 1}});
  return braid_power(half_twist, power);
}

}  // namespace braidlab
