// Reference implementations used only by tests. Each one is written from the
// definitions, deliberately without sharing code paths with the library.
#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_int;

// Signed letters, one entry per unit generator.
using Letters = std::vector<int>;

inline Letters naive_free_reduce(Letters w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline Letters concat(const Letters& a, const Letters& b) {
  Letters r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline Letters invert(const Letters& a) {
  Letters r(a.rbegin(), a.rend());
  for (int& l : r) l = -l;
  return r;
}

// A handle is s_i^e v s_i^-e where every letter of v has index > i.
inline bool has_handle(const Letters& w) {
  for (std::size_t a = 0; a < w.size(); ++a) {
    const int i = std::abs(w[a]);
    for (std::size_t b = a + 1; b < w.size(); ++b) {
      const int j = std::abs(w[b]);
      if (j < i) break;
      if (j == i) {
        if (w[b] == -w[a]) return true;
        break;
      }
    }
  }
  return false;
}

// Definitional sign: +k / -k if the lowest index k occurs with one sign only,
// 0 for the empty word, and std::nullopt-like 99 if mixed.
inline int definitional_sign(const Letters& w) {
  if (w.empty()) return 0;
  int low = 1 << 20;
  for (int l : w) low = std::min(low, std::abs(l));
  bool pos = false;
  bool neg = false;
  for (int l : w) {
    if (l == low) pos = true;
    if (l == -low) neg = true;
  }
  if (pos && neg) return 99;
  return pos ? low : -low;
}

// Integer 2x2 matrix, used for the t = -1 specialisation of the reduced
// Burau representation, where every generator matrix is unimodular.
struct Mat {
  cpp_int a, b, c, d;
  friend Mat operator*(const Mat& l, const Mat& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const Mat&, const Mat&) = default;
};

// [[-t,1],[0,1]] and [[1,0],[t,-t]] at t = -1, with their inverses.
inline Mat burau_at_minus_one(const Letters& w) {
  Mat m{1, 0, 0, 1};
  for (int l : w) {
    switch (l) {
      case 1: m = m * Mat{1, 1, 0, 1}; break;
      case -1: m = m * Mat{1, -1, 0, 1}; break;
      case 2: m = m * Mat{1, 0, -1, 1}; break;
      case -2: m = m * Mat{1, 0, 1, 1}; break;
      default: std::abort();
    }
  }
  return m;
}

// Induced permutation of strands, as an image array.
inline std::vector<int> permutation(const Letters& w, int strands) {
  std::vector<int> p(static_cast<std::size_t>(strands));
  for (int i = 0; i < strands; ++i) p[static_cast<std::size_t>(i)] = i;
  for (int l : w) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(p[i], p[i + 1]);
  }
  return p;
}

// All reduced words of length <= r over letters +-1..+-rank, by brute force.
inline std::set<Letters> all_reduced(int rank, std::size_t r) {
  std::set<Letters> out;
  std::vector<int> alphabet;
  for (int i = 1; i <= rank; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  std::vector<Letters> frontier{{}};
  out.insert(Letters{});
  for (std::size_t len = 1; len <= r; ++len) {
    std::vector<Letters> next;
    for (const auto& w : frontier) {
      for (int a : alphabet) {
        Letters v = w;
        v.push_back(a);
        if (naive_free_reduce(v) == v) {
          out.insert(v);
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

// Elements of <gens> of length <= r, from products of at most `factors`
// generators and inverses. Complete when the generating set is Nielsen
// reduced and factors >= r.
inline std::set<Letters> naive_subgroup(const std::vector<Letters>& gens, std::size_t r, std::size_t factors) {
  std::vector<Letters> symmetric;
  for (const auto& g : gens) {
    symmetric.push_back(g);
    symmetric.push_back(invert(g));
  }
  std::set<Letters> seen{{}};
  std::vector<Letters> frontier{{}};
  for (std::size_t f = 0; f < factors; ++f) {
    std::vector<Letters> next;
    for (const auto& w : frontier) {
      for (const auto& s : symmetric) next.push_back(naive_free_reduce(concat(w, s)));
    }
    for (const auto& w : next) seen.insert(w);
    frontier = std::move(next);
  }
  std::set<Letters> out;
  for (const auto& w : seen) {
    if (w.size() <= r) out.insert(w);
  }
  return out;
}

}  // namespace oracle
