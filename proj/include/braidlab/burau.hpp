#pragma once

// Reduced Burau representation of B3, used as an exact word-problem oracle.
// The representation is faithful on three strands, so two B3 words are equal
// as braids iff their matrices agree.
//
// Convention: σ1 -> [[-t, 1], [0, 1]],  σ2 -> [[1, 0], [t, -t]].

#include <array>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidlab/braid_word.hpp"

namespace braidlab {

using BigInt = boost::multiprecision::cpp_int;

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(BigInt coefficient, long long exponent);

  const std::map<long long, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Value at an integer point t (t must be nonzero if negative powers occur).
  BigInt evaluate(long long t) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_term(long long exponent, const BigInt& coefficient);

  std::map<long long, BigInt> terms_;
};

std::string to_string(const LaurentPoly& p);

class LaurentMatrix {
 public:
  LaurentMatrix() = default;  // zero matrix
  LaurentMatrix(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d)
      : entries_{{{std::move(a), std::move(b)}, {std::move(c), std::move(d)}}} {}

  static LaurentMatrix identity() { return {1, 0, 0, 1}; }

  const LaurentPoly& operator()(int row, int col) const { return entries_[row][col]; }
  LaurentPoly determinant() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::array<std::array<LaurentPoly, 2>, 2> entries_{};
};

/// Image of σ_index^sign (sign = ±1) under the convention above.
LaurentMatrix burau_generator(int index, int sign);

/// Product of generator images; throws DomainError unless strands == 3.
LaurentMatrix burau_matrix(const BraidWord& w);

/// Equality of B3 braids, decided through the Burau matrix.
bool braid_equal(const BraidWord& u, const BraidWord& v);

}  // namespace braidlab
