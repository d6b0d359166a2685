#include "braidlab/burau.hpp"

#include <cstdlib>
#include <sstream>

#include "braidlab/errors.hpp"

namespace braidlab {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(0, BigInt(constant));
}

LaurentPoly LaurentPoly::monomial(BigInt coefficient, long long exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

void LaurentPoly::add_term(long long exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::evaluate(long long t) const {
  // Only exact for negative powers when the result is integral; callers use
  // it on polynomials or at t = ±1.
  BigInt num = 0;
  if (terms_.empty()) return num;
  const long long low = terms_.begin()->first;
  const long long shift = low < 0 ? -low : 0;
  for (const auto& [e, c] : terms_) num += c * boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(e + shift));
  if (shift == 0) return num;
  return num / boost::multiprecision::pow(BigInt(t), static_cast<unsigned>(shift));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly LaurentMatrix::determinant() const {
  return entries_[0][0] * entries_[1][1] - entries_[0][1] * entries_[1][0];
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.entries_[r][c] = a.entries_[r][0] * b.entries_[0][c] + a.entries_[r][1] * b.entries_[1][c];
  return out;
}

LaurentMatrix burau_generator(int index, int sign) {
  const auto t = [](long long c, long long e) { return LaurentPoly::monomial(c, e); };
  if (index == 1) {
    if (sign > 0) return {t(-1, 1), 1, 0, 1};
    return {t(-1, -1), t(1, -1), 0, 1};
  }
  if (index == 2) {
    if (sign > 0) return {1, 0, t(1, 1), t(-1, 1)};
    return {1, 0, 1, t(-1, -1)};
  }
  throw DomainError("Burau oracle is only defined on 3 strands");
}

LaurentMatrix burau_matrix(const BraidWord& w) {
  if (w.strands() != 3) throw DomainError("Burau oracle is only defined on 3 strands");
  LaurentMatrix m = LaurentMatrix::identity();
  for (const auto& l : w.letters()) {
    const LaurentMatrix g = burau_generator(l.index, l.exponent > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(l.exponent); ++k) m = m * g;
  }
  return m;
}

bool braid_equal(const BraidWord& u, const BraidWord& v) {
  // burau(u) == burau(v) iff burau(u^-1 v) == I; the quotient is usually
  // shorter after free cancellation.
  if (u.strands() != 3 || v.strands() != 3)
    throw DomainError("Burau oracle is only defined on 3 strands");
  return burau_matrix(braid_inverse(u) * v) == LaurentMatrix::identity();
}

}  // namespace braidlab
