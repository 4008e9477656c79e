#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "modknot/word.hpp"

namespace modknot {

using Integer = boost::multiprecision::cpp_int;

// An element of PSL(2,Z): an integer matrix [[a,b],[c,d]] of determinant 1,
// identified with its negation.
//
// The stored representative is sign-normalized (trace > 0; for trace 0,
// c > 0; for trace 0 and c = 0, b > 0), so two elements are equal exactly when
// their fields are equal.
class Psl2Element {
 public:
  // Throws InvalidParams unless a*d - b*c == 1.
  Psl2Element(Integer a, Integer b, Integer c, Integer d);

  static Psl2Element identity();

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }
  Integer trace() const { return a_ + d_; }

  Psl2Element inverse() const;

  // "a,b;c,d"
  std::string str() const;

  friend bool operator==(const Psl2Element&, const Psl2Element&) = default;

 private:
  Integer a_, b_, c_, d_;
};

namespace generators {

// Rotation by pi about i; order 2.
Psl2Element s();
// Rotation by 2pi/3 about the order-3 cone point; order 3.
Psl2Element t();
// Letter matrices. x -> [[1,1],[0,1]], y -> [[1,0],[1,1]].
Psl2Element x();
Psl2Element y();

}  // namespace generators

enum class Classification { Identity, Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(Classification kind);

Psl2Element multiply(const Psl2Element& lhs, const Psl2Element& rhs);

// lhs^exponent; negative exponents use the inverse.
Psl2Element power(const Psl2Element& base, long long exponent);

Classification classify(const Psl2Element& element);

// G * A * G^-1.
Psl2Element conjugate(const Psl2Element& element, const Psl2Element& by);

// Product of the letter matrices along the canonical spelling of the word.
// Hyperbolic when both letters occur, parabolic for pure powers.
Psl2Element word_to_matrix(const CyclicWord& word);

// Canonical word whose matrix is conjugate to the element. Throws
// NotHyperbolic for identity, elliptic and parabolic input.
CyclicWord matrix_to_word(const Psl2Element& element);

// Parses "a,b;c,d" with optional spaces. Throws SyntaxError on malformed
// text and InvalidParams when the determinant is not 1.
Psl2Element parse_matrix(std::string_view text);

}  // namespace modknot
