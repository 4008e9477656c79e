#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "modknot/psl2.hpp"
#include "modknot/word.hpp"

namespace modknot {

// Exact rational; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Global orientation relating the two Rademacher routes:
//   rademacher_matrix(word_to_matrix(w)) == kRademacherOrientation * (m - l).
// Calibrated once on "xxy" (matrix [[3,2],[1,1]], value 1).
inline constexpr int kRademacherOrientation = +1;

// m - l. The word route to the Rademacher function; an x contributes +1.
std::int64_t rademacher_word(const CyclicWord& word);

// Classical Dedekind sum s(h, k) = sum_{i=1}^{k-1} ((i/k)) ((h i/k)).
// Throws NonpositiveModulus for k <= 0.
Rational dedekind_sum(const Integer& h, const Integer& k);

// psi(A) = (a+d)/c - 12 sign(c) s(d, |c|) - 3 sign(c (a+d)), evaluated exactly.
// Throws NotHyperbolic unless |trace| > 2.
Integer rademacher_matrix(const Psl2Element& element);

// Linking number of the modular knot with the trefoil (Ghys): equals the
// Rademacher value of the word, and the net floor descent in the cover model.
std::int64_t linking_with_trefoil(const CyclicWord& word);

}  // namespace modknot
