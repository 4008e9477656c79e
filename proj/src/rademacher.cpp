#include "modknot/rademacher.hpp"

#include <stdexcept>
#include <string>

#include "modknot/errors.hpp"

namespace modknot {
namespace {

int sign(const Integer& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

std::int64_t rademacher_word(const CyclicWord& word) {
  return static_cast<std::int64_t>(word.x_count()) - static_cast<std::int64_t>(word.y_count());
}

Rational dedekind_sum(const Integer& h, const Integer& k) {
  if (k <= 0) {
    throw NonpositiveModulus();
  }
  // s(gh, gk) = s(h, k), then Euclid with the reciprocity law
  //   s(h,k) + s(k,h) = -1/4 + (h/k + k/h + 1/(hk)) / 12.
  const Integer g = gcd(h, k);
  Integer num = h / g;
  Integer den = k / g;
  num %= den;
  if (num < 0) {
    num += den;
  }
  Rational total = 0;
  int parity = 1;
  while (den > 1) {
    const Rational term = Rational(-1, 4) + (Rational(num, den) + Rational(den, num) +
                                             Rational(Integer(1), num * den)) /
                                                12;
    total += parity * term;
    parity = -parity;
    Integer next = den % num;
    den = num;
    num = next;
  }
  return total;
}

Integer rademacher_matrix(const Psl2Element& element) {
  if (classify(element) != Classification::Hyperbolic) {
    throw NotHyperbolic("Rademacher function is evaluated on hyperbolic elements only");
  }
  const Integer& c = element.c();
  const Integer tr = element.trace();
  const Rational value = Rational(tr) / c - 12 * sign(c) * dedekind_sum(element.d(), abs(c)) -
                         3 * sign(c * tr);
  if (denominator(value) != 1) {
    throw std::logic_error("non-integral Rademacher value for " + element.str());
  }
  return numerator(value);
}

std::int64_t linking_with_trefoil(const CyclicWord& word) { return rademacher_word(word); }

}  // namespace modknot
