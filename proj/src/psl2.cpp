#include "modknot/psl2.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modknot/errors.hpp"

namespace modknot {
namespace {

// Plain 2x2 integer matrix, used where determinant -1 or sign matters.
struct Mat2 {
  Integer a, b, c, d;
};

Mat2 mul(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

Mat2 to_mat(const Psl2Element& e) { return {e.a(), e.b(), e.c(), e.d()}; }

Psl2Element syllable_matrix(const Syllable& s) {
  // X^a Y^b
  return Psl2Element(1 + Integer(s.a) * Integer(s.b), Integer(s.a), Integer(s.b), 1);
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) {
    --q;
  }
  return q;
}

// floor((p + sqrt(disc)) / q) for non-square disc, given root = isqrt(disc).
Integer quadratic_floor(const Integer& p, const Integer& root, const Integer& q) {
  if (q > 0) {
    return floor_div(p + root, q);
  }
  return -(floor_div(p + root, -q) + 1);
}

Psl2Element word_from_quotients(const std::vector<Integer>& quotients) {
  Psl2Element m = Psl2Element::identity();
  for (std::size_t i = 0; i < quotients.size(); i += 2) {
    const Integer& a = quotients[i];
    const Integer& b = quotients[i + 1];
    m = multiply(m, Psl2Element(1 + a * b, a, b, 1));
  }
  return m;
}

}  // namespace

Psl2Element::Psl2Element(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) {
    throw InvalidParams("matrix determinant must be 1");
  }
  const Integer tr = a_ + d_;
  const bool negate = tr < 0 || (tr == 0 && (c_ < 0 || (c_ == 0 && b_ < 0)));
  if (negate) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Psl2Element Psl2Element::identity() { return {1, 0, 0, 1}; }

Psl2Element Psl2Element::inverse() const { return {d_, -b_, -c_, a_}; }

std::string Psl2Element::str() const {
  return a_.str() + "," + b_.str() + ";" + c_.str() + "," + d_.str();
}

namespace generators {

Psl2Element s() { return {0, -1, 1, 0}; }
Psl2Element t() { return {0, -1, 1, -1}; }
Psl2Element x() { return {1, 1, 0, 1}; }
Psl2Element y() { return {1, 0, 1, 1}; }

}  // namespace generators

std::string_view to_string(Classification kind) {
  switch (kind) {
    case Classification::Identity: return "Identity";
    case Classification::Elliptic: return "Elliptic";
    case Classification::Parabolic: return "Parabolic";
    case Classification::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

Psl2Element multiply(const Psl2Element& lhs, const Psl2Element& rhs) {
  const Mat2 p = mul(to_mat(lhs), to_mat(rhs));
  return {p.a, p.b, p.c, p.d};
}

Psl2Element power(const Psl2Element& base, long long exponent) {
  Psl2Element factor = exponent < 0 ? base.inverse() : base;
  unsigned long long e = exponent < 0 ? 0ULL - static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Psl2Element result = Psl2Element::identity();
  while (e > 0) {
    if (e & 1ULL) {
      result = multiply(result, factor);
    }
    factor = multiply(factor, factor);
    e >>= 1;
  }
  return result;
}

Classification classify(const Psl2Element& element) {
  const Integer tr = abs(element.trace());
  if (tr > 2) return Classification::Hyperbolic;
  if (tr < 2) return Classification::Elliptic;
  if (element == Psl2Element::identity()) return Classification::Identity;
  return Classification::Parabolic;
}

Psl2Element conjugate(const Psl2Element& element, const Psl2Element& by) {
  return multiply(multiply(by, element), by.inverse());
}

Psl2Element word_to_matrix(const CyclicWord& word) {
  const CyclicWord canonical = canonicalize(word);
  if (const auto& pure = canonical.pure_power()) {
    const Integer e(pure->exponent);
    return pure->letter == Letter::X ? Psl2Element(1, e, 0, 1) : Psl2Element(1, 0, e, 1);
  }
  Psl2Element m = Psl2Element::identity();
  for (const Syllable& s : canonical.syllables()) {
    m = multiply(m, syllable_matrix(s));
  }
  return m;
}

CyclicWord matrix_to_word(const Psl2Element& element) {
  const Classification kind = classify(element);
  if (kind != Classification::Hyperbolic) {
    throw NotHyperbolic(std::string("matrix is ") + std::string(to_string(kind)));
  }
  // The attracting fixed point (P + sqrt(D)) / Q of z -> (az+b)/(cz+d) has an
  // eventually periodic continued fraction; its period, read as alternating
  // x- and y-exponents, spells the conjugacy class.
  const Integer trace = element.trace();
  const Integer disc = trace * trace - 4;
  const Integer root = boost::multiprecision::sqrt(disc);
  Integer p = element.a() - element.d();
  Integer q = 2 * element.c();

  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> quotients;
  std::size_t period_start = 0;
  for (;;) {
    auto [it, inserted] = seen.emplace(std::make_pair(p, q), quotients.size());
    if (!inserted) {
      period_start = it->second;
      break;
    }
    const Integer a = quadratic_floor(p, root, q);
    quotients.push_back(a);
    p = a * q - p;
    q = (disc - p * p) / q;
  }

  // Conjugators z -> 1/(z - a) have determinant -1, so the period must start
  // after an even number of steps to stay inside PSL(2,Z).
  const std::size_t preperiod = period_start + (period_start % 2);
  const std::size_t period_length = quotients.size() - period_start;
  std::vector<Integer> period;
  for (std::size_t k = 0; k < period_length; ++k) {
    period.push_back(quotients[period_start + (preperiod - period_start + k) % period_length]);
  }
  if (period.size() % 2 == 1) {
    const std::vector<Integer> once = period;
    period.insert(period.end(), once.begin(), once.end());
  }

  Mat2 g{1, 0, 0, 1};
  for (std::size_t i = 0; i < preperiod; ++i) {
    g = mul(Mat2{0, 1, 1, -quotients[i]}, g);
  }

  std::vector<Syllable> root_syllables;
  for (std::size_t i = 0; i < period.size(); i += 2) {
    root_syllables.push_back({period[i].convert_to<Exponent>(),
                              period[i + 1].convert_to<Exponent>()});
  }
  // Reduce to the primitive root; the stabilizer of the fixed point is
  // generated by its matrix.
  for (std::size_t len = 1; len <= root_syllables.size(); ++len) {
    if (root_syllables.size() % len != 0) continue;
    bool periodic = true;
    for (std::size_t i = len; i < root_syllables.size() && periodic; ++i) {
      periodic = root_syllables[i] == root_syllables[i - len];
    }
    if (periodic) {
      root_syllables.resize(len);
      break;
    }
  }
  std::vector<Integer> root_quotients;
  for (const Syllable& s : root_syllables) {
    root_quotients.emplace_back(s.a);
    root_quotients.emplace_back(s.b);
  }
  const Psl2Element generator = word_from_quotients(root_quotients);

  Psl2Element candidate = generator;
  std::size_t repetitions = 1;
  while (candidate.trace() < trace) {
    candidate = multiply(candidate, generator);
    ++repetitions;
  }

  const Psl2Element g_elem(g.a, g.b, g.c, g.d);
  if (candidate.trace() != trace || conjugate(element, g_elem) != candidate) {
    throw std::logic_error("continued-fraction reduction failed for " + element.str());
  }

  std::vector<Syllable> syllables;
  syllables.reserve(root_syllables.size() * repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    syllables.insert(syllables.end(), root_syllables.begin(), root_syllables.end());
  }
  return canonicalize(CyclicWord::from_syllables(std::move(syllables)));
}

Psl2Element parse_matrix(std::string_view text) {
  std::size_t pos = 0;
  auto skip_blanks = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_integer = [&]() -> Integer {
    skip_blanks();
    const std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    const std::size_t digits = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits) {
      throw SyntaxError("expected an integer", start);
    }
    Integer value(std::string(text.substr(start, pos - start)));
    skip_blanks();
    return value;
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) {
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    }
    ++pos;
  };
  Integer a = read_integer();
  expect(',');
  Integer b = read_integer();
  expect(';');
  Integer c = read_integer();
  expect(',');
  Integer d = read_integer();
  if (pos != text.size()) {
    throw SyntaxError("trailing characters", pos);
  }
  return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

}  // namespace modknot
