#pragma once

#include <stdexcept>
#include <string>

namespace modknot {

// Base for every recoverable domain failure. Usage problems (bad flags) are
// handled by the CLI layer and never surface as these.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyWord : public DomainError {
 public:
  EmptyWord() : DomainError("empty word") {}
};

class SyntaxError : public DomainError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : DomainError(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit SyntaxError(const std::string& what) : DomainError(what) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

class NotHyperbolic : public DomainError {
 public:
  explicit NotHyperbolic(const std::string& what) : DomainError(what) {}
};

class NonpositiveModulus : public DomainError {
 public:
  NonpositiveModulus() : DomainError("Dedekind sum modulus must be positive") {}
};

class InvalidCover : public DomainError {
 public:
  explicit InvalidCover(const std::string& what) : DomainError(what) {}
};

class PointInPuncture : public DomainError {
 public:
  PointInPuncture() : DomainError("point lies inside the puncture disk") {}
};

class InvalidParams : public DomainError {
 public:
  explicit InvalidParams(const std::string& what) : DomainError(what) {}
};

}  // namespace modknot
