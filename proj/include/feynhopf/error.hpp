#ifndef FEYNHOPF_ERROR_HPP
#define FEYNHOPF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace feynhopf {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit status 1 and a JSON error object; anything else is a bug.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string &message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string &kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// A Laurent product would need a pole deeper than the series' pole bound.
class PoleOverflow : public Error {
 public:
  explicit PoleOverflow(const std::string &m) : Error("pole_overflow", m) {}
};

/// Inputs of incompatible shape (dimensions, orders, arities).
class ShapeError : public Error {
 public:
  explicit ShapeError(const std::string &m) : Error("shape_mismatch", m) {}
};

/// Precondition violated by otherwise well-formed data.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string &m) : Error("domain_error", m) {}
};

/// A renormalized value kept a pole: the character is not compatible with
/// the nesting data it was paired with.
class NonLocalDivergence : public Error {
 public:
  explicit NonLocalDivergence(const std::string &m)
      : Error("non_local_divergence", m) {}
};

/// Input document failed validation. `pointer` is a JSON pointer to the
/// offending field.
class ValidationError : public Error {
 public:
  ValidationError(std::string pointer, const std::string &m)
      : Error("validation_error", m), pointer_(std::move(pointer)) {}

  const std::string &pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace feynhopf

#endif  // FEYNHOPF_ERROR_HPP
