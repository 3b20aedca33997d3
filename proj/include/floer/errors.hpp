#pragma once

#include <stdexcept>
#include <string>

namespace floer {

// Base of every error the engine raises. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { using Error::Error; };
class ShapeMismatch : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class NotAComplex : public Error { using Error::Error; };
class WindowTooSmall : public Error { using Error::Error; };
class NuTooLarge : public Error { using Error::Error; };
class HFNotZero : public Error { using Error::Error; };
class OutOfRange : public Error { using Error::Error; };
class SRange : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

// Search outcomes that are answers about the search itself, not about the input.
class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(const std::string& what, long long explored)
      : Error(what), explored_(explored) {}
  long long explored() const { return explored_; }

 private:
  long long explored_;
};

class BoundTooSmall : public Error {
 public:
  BoundTooSmall(const std::string& what, int needed)
      : Error(what), needed_(needed) {}
  // Smallest entry bound that would have contained every solution seen.
  int needed() const { return needed_; }

 private:
  int needed_;
};

}  // namespace floer
