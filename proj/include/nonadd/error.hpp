#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonadd {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " criteria, got " + std::to_string(got)),
        expected_(expected),
        got_(got) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t got() const noexcept { return got_; }

 private:
  std::size_t expected_;
  std::size_t got_;
};

class EmptyCoalition : public Error {
 public:
  EmptyCoalition() : Error("interaction index is undefined for the empty coalition") {}
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class UncertifiedOperator : public Error {
 public:
  using Error::Error;
};

class UnknownAxiom : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownLevel : public Error {
 public:
  UnknownLevel(int criterion, std::string level)
      : Error("criterion " + std::to_string(criterion) + " has no level named '" + level + "'"),
        criterion_(criterion),
        level_(std::move(level)) {}

  int criterion() const noexcept { return criterion_; }
  const std::string& level() const noexcept { return level_; }

 private:
  int criterion_;
  std::string level_;
};

}  // namespace nonadd
