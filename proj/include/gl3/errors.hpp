#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl3 {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingPrimeError : public Error {
 public:
  explicit MissingPrimeError(std::int64_t prime)
      : Error("no local data for prime " + std::to_string(prime)), prime_(prime) {}
  std::int64_t prime() const noexcept { return prime_; }

 private:
  std::int64_t prime_;
};

class OutOfBoundsError : public Error {
 public:
  OutOfBoundsError(std::int64_t m, std::int64_t n)
      : Error("index (" + std::to_string(m) + "," + std::to_string(n) + ") outside table bounds"),
        m_(m),
        n_(n) {}
  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }

 private:
  std::int64_t m_, n_;
};

class NonTemperedError : public Error {
 public:
  explicit NonTemperedError(std::vector<std::int64_t> primes);
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }

 private:
  std::vector<std::int64_t> primes_;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class EnvelopeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gl3
