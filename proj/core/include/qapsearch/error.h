#ifndef QAPSEARCH_ERROR_H_
#define QAPSEARCH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qapsearch {

// Argument outside the domain of an operation (n < 2, i == j, cost <= 0...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unreadable token or malformed line in a text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance stream whose token count does not match 1 + 2n^2.
class MalformedInstanceError : public ParseError {
 public:
  MalformedInstanceError(const std::string& what, std::size_t byte_offset)
      : ParseError(what), byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// A solution record whose stored cost disagrees with its permutation.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A multi-start run aborted; results of completed searches are discarded.
class MultiStartError : public std::runtime_error {
 public:
  MultiStartError(const std::string& what, std::size_t completed)
      : std::runtime_error(what), completed_(completed) {}

  std::size_t completed() const { return completed_; }

 private:
  std::size_t completed_;
};

}  // namespace qapsearch

#endif  // QAPSEARCH_ERROR_H_
