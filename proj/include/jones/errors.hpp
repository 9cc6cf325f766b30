#ifndef JONES_ERRORS_HPP
#define JONES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jones {

/// No Laurent polynomial quotient exists. Raised during mutation this is a
/// counterexample to the Laurent phenomenon and must never be swallowed.
class NotLaurent : public std::domain_error {
 public:
  explicit NotLaurent(const std::string& what) : std::domain_error(what) {}
};

/// t = -1: the trace parameter t/(1+t)^2 has a pole.
class SingularTrace : public std::domain_error {
 public:
  explicit SingularTrace(const std::string& what) : std::domain_error(what) {}
};

class SizeCapExceeded : public std::length_error {
 public:
  explicit SizeCapExceeded(const std::string& what) : std::length_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace jones

#endif  // JONES_ERRORS_HPP
