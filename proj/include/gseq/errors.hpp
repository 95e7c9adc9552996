#ifndef GSEQ_ERRORS_HPP
#define GSEQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gseq {

// Refusal of an operation whose preconditions or parameter ranges are not
// met. The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (sequence, pattern or graph syntax). The CLI maps
// this to exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gseq

#endif
