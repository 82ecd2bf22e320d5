#ifndef SCHUR_ERROR_HPP
#define SCHUR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace schur {

// Base class for all errors raised by the library.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematically undefined request (zero decomposition, non-prime modulus, ...).
class domain_error : public error {
  public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// A variable is missing from an evaluation context or is reserved.
class context_error : public error {
  public:
    explicit context_error(const std::string& msg) : error(msg) {}
};

// Malformed input text; message carries the offending line when known.
class format_error : public error {
  public:
    explicit format_error(const std::string& msg) : error(msg) {}
    format_error(int line, const std::string& msg)
        : error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_ = 0;
};

} // namespace schur

#endif
