#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace invder {

// Exact scalar of the ground field. mpq_class keeps gcd-reduced form with a
// positive denominator after canonicalize(); every parsed value is canonical.
using Rational = mpq_class;

// Raised for malformed files, bad shapes, or out-of-range indices. The CLI
// maps it to exit code 2 (mathematical failures use reports and exit 1).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when an operation requiring validated input is handed data that
// fails a mathematical precondition. The CLI maps it to exit code 1.
class CheckError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parses "p", "-p", or "p/q" with q != 0. Result is canonical.
Rational parse_rational(const std::string& text);

// Serializes as "p" or "p/q"; inverse of parse_rational on canonical values.
std::string rational_to_string(const Rational& value);

}  // namespace invder
