#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricsym {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Small-integer lattice point, used by the enumeration engine and for roots.
using LatticePoint = std::vector<std::int64_t>;

/// Base of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (fan/polytope files, JSON).
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Input parsed but violates a structural requirement (non-primitive ray, unbounded polytope, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its domain (non-lattice polytope for Ehrhart, non-Fano fan, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An internal mathematical identity failed to hold. Always a bug or a theorem violation.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RatVector to_rational(const IntVector& v);
RatVector to_rational(const LatticePoint& v);
IntVector to_integer(const LatticePoint& v);
LatticePoint to_lattice_point(const IntVector& v);

/// Canonical rendering "p/q" (or "p" when q = 1).
std::string to_string(const Rational& q);
std::string to_string(const RatVector& v);
std::string to_string(const IntVector& v);
std::string to_string(const LatticePoint& v);

Rational parse_rational(const std::string& text);

Rational dot(const RatVector& a, const RatVector& b);
Rational dot(const RatVector& a, const IntVector& b);
Integer dot(const IntVector& a, const IntVector& b);

bool is_zero(const RatVector& v);

}  // namespace toricsym
