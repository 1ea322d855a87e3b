#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace flagcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; the result is canonicalized.
Rational parse_rational(const std::string& text);

}  // namespace flagcoh
