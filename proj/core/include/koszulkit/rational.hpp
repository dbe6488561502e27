#ifndef KOSZULKIT_RATIONAL_HPP
#define KOSZULKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace koszulkit {

// GMP keeps mpq_class canonical after every arithmetic operation:
// positive denominator, reduced, and zero stored as 0/1.
using Rational = mpq_class;

// Always "p/q", including integers ("3/1"), so that output is uniform.
std::string to_string(const Rational& r);

// Accepts "p/q" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace koszulkit

#endif
