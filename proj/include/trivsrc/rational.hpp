#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace trivsrc {

// Exact arbitrary-precision integers and rationals. boost::multiprecision
// keeps rationals in lowest terms with positive denominator, which is the
// canonical form all comparisons rely on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool rat_is_integer(const Rat& r) { return rat_den(r) == 1; }

std::optional<long long> rat_try_long(const Rat& r);

// "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

} // namespace trivsrc
