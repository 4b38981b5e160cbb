#ifndef CUBIC_RATIONAL_HPP
#define CUBIC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace cubic {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

} // namespace cubic

#endif
