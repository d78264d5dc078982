#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace disto {

// Exact integer/rational coefficients for all group-element types.
// Certificates routinely reach tr A^50 ~ 1e21, so fixed-width is out.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

}  // namespace disto
