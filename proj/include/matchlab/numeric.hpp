#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace matchlab {

// Arbitrary-precision integers and rationals back every exact count in the
// library; n! overflows 64 bits already at n = 21.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// 50-decimal-digit floats, used wherever a bound is finer than binary64
// resolution (e.g. deviations bounded by 1/n! for n up to 20).
using Dec50 = boost::multiprecision::cpp_dec_float_50;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline Dec50 to_dec50(const BigInt& x) { return Dec50(x); }

inline Dec50 to_dec50(const BigRat& x) {
  return Dec50(boost::multiprecision::numerator(x)) /
         Dec50(boost::multiprecision::denominator(x));
}

inline double to_double(const BigRat& x) { return to_dec50(x).convert_to<double>(); }

namespace constants {

// Frozen at 50+ significant digits. checked() re-derives each value from a
// fresh 50-digit exp(-1) at startup and refuses to run on mismatch.
inline const char* const kInvEDigits = "0.3678794411714423215955237701614608674458111310317678";
inline const char* const kOneMinusInvEDigits =
    "0.6321205588285576784044762298385391325541888689682322";
inline const char* const kOneMinusTwoInvEDigits =
    "0.2642411176571153568089524596770782651083777379364643";
inline const char* const kHalfMinusHalfInvEDigits =
    "0.3160602794142788392022381149192695662770944344841161";

inline const Dec50& inv_e() {
  static const Dec50 v(kInvEDigits);
  return v;
}
inline const Dec50& one_minus_inv_e() {
  static const Dec50 v(kOneMinusInvEDigits);
  return v;
}
inline const Dec50& one_minus_two_inv_e() {
  static const Dec50 v(kOneMinusTwoInvEDigits);
  return v;
}
inline const Dec50& half_minus_half_inv_e() {
  static const Dec50 v(kHalfMinusHalfInvEDigits);
  return v;
}

inline double inv_e_f64() { return inv_e().convert_to<double>(); }
inline double one_minus_inv_e_f64() { return one_minus_inv_e().convert_to<double>(); }
inline double one_minus_two_inv_e_f64() { return one_minus_two_inv_e().convert_to<double>(); }
inline double half_minus_half_inv_e_f64() { return half_minus_half_inv_e().convert_to<double>(); }

// Returns false and fills `error` if the frozen digit strings disagree with
// freshly computed values or with their binary64 evaluations.
bool self_test(std::string* error = nullptr);

}  // namespace constants

}  // namespace matchlab
