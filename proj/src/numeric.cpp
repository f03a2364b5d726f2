#include "matchlab/numeric.hpp"

#include <cmath>
#include <sstream>

namespace matchlab::constants {

namespace {

bool close50(const Dec50& a, const Dec50& b) {
  return boost::multiprecision::abs(a - b) < Dec50("1e-48");
}

bool close64(double a, double b) { return std::abs(a - b) < 1e-15; }

}  // namespace

bool self_test(std::string* error) {
  const Dec50 fresh_inv_e = exp(Dec50(-1));
  const Dec50 one(1), half = Dec50(1) / 2;

  struct Case {
    const char* name;
    Dec50 frozen;
    Dec50 fresh;
    double f64;
    double fresh_f64;
  };
  const double e64 = std::exp(-1.0);
  const Case cases[] = {
      {"inv_e", inv_e(), fresh_inv_e, inv_e_f64(), e64},
      {"one_minus_inv_e", one_minus_inv_e(), one - fresh_inv_e, one_minus_inv_e_f64(), 1.0 - e64},
      {"one_minus_two_inv_e", one_minus_two_inv_e(), one - 2 * fresh_inv_e,
       one_minus_two_inv_e_f64(), 1.0 - 2.0 * e64},
      {"half_minus_half_inv_e", half_minus_half_inv_e(), half - fresh_inv_e / 2,
       half_minus_half_inv_e_f64(), 0.5 - e64 / 2.0},
  };
  for (const auto& c : cases) {
    if (!close50(c.frozen, c.fresh) || !close64(c.f64, c.fresh_f64)) {
      if (error) {
        std::ostringstream os;
        os << "constant " << c.name << " failed self-test: frozen=" << c.frozen
           << " fresh=" << c.fresh;
        *error = os.str();
      }
      return false;
    }
  }
  return true;
}

}  // namespace matchlab::constants
