#pragma once

#include <gmpxx.h>

#include <random>
#include <stdexcept>
#include <string>

namespace rnc {

// Exact arbitrary-precision rational. All arithmetic in the engine is exact;
// floating point appears only in display code.
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// Uniform rational with |numerator| <= height, 1 <= denominator <= height.
inline Rat random_rational(std::mt19937_64& rng, long height) {
  if (height < 1) throw std::invalid_argument("height must be >= 1");
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace rnc
