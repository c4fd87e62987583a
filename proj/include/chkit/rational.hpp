#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace chkit {

using Rational = boost::rational<std::int64_t>;

// "p/q" in lowest terms, always with a denominator ("0/1", "1/1", "-2/3").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace chkit
