#pragma once

#include "edst/rational.hpp"

#include <string>
#include <string_view>

namespace edst {

enum class Dimension { length, surface };

std::string_view to_string(Dimension d);
std::string_view base_unit_name(Dimension d);  // "ninda" or "sar"

// An exact magnitude in the base unit of its dimension.
struct Quantity {
  Dimension dimension = Dimension::length;
  Rational magnitude;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

inline Quantity length(const Rational& ninda) { return {Dimension::length, ninda}; }
inline Quantity surface(const Rational& sar) { return {Dimension::surface, sar}; }

// Throw DimensionError on mixed dimensions.
Quantity add(const Quantity& a, const Quantity& b);
Quantity subtract(const Quantity& a, const Quantity& b);
Quantity scale(const Quantity& q, const Rational& k);
bool less(const Quantity& a, const Quantity& b);

inline Quantity operator+(const Quantity& a, const Quantity& b) { return add(a, b); }
inline Quantity operator-(const Quantity& a, const Quantity& b) { return subtract(a, b); }
inline Quantity operator*(const Quantity& q, const Rational& k) { return scale(q, k); }

// "4/9 sar"
std::string to_string(const Quantity& q);

}  // namespace edst
