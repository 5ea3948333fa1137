#pragma once

#include <concepts>

#include "gevp/rational.hpp"

namespace gevp {

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_positive(double x) { return x > 0.0; }

/// The scalar contract the transformation kernels are written against:
/// a regular value type closed under +, * and /. Subtraction and negation
/// are deliberately absent; they belong to the verification layer only.
template <typename S>
concept field_core = std::regular<S> && requires(const S a, const S b) {
  { a + b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

static_assert(field_core<Rational>);
static_assert(field_core<double>);

}  // namespace gevp
