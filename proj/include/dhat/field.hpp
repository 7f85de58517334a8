#pragma once

#include <concepts>
#include <string>

#include "dhat/local_scalar.hpp"
#include "dhat/rational.hpp"

namespace dhat {

/// Coefficient fields the engine is instantiated over: Q and Q(z).
template <class F>
concept Field = requires(F a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a == b } -> std::convertible_to<bool>;
  { F::zero() } -> std::convertible_to<F>;
  { F::one() } -> std::convertible_to<F>;
};

static_assert(Field<Rational>);
static_assert(Field<LocalScalar>);

inline LocalScalar to_local(const Rational& r) { return LocalScalar(r); }

}  // namespace dhat
