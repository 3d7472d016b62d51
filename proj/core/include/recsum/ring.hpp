#pragma once

#include <concepts>

#include "recsum/pi_poly.hpp"
#include "recsum/rational.hpp"

namespace recsum {

/// The value-ring contract the reduction machinery is generic over: exact
/// ring arithmetic with structural equality, plus an embedding of Rational
/// (used for partition coefficients). Rational and PiPoly both satisfy it.
template <typename R>
concept ValueRing = requires(const R& a, const R& b, const Rational& q) {
    { R(0) };
    { R(1) };
    { R(q) };
    { a + b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
};

static_assert(ValueRing<Rational>);
static_assert(ValueRing<PiPoly>);

template <ValueRing R>
R ring_pow(const R& base, unsigned e) {
    R out(1);
    for (unsigned i = 0; i < e; ++i) out = out * base;
    return out;
}

} // namespace recsum
