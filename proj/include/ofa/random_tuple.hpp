#pragma once

#include <cstdint>

#include "ofa/string_tuple.hpp"

namespace ofa {

// Seeded instance generator: i.i.d. uniform symbols from {'a', ...}
// per cell, resampling any string that equals its predecessor so the
// result is always a valid tuple. Requires alphabet in 1..26, and at
// least 2 whenever n > 1 (one letter admits no adjacent-distinct pair).
StringTuple random_tuple(std::size_t n, std::size_t m, std::size_t alphabet, std::uint64_t seed);

}  // namespace ofa
