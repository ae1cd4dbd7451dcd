#pragma once

// Oracles plus a seeded property harness on top of doctest.

#include "oracle.hpp"

#include <doctest.h>

#include <functional>

namespace prop {

inline constexpr int kCases = 120;

/// Runs `body` on kCases seeded generators; failures report the case seed.
inline void for_all(std::uint64_t seed, const std::function<void(Rng&)>& body, int cases = kCases)
{
    for (int i = 0; i < cases; ++i) {
        const std::uint64_t s = seed * 1000003u + static_cast<std::uint64_t>(i);
        Rng rng(s);
        CAPTURE(s);
        body(rng);
    }
}

} // namespace prop
