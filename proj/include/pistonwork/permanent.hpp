#pragma once

#include <cstdint>

#include "pistonwork/types.hpp"

namespace pistonwork {

inline constexpr int kNaivePermanentMaxOrder = 9;
inline constexpr int kRyserMaxOrder = 30;

// Sum over all n! permutations. Reference oracle only.
Complex permanent_naive(const ComplexMatrix& m);

struct RyserTrace {
    std::uint64_t subsets_visited = 0;
};

// Ryser's inclusion-exclusion formula walked in Gray-code order, so each
// subset differs from its predecessor by one column: O(n 2^n).
Complex permanent_ryser(const ComplexMatrix& m, RyserTrace* trace = nullptr);

} // namespace pistonwork
