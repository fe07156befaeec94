#pragma once

#include <cstdint>
#include <vector>

#include "pistonwork/piston.hpp"
#include "pistonwork/types.hpp"

namespace pistonwork {

// Boson counts per level/mode; index 0 is level 1.
struct OccupationVector {
    std::vector<int> counts;

    int total() const;
    int modes() const { return static_cast<int>(counts.size()); }
    bool operator==(const OccupationVector&) const = default;
    auto operator<=>(const OccupationVector&) const = default;

    // (n, 0, ..., 0) over d modes.
    static OccupationVector ground(int n, int d);
};

inline constexpr std::uint64_t kMaxOccupations = 10'000'000;
inline constexpr int kMaxFactorial = 20;

// C(n + d - 1, n), saturating at UINT64_MAX.
std::uint64_t occupation_count(int n, int d);

// All weak compositions of n into d parts, ascending lexicographic order.
std::vector<OccupationVector> enumerate_occupations(int n, int d);

double factorial(int k);

// Rows: f_occ[l] copies of row l. Columns: i_occ[k] copies of column k.
ComplexMatrix expand_submatrix(const ComplexMatrix& m, const OccupationVector& i_occ,
                               const OccupationVector& f_occ);

// |Per(Lambda^{(I,F)})|^2 / (prod n_i! prod n_f!)
double transition_probability(const ComplexMatrix& m, const OccupationVector& i_occ,
                              const OccupationVector& f_occ);
inline double transition_probability(const AmplitudeMatrix& m, const OccupationVector& i_occ,
                                     const OccupationVector& f_occ) {
    return transition_probability(m.entries, i_occ, f_occ);
}

} // namespace pistonwork
