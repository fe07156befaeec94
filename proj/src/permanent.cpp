#include "pistonwork/permanent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

#include "pistonwork/error.hpp"

namespace pistonwork {

namespace {

void check_square_finite(const ComplexMatrix& m, const char* who) {
    if (m.rows() != m.cols()) throw DomainError(std::string(who) + ": matrix must be square");
    if (!m.allFinite()) throw DomainError(std::string(who) + ": matrix has non-finite entries");
}

} // namespace

Complex permanent_naive(const ComplexMatrix& m) {
    check_square_finite(m, "permanent_naive");
    const int n = static_cast<int>(m.rows());
    if (n > kNaivePermanentMaxOrder)
        throw DomainError("permanent_naive: order " + std::to_string(n) + " exceeds the guard of " +
                          std::to_string(kNaivePermanentMaxOrder));
    if (n == 0) return {1.0, 0.0};

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Complex total{0.0, 0.0};
    do {
        Complex term{1.0, 0.0};
        for (int r = 0; r < n; ++r) term *= m(r, perm[r]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Complex permanent_ryser(const ComplexMatrix& m, RyserTrace* trace) {
    check_square_finite(m, "permanent_ryser");
    const int n = static_cast<int>(m.rows());
    if (n > kRyserMaxOrder)
        throw DomainError("permanent_ryser: order " + std::to_string(n) + " exceeds the guard of " +
                          std::to_string(kRyserMaxOrder));
    if (trace) trace->subsets_visited = 0;
    if (n == 0) return {1.0, 0.0};

    // per(A) = (-1)^n sum_{S != {}} (-1)^{|S|} prod_r sum_{c in S} a_rc
    std::vector<Complex> row_sums(n, Complex{0.0, 0.0});
    const std::uint64_t count = std::uint64_t{1} << n;
    Complex total{0.0, 0.0};
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < count; ++k) {
        const int col = std::countr_zero(k);
        const std::uint64_t bit = std::uint64_t{1} << col;
        gray ^= bit;
        if (gray & bit) {
            for (int r = 0; r < n; ++r) row_sums[r] += m(r, col);
        } else {
            for (int r = 0; r < n; ++r) row_sums[r] -= m(r, col);
        }
        Complex prod = row_sums[0];
        for (int r = 1; r < n; ++r) prod *= row_sums[r];
        if (std::popcount(gray) & 1) total -= prod;
        else total += prod;
    }
    if (trace) trace->subsets_visited = count - 1;
    return (n & 1) ? -total : total;
}

} // namespace pistonwork
