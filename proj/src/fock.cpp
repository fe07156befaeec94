#include "pistonwork/fock.hpp"

#include <array>
#include <limits>
#include <numeric>
#include <string>

#include "pistonwork/error.hpp"
#include "pistonwork/permanent.hpp"

namespace pistonwork {

int OccupationVector::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

OccupationVector OccupationVector::ground(int n, int d) {
    if (d < 1) throw DomainError("OccupationVector::ground: need at least one mode");
    OccupationVector v{std::vector<int>(d, 0)};
    v.counts[0] = n;
    return v;
}

std::uint64_t occupation_count(int n, int d) {
    if (n < 0 || d < 1) throw DomainError("occupation_count: need n >= 0 and d >= 1");
    // C(n + d - 1, k) with k = min(n, d - 1); exact since each prefix is itself a binomial.
    const std::uint64_t k = static_cast<std::uint64_t>(std::min(n, d - 1));
    const std::uint64_t top = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(d) - 1;
    unsigned __int128 c = 1;
    for (std::uint64_t r = 1; r <= k; ++r) {
        c = c * (top - k + r) / r;
        if (c > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<OccupationVector> enumerate_occupations(int n, int d) {
    const std::uint64_t count = occupation_count(n, d);
    if (count > kMaxOccupations)
        throw DomainError("enumerate_occupations: " + std::to_string(count) +
                          " configurations exceed the enumeration guard");
    std::vector<OccupationVector> out;
    out.reserve(count);

    // Ascending lex: start at (0, ..., 0, n). The successor moves one boson from
    // the rightmost non-zero slot j (j > 0) into slot j - 1 and dumps the rest
    // of slot j into the last slot.
    std::vector<int> cur(d, 0);
    cur[d - 1] = n;
    for (;;) {
        out.push_back(OccupationVector{cur});
        int j = d - 1;
        while (j > 0 && cur[j] == 0) --j;
        if (j == 0) break;
        const int rest = cur[j] - 1;
        cur[j] = 0;
        cur[j - 1] += 1;
        cur[d - 1] += rest;
    }
    return out;
}

double factorial(int k) {
    static const auto table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        t[0] = 1.0;
        for (int i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    if (k < 0 || k > kMaxFactorial) throw DomainError("factorial: argument out of table range");
    return table[k];
}

namespace {

std::vector<int> repeated_indices(const OccupationVector& occ) {
    std::vector<int> idx;
    idx.reserve(occ.total());
    for (int k = 0; k < occ.modes(); ++k)
        for (int c = 0; c < occ.counts[k]; ++c) idx.push_back(k);
    return idx;
}

} // namespace

ComplexMatrix expand_submatrix(const ComplexMatrix& m, const OccupationVector& i_occ,
                               const OccupationVector& f_occ) {
    if (i_occ.modes() != m.cols() || f_occ.modes() != m.rows())
        throw DomainError("expand_submatrix: occupation length does not match the matrix");
    for (int c : i_occ.counts)
        if (c < 0) throw DomainError("expand_submatrix: negative occupation");
    for (int c : f_occ.counts)
        if (c < 0) throw DomainError("expand_submatrix: negative occupation");
    if (i_occ.total() != f_occ.total())
        throw DomainError("expand_submatrix: initial and final boson numbers differ");

    const std::vector<int> rows = repeated_indices(f_occ);
    const std::vector<int> cols = repeated_indices(i_occ);
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = m(rows[r], cols[c]);
    return sub;
}

double transition_probability(const ComplexMatrix& m, const OccupationVector& i_occ,
                              const OccupationVector& f_occ) {
    const ComplexMatrix sub = expand_submatrix(m, i_occ, f_occ);
    if (sub.rows() > kMaxFactorial)
        throw DomainError("transition_probability: more than 20 bosons");
    double norm = 1.0;
    for (int c : i_occ.counts) norm *= factorial(c);
    for (int c : f_occ.counts) norm *= factorial(c);
    return std::norm(permanent_ryser(sub)) / norm;
}

} // namespace pistonwork
