// Brute-force shift-correlation oracle. Deliberately self-contained: it
// works on raw bit sequences and shares nothing with the extended-matrix
// path, so equivalence tests between the two are meaningful.

#include <algorithm>
#include <stdexcept>

#include "ooc/correlation.hpp"

namespace ooc {

namespace {

// Overlap of x with y rotated left by tau: sum over t of x[t] * y[(t+tau) mod n].
// The wrap is split into two contiguous segments.
int overlap_at_shift(const std::vector<std::uint8_t>& x, const std::vector<std::uint8_t>& y,
                     int tau) {
    const int n = static_cast<int>(x.size());
    int sum = 0;
    const int head = n - tau;
    for (int t = 0; t < head; ++t) sum += x[t] * y[t + tau];
    for (int t = head; t < n; ++t) sum += x[t] * y[t + tau - n];
    return sum;
}

}  // namespace

int brute_auto(const BinaryCode& code) {
    const int n = static_cast<int>(code.bits.size());
    int best = 0;
    for (int tau = 1; tau < n; ++tau)
        best = std::max(best, overlap_at_shift(code.bits, code.bits, tau));
    return best;
}

int brute_cross(const BinaryCode& x, const BinaryCode& y) {
    if (x.bits.size() != y.bits.size())
        throw std::invalid_argument("brute_cross: sequences must have equal length");
    const int n = static_cast<int>(x.bits.size());
    int best = 0;
    for (int tau = 0; tau < n; ++tau) best = std::max(best, overlap_at_shift(x.bits, y.bits, tau));
    return best;
}

}  // namespace ooc
