#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ooc {

// Canonical difference-of-positions form of a length-n, weight-w unipolar
// code. The tuple holds the cyclic gaps between consecutive 1-chips; the
// canonical rotation ends in a maximal gap, ties broken by the
// lexicographically smallest prefix.
struct DopCode {
    std::vector<int> dops;  // a_1..a_w, each >= 1, sum == n
    int n = 0;
    int w = 0;
    int serial = 0;  // 1-based enumeration index, 0 when unassigned
};

// Weighted-position representation: the positions of the 1-chips.
struct WprCode {
    std::vector<int> positions;  // strictly increasing, each in [0, n-1]
    int n = 0;
};

struct BinaryCode {
    std::vector<std::uint8_t> bits;  // n entries in {0, 1}
};

bool operator==(const DopCode& a, const DopCode& b);  // compares the tuple, not the serial
bool operator==(const WprCode& a, const WprCode& b);
std::ostream& operator<<(std::ostream& os, const DopCode& c);

// Unique canonical rotation of a gap tuple. Throws std::invalid_argument on
// an empty tuple, fewer than two gaps, or a non-positive gap.
DopCode canonicalize(const std::vector<int>& dops);

// All canonical (n, w) codes in lexicographic prefix order, serials 1..N.
// Requires 2 <= w < n.
std::vector<DopCode> enumerate_codes(int n, int w);

// Positions of the 1-chips, first one fixed at `start`, sorted ascending.
WprCode dop_to_wpr(const DopCode& code, int start = 0);

BinaryCode wpr_to_binary(const WprCode& code);

// Circular gaps between consecutive 1-positions, canonicalized.
// Requires weight >= 2.
DopCode binary_to_dop(const BinaryCode& code);

}  // namespace ooc
