#include "ooc/dop.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace ooc {

bool operator==(const DopCode& a, const DopCode& b) { return a.dops == b.dops; }
bool operator==(const WprCode& a, const WprCode& b) {
    return a.n == b.n && a.positions == b.positions;
}

std::ostream& operator<<(std::ostream& os, const DopCode& c) {
    os << '(';
    for (std::size_t i = 0; i < c.dops.size(); ++i) {
        if (i) os << ',';
        os << c.dops[i];
    }
    return os << ')';
}

DopCode canonicalize(const std::vector<int>& dops) {
    if (dops.size() < 2) throw std::invalid_argument("canonicalize: need at least two gaps");
    for (int a : dops)
        if (a < 1) throw std::invalid_argument("canonicalize: gaps must be positive");

    const int w = static_cast<int>(dops.size());
    const int maxd = *std::max_element(dops.begin(), dops.end());

    // Among rotations ending in a maximal gap, pick the lexicographically
    // smallest prefix.
    int best = -1;
    for (int r = 0; r < w; ++r) {
        if (dops[(r + w - 1) % w] != maxd) continue;
        if (best < 0) {
            best = r;
            continue;
        }
        for (int i = 0; i < w - 1; ++i) {
            const int a = dops[(r + i) % w];
            const int b = dops[(best + i) % w];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }

    DopCode code;
    code.dops.reserve(w);
    for (int i = 0; i < w; ++i) code.dops.push_back(dops[(best + i) % w]);
    code.w = w;
    code.n = std::accumulate(code.dops.begin(), code.dops.end(), 0);
    return code;
}

namespace {

// Extends the gap prefix position by position; the last gap is forced to
// n - sum and must stay maximal, which bounds every choice.
void extend_prefix(int n, int w, std::vector<int>& prefix, int sum, int maxd,
                   std::vector<DopCode>& out) {
    const int filled = static_cast<int>(prefix.size());
    if (filled == w - 1) {
        const int last = n - sum;
        if (last < maxd) return;
        prefix.push_back(last);
        DopCode canon = canonicalize(prefix);
        if (canon.dops == prefix) {
            canon.serial = static_cast<int>(out.size()) + 1;
            out.push_back(std::move(canon));
        }
        prefix.pop_back();
        return;
    }
    const int open_after = w - 2 - filled;  // prefix slots still to fill
    for (int a = 1;; ++a) {
        const int last_at_best = n - sum - a - open_after;  // a_w with the rest at 1
        if (last_at_best < std::max(maxd, a)) break;
        prefix.push_back(a);
        extend_prefix(n, w, prefix, sum + a, std::max(maxd, a), out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DopCode> enumerate_codes(int n, int w) {
    if (w < 2) throw std::invalid_argument("enumerate_codes: weight must be at least 2");
    if (w >= n) throw std::invalid_argument("enumerate_codes: weight must be less than the length");

    std::vector<DopCode> codes;
    std::vector<int> prefix;
    prefix.reserve(w);
    extend_prefix(n, w, prefix, 0, 0, codes);
    return codes;
}

WprCode dop_to_wpr(const DopCode& code, int start) {
    if (code.w < 2 || static_cast<int>(code.dops.size()) != code.w)
        throw std::invalid_argument("dop_to_wpr: malformed code");
    if (start < 0 || start >= code.n)
        throw std::invalid_argument("dop_to_wpr: start position out of range");

    WprCode wpr;
    wpr.n = code.n;
    wpr.positions.reserve(code.w);
    int pos = start;
    wpr.positions.push_back(pos);
    for (int i = 0; i < code.w - 1; ++i) {
        pos = (pos + code.dops[i]) % code.n;
        wpr.positions.push_back(pos);
    }
    std::sort(wpr.positions.begin(), wpr.positions.end());
    return wpr;
}

BinaryCode wpr_to_binary(const WprCode& code) {
    if (code.n < 1) throw std::invalid_argument("wpr_to_binary: empty code");
    BinaryCode bin;
    bin.bits.assign(code.n, 0);
    int prev = -1;
    for (int p : code.positions) {
        if (p <= prev || p >= code.n)
            throw std::invalid_argument("wpr_to_binary: positions must be ascending in [0, n-1]");
        bin.bits[p] = 1;
        prev = p;
    }
    return bin;
}

DopCode binary_to_dop(const BinaryCode& code) {
    const int n = static_cast<int>(code.bits.size());
    std::vector<int> ones;
    for (int t = 0; t < n; ++t) {
        if (code.bits[t] > 1) throw std::invalid_argument("binary_to_dop: bits must be 0 or 1");
        if (code.bits[t]) ones.push_back(t);
    }
    if (ones.size() < 2) throw std::invalid_argument("binary_to_dop: weight must be at least 2");

    std::vector<int> gaps;
    gaps.reserve(ones.size());
    for (std::size_t i = 0; i + 1 < ones.size(); ++i) gaps.push_back(ones[i + 1] - ones[i]);
    gaps.push_back(n - ones.back() + ones.front());
    return canonicalize(gaps);
}

}  // namespace ooc
