#include "ooc/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ooc {

namespace {

void check_common(int n, int w, int lambda) {
    if (w < 2 || w >= n) throw std::invalid_argument("johnson bound: requires 2 <= w < n");
    if (lambda < 1 || lambda > w - 1)
        throw std::invalid_argument("johnson bound: requires 1 <= lambda <= w-1");
}

// floor(a * v / d) in exact integer arithmetic.
long long mul_div_floor(long long a, long long v, long long d) {
    const __int128 num = static_cast<__int128>(a) * v;
    const __int128 q = num / d;
    if (q > std::numeric_limits<long long>::max())
        throw std::overflow_error("johnson bound: value out of range");
    return static_cast<long long>(q);
}

}  // namespace

long long johnson_a(int n, int w, int lambda) {
    check_common(n, w, lambda);
    long long v = (n - lambda) / (w - lambda);  // innermost level
    for (int i = lambda - 1; i >= 1; --i) v = mul_div_floor(n - i, v, w - i);
    return v / w;
}

BoundResult johnson_b(int n, int w, int lambda) {
    check_common(n, w, lambda);
    const long long gap = static_cast<long long>(w) * w - static_cast<long long>(n) * lambda;
    if (gap <= 0) return {std::nullopt, "requires w^2 > n*lambda"};
    const long long v = (w - lambda) / gap;
    return {std::min(1LL, v), ""};
}

BoundResult johnson_c(int n, int w, int lambda, int k) {
    check_common(n, w, lambda);
    if (k < 1) throw std::invalid_argument("johnson_c: k must be positive");
    if (lambda == 1) return {std::nullopt, "k range [1, lambda-1] empty"};
    if (k > lambda - 1) return {std::nullopt, "k outside [1, lambda-1]"};

    const long long lhs = static_cast<long long>(w - k) * (w - k);
    const long long rhs = static_cast<long long>(n - k) * (lambda - k);
    if (lhs <= rhs) return {std::nullopt, "requires (w-k)^2 > (n-k)(lambda-k)"};

    const long long h =
        std::min<long long>(n - k, static_cast<long long>(n - k) * (w - lambda) / (lhs - rhs));
    long long v = h;
    for (int i = k - 1; i >= 1; --i) v = mul_div_floor(n - i, v, w - i);
    return {v / w, ""};
}

BoundResult johnson_c_best(int n, int w, int lambda) {
    check_common(n, w, lambda);
    if (lambda == 1) return {std::nullopt, "k range [1, lambda-1] empty"};

    BoundResult best{std::nullopt, "no applicable k in [1, lambda-1]"};
    for (int k = 1; k <= lambda - 1; ++k) {
        const BoundResult r = johnson_c(n, w, lambda, k);
        if (!r.value) continue;
        if (!best.value || *r.value < *best.value) best = {r.value, "k=" + std::to_string(k)};
    }
    return best;
}

}  // namespace ooc
