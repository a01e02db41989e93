#pragma once

#include <optional>
#include <string>

namespace ooc {

// Johnson bound A: the nested floor chain
//   floor( 1/w * floor( (n-1)/(w-1) * ... * floor( (n-lambda)/(w-lambda) ) ) )
// evaluated innermost-first in exact integer arithmetic.
// Requires 2 <= w < n and 1 <= lambda <= w-1.
long long johnson_a(int n, int w, int lambda);

// Bound value plus applicability note; `value` is empty when the bound's
// precondition fails and `note` then carries the reason.
struct BoundResult {
    std::optional<long long> value;
    std::string note;
};

// Johnson bound B, evaluated exactly as printed in its source:
// Min(1, floor((w-lambda)/(w^2 - n*lambda))), applicable only when
// w^2 > n*lambda. Reported for information; never used for gating.
BoundResult johnson_b(int n, int w, int lambda);

// Improved Johnson bound C for a chosen k in [1, lambda-1] with
// (w-k)^2 > (n-k)(lambda-k). The factor h multiplies the innermost
// numerator before that level's floor. k <= 0 is an error; a k outside a
// nonempty range, or a failed condition, yields not-applicable.
BoundResult johnson_c(int n, int w, int lambda, int k);

// Tightest applicable bound C over all k in [1, lambda-1]; the note names
// the chosen k, or the reason none applies.
BoundResult johnson_c_best(int n, int w, int lambda);

}  // namespace ooc
