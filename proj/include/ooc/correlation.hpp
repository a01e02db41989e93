#pragma once

#include <cstdint>
#include <vector>

#include "ooc/dop.hpp"

namespace ooc {

// w x (w-1) matrix of cyclic partial sums: row r lists the running sums of
// the rotation starting at gap a_r, the full-period sum n excluded. Rows are
// strictly increasing with entries in [1, n-1].
struct EDopMatrix {
    std::vector<std::vector<int>> rows;
};

EDopMatrix edop_matrix(const DopCode& code);

// Auto-correlation constraint: one plus the largest element overlap between
// two distinct rows of the extended matrix. Equals w for fully periodic
// codes such as (p, p, ..., p).
int auto_constraint(const EDopMatrix& m);
int auto_constraint(const DopCode& code);

// Cross-correlation constraint of two same-(n, w) codes: one plus the
// largest element overlap over all row pairs across the two matrices.
int cross_constraint(const EDopMatrix& x, const EDopMatrix& y);
int cross_constraint(const DopCode& x, const DopCode& y);

// Brute-force shift-correlation oracle. Works directly on the bit sequences
// and is kept independent of the extended-matrix path above.
int brute_auto(const BinaryCode& code);                         // tau in [1, n-1]
int brute_cross(const BinaryCode& x, const BinaryCode& y);      // tau in [0, n-1]

// Symmetric N x N matrix of pairwise constraints; the diagonal holds each
// code's auto constraint. Dense storage up to kTriangularThreshold codes,
// packed upper triangle above that.
class CorrelationMatrix {
public:
    static constexpr int kTriangularThreshold = 4096;

    CorrelationMatrix() = default;
    explicit CorrelationMatrix(int n_codes);
    CorrelationMatrix(int n_codes, bool triangular);

    int size() const { return n_; }
    bool triangular() const { return tri_; }

    std::uint8_t at(int i, int j) const;
    void set(int i, int j, std::uint8_t value);  // stores (i,j) and (j,i)

private:
    std::size_t index(int i, int j) const;

    int n_ = 0;
    bool tri_ = false;
    std::vector<std::uint8_t> lam_;
};

// Builds the full correlation matrix for codes sharing one (n, w). Unordered
// pairs may be computed on `threads` workers; the result is identical to the
// sequential computation.
CorrelationMatrix correlation_matrix(const std::vector<DopCode>& codes, int threads = 1);

}  // namespace ooc
