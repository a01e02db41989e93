#include "ooc/correlation.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace ooc {

EDopMatrix edop_matrix(const DopCode& code) {
    if (code.w < 2 || static_cast<int>(code.dops.size()) != code.w)
        throw std::invalid_argument("edop_matrix: malformed code");

    EDopMatrix m;
    m.rows.resize(code.w);
    for (int i = 0; i < code.w; ++i) {
        auto& row = m.rows[i];
        row.reserve(code.w - 1);
        int sum = 0;
        for (int j = 0; j < code.w - 1; ++j) {
            sum += code.dops[(i + j) % code.w];
            row.push_back(sum);
        }
    }
    return m;
}

namespace {

// Rows are strictly increasing, so a single merge pass counts the overlap.
int common_count(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

// When every entry fits in a 64-bit universe, a row becomes one mask and the
// overlap a popcount. Entries are distinct and below 64, so there are at
// most 64 rows. Results are identical to the merge.
bool fits_mask(const EDopMatrix& m) {
    if (m.rows.size() > 64) return false;
    for (const auto& row : m.rows)
        if (!row.empty() && row.back() > 63) return false;
    return true;
}

int fill_masks(const EDopMatrix& m, std::uint64_t* masks) {
    int count = 0;
    for (const auto& row : m.rows) {
        std::uint64_t mask = 0;
        for (int v : row) mask |= std::uint64_t{1} << v;
        masks[count++] = mask;
    }
    return count;
}

}  // namespace

int auto_constraint(const EDopMatrix& m) {
    const int w = static_cast<int>(m.rows.size());
    int best = 0;
    if (fits_mask(m)) {
        std::uint64_t masks[64];
        fill_masks(m, masks);
        for (int i = 0; i < w; ++i)
            for (int j = i + 1; j < w; ++j)
                best = std::max(best, std::popcount(masks[i] & masks[j]));
        return best + 1;
    }
    for (int i = 0; i < w; ++i)
        for (int j = i + 1; j < w; ++j) best = std::max(best, common_count(m.rows[i], m.rows[j]));
    return best + 1;
}

int auto_constraint(const DopCode& code) { return auto_constraint(edop_matrix(code)); }

int cross_constraint(const EDopMatrix& x, const EDopMatrix& y) {
    int best = 0;
    if (fits_mask(x) && fits_mask(y)) {
        std::uint64_t mx[64], my[64];
        const int wx = fill_masks(x, mx);
        const int wy = fill_masks(y, my);
        for (int i = 0; i < wx; ++i)
            for (int j = 0; j < wy; ++j) best = std::max(best, std::popcount(mx[i] & my[j]));
        return best + 1;
    }
    for (const auto& rx : x.rows)
        for (const auto& ry : y.rows) best = std::max(best, common_count(rx, ry));
    return best + 1;
}

int cross_constraint(const DopCode& x, const DopCode& y) {
    if (x.n != y.n || x.w != y.w)
        throw std::invalid_argument("cross_constraint: codes must share (n, w)");
    return cross_constraint(edop_matrix(x), edop_matrix(y));
}

CorrelationMatrix::CorrelationMatrix(int n_codes)
    : CorrelationMatrix(n_codes, n_codes > kTriangularThreshold) {}

CorrelationMatrix::CorrelationMatrix(int n_codes, bool triangular) : n_(n_codes), tri_(triangular) {
    if (n_codes < 0) throw std::invalid_argument("CorrelationMatrix: negative size");
    const std::size_t n = static_cast<std::size_t>(n_codes);
    lam_.assign(tri_ ? n * (n + 1) / 2 : n * n, 0);
}

std::size_t CorrelationMatrix::index(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::out_of_range("CorrelationMatrix: index out of range");
    if (tri_) {
        if (i > j) std::swap(i, j);
        const std::size_t row = static_cast<std::size_t>(i);
        return row * n_ - row * (row - 1) / 2 + (j - i);
    }
    return static_cast<std::size_t>(i) * n_ + j;
}

std::uint8_t CorrelationMatrix::at(int i, int j) const { return lam_[index(i, j)]; }

void CorrelationMatrix::set(int i, int j, std::uint8_t value) {
    lam_[index(i, j)] = value;
    if (!tri_ && i != j) lam_[index(j, i)] = value;
}

CorrelationMatrix correlation_matrix(const std::vector<DopCode>& codes, int threads) {
    if (codes.empty()) throw std::invalid_argument("correlation_matrix: empty code list");
    const int n0 = codes.front().n;
    const int w0 = codes.front().w;
    if (w0 > 255) throw std::invalid_argument("correlation_matrix: weight exceeds storage range");
    for (const auto& c : codes)
        if (c.n != n0 || c.w != w0)
            throw std::invalid_argument("correlation_matrix: codes must share (n, w)");

    const int count = static_cast<int>(codes.size());
    std::vector<EDopMatrix> edops;
    edops.reserve(count);
    for (const auto& c : codes) edops.push_back(edop_matrix(c));

    CorrelationMatrix m(count);
    auto fill_row = [&](int i) {
        m.set(i, i, static_cast<std::uint8_t>(auto_constraint(edops[i])));
        for (int j = i + 1; j < count; ++j)
            m.set(i, j, static_cast<std::uint8_t>(cross_constraint(edops[i], edops[j])));
    };

    const int workers = std::max(1, std::min(threads, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) fill_row(i);
        return m;
    }

    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                fill_row(i);
            }
        });
    }
    for (auto& th : pool) th.join();
    return m;
}

}  // namespace ooc
