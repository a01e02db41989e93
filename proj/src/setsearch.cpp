#include "ooc/setsearch.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>

namespace ooc {

bool operator==(const CodeSet& a, const CodeSet& b) { return a.members == b.members; }

std::vector<int> eligible_codes(const CorrelationMatrix& matrix, int lambda_a) {
    std::vector<int> serials;
    for (int i = 0; i < matrix.size(); ++i)
        if (matrix.at(i, i) <= lambda_a) serials.push_back(i + 1);
    return serials;
}

ReducedMatrix reduced_matrix(const CorrelationMatrix& matrix, const std::vector<int>& eligible) {
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        if (eligible[i] < 1 || eligible[i] > matrix.size())
            throw std::invalid_argument("reduced_matrix: serial out of range");
        if (i > 0 && eligible[i] <= eligible[i - 1])
            throw std::invalid_argument("reduced_matrix: serials must be strictly ascending");
    }

    ReducedMatrix reduced{CorrelationMatrix(static_cast<int>(eligible.size())), eligible};
    for (std::size_t i = 0; i < eligible.size(); ++i)
        for (std::size_t j = i; j < eligible.size(); ++j)
            reduced.lambda.set(static_cast<int>(i), static_cast<int>(j),
                               matrix.at(eligible[i] - 1, eligible[j] - 1));
    return reduced;
}

namespace {

// Fixed-capacity bit set over vertex indices.
class VertexSet {
public:
    explicit VertexSet(int capacity) : bits_((capacity + 63) / 64, 0) {}

    void add(int v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void remove(int v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    bool contains(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1; }

    int count() const {
        int c = 0;
        for (std::uint64_t word : bits_) c += std::popcount(word);
        return c;
    }
    bool empty() const {
        for (std::uint64_t word : bits_)
            if (word) return false;
        return true;
    }

    void intersect_with(const VertexSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
    }
    int intersection_count(const VertexSet& other) const {
        int c = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i)
            c += std::popcount(bits_[i] & other.bits_[i]);
        return c;
    }

    // Smallest member >= from, or -1.
    int next(int from) const {
        std::size_t word = static_cast<std::size_t>(from) >> 6;
        if (word >= bits_.size()) return -1;
        std::uint64_t cur = bits_[word] & (~std::uint64_t{0} << (from & 63));
        for (;;) {
            if (cur) return static_cast<int>(word * 64 + std::countr_zero(cur));
            if (++word >= bits_.size()) return -1;
            cur = bits_[word];
        }
    }

private:
    std::vector<std::uint64_t> bits_;
};

struct SearchContext {
    const ReducedMatrix& reduced;
    const SearchParams& params;
    std::vector<VertexSet> adjacency;
    std::atomic<std::size_t> emitted{0};
    std::atomic<bool> over_limit{false};

    SearchContext(const ReducedMatrix& r, const SearchParams& p) : reduced(r), params(p) {
        const int m = r.lambda.size();
        adjacency.assign(m, VertexSet(m));
        for (int u = 0; u < m; ++u)
            for (int v = u + 1; v < m; ++v)
                if (r.lambda.at(u, v) <= p.lambda_c) {
                    adjacency[u].add(v);
                    adjacency[v].add(u);
                }
    }

    bool emit(const std::vector<int>& vertices, std::vector<CodeSet>& out) {
        if (emitted.fetch_add(1) + 1 > params.max_sets) {
            over_limit.store(true);
            return false;
        }
        CodeSet set;
        set.members.reserve(vertices.size());
        for (int v : vertices) set.members.push_back(reduced.serials[v]);
        out.push_back(std::move(set));
        return true;
    }
};

// Ordered depth-first extension: the stack is ascending and candidates are
// always above its maximum, so sets come out in lexicographic order.
bool extend_exact(SearchContext& ctx, std::vector<int>& stack, const VertexSet& candidates,
                  std::vector<CodeSet>& out) {
    const int want = ctx.params.set_size;
    if (static_cast<int>(stack.size()) == want) return ctx.emit(stack, out);

    VertexSet rest = candidates;
    for (int v = rest.next(0); v != -1; v = rest.next(v + 1)) {
        rest.remove(v);
        VertexSet next = rest;
        next.intersect_with(ctx.adjacency[v]);
        if (static_cast<int>(stack.size()) + 1 + next.count() < want) continue;
        stack.push_back(v);
        const bool ok = extend_exact(ctx, stack, next, out);
        stack.pop_back();
        if (!ok) return false;
    }
    return true;
}

// Bron-Kerbosch with pivoting; reports maximal cliques only.
bool bron_kerbosch(SearchContext& ctx, std::vector<int>& stack, VertexSet p, VertexSet x,
                   std::vector<CodeSet>& out) {
    if (p.empty() && x.empty()) {
        if (ctx.params.mode == SearchMode::AtLeastSize &&
            static_cast<int>(stack.size()) < ctx.params.set_size)
            return true;
        return ctx.emit(stack, out);
    }

    int pivot = -1, pivot_links = -1;
    for (const VertexSet* side : {&p, &x}) {
        for (int u = side->next(0); u != -1; u = side->next(u + 1)) {
            const int links = p.intersection_count(ctx.adjacency[u]);
            if (links > pivot_links) {
                pivot_links = links;
                pivot = u;
            }
        }
    }

    VertexSet branch = p;
    if (pivot >= 0) {
        VertexSet skip = ctx.adjacency[pivot];
        for (int v = skip.next(0); v != -1; v = skip.next(v + 1)) branch.remove(v);
    }
    for (int v = branch.next(0); v != -1; v = branch.next(v + 1)) {
        VertexSet np = p, nx = x;
        np.intersect_with(ctx.adjacency[v]);
        nx.intersect_with(ctx.adjacency[v]);
        stack.push_back(v);
        const bool ok = bron_kerbosch(ctx, stack, np, nx, out);
        stack.pop_back();
        if (!ok) return false;
        p.remove(v);
        x.add(v);
    }
    return true;
}

// Runs the branch rooted at vertex v. Every set found here has v as its
// minimum member, so concatenating branch outputs in vertex order restores
// the global lexicographic order.
void run_branch(SearchContext& ctx, int v, std::vector<CodeSet>& out) {
    const int m = ctx.reduced.lambda.size();
    std::vector<int> stack{v};
    if (ctx.params.mode == SearchMode::ExactSize) {
        VertexSet candidates = ctx.adjacency[v];
        VertexSet above(m);
        for (int u = v + 1; u < m; ++u) above.add(u);
        candidates.intersect_with(above);
        if (1 + candidates.count() >= ctx.params.set_size)
            extend_exact(ctx, stack, candidates, out);
    } else {
        VertexSet p = ctx.adjacency[v], x = ctx.adjacency[v];
        VertexSet above(m), below(m);
        for (int u = v + 1; u < m; ++u) above.add(u);
        for (int u = 0; u < v; ++u) below.add(u);
        p.intersect_with(above);
        x.intersect_with(below);
        std::vector<CodeSet> found;
        bron_kerbosch(ctx, stack, p, x, found);
        std::sort(found.begin(), found.end(),
                  [](const CodeSet& a, const CodeSet& b) { return a.members < b.members; });
        for (auto& s : found) out.push_back(std::move(s));
    }
}

}  // namespace

std::vector<CodeSet> find_sets(const ReducedMatrix& reduced, const SearchParams& params) {
    if (params.mode != SearchMode::Maximal && params.set_size < 1)
        throw std::invalid_argument("find_sets: set size must be at least 1");
    if (params.max_sets < 1) throw std::invalid_argument("find_sets: max_sets must be at least 1");
    if (static_cast<int>(reduced.serials.size()) != reduced.lambda.size())
        throw std::invalid_argument("find_sets: serial map does not match the matrix");

    const int m = reduced.lambda.size();
    if (m == 0) return {};
    if (params.mode == SearchMode::ExactSize && params.set_size > m) return {};

    SearchContext ctx(reduced, params);
    std::vector<std::vector<CodeSet>> per_branch(m);

    const int workers = std::max(1, std::min(params.threads, m));
    if (workers == 1) {
        for (int v = 0; v < m && !ctx.over_limit.load(); ++v) run_branch(ctx, v, per_branch[v]);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const int v = next.fetch_add(1);
                    if (v >= m || ctx.over_limit.load()) return;
                    run_branch(ctx, v, per_branch[v]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    if (ctx.over_limit.load())
        throw resource_exhausted("find_sets: more than " + std::to_string(params.max_sets) +
                                 " sets; raise max_sets or tighten the constraints");

    std::vector<CodeSet> sets;
    sets.reserve(ctx.emitted.load());
    for (auto& branch : per_branch)
        for (auto& s : branch) sets.push_back(std::move(s));
    return sets;
}

std::vector<AnchorGroup> group_by_anchor(const std::vector<CodeSet>& sets) {
    std::vector<AnchorGroup> groups;
    for (const auto& set : sets) {
        if (set.members.empty()) throw std::invalid_argument("group_by_anchor: empty set");
        const int anchor = set.members.front();
        if (groups.empty() || groups.back().anchor != anchor) {
            if (!groups.empty() && anchor < groups.back().anchor)
                throw std::invalid_argument("group_by_anchor: sets must be sorted");
            groups.push_back({anchor, {}});
        }
        groups.back().sets.push_back(set);
    }
    return groups;
}

std::vector<int> unused_codes(const std::vector<int>& eligible, const std::vector<CodeSet>& sets) {
    std::vector<int> used;
    for (const auto& set : sets) used.insert(used.end(), set.members.begin(), set.members.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::vector<int> unused;
    std::set_difference(eligible.begin(), eligible.end(), used.begin(), used.end(),
                        std::back_inserter(unused));
    return unused;
}

}  // namespace ooc
