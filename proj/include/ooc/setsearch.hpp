#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ooc/correlation.hpp"

namespace ooc {

enum class SearchMode {
    ExactSize,    // every clique of exactly set_size codes
    AtLeastSize,  // every maximal clique with at least set_size codes
    Maximal,      // every maximal clique
};

struct SearchParams {
    int n = 0;
    int w = 0;
    int lambda_a = 0;
    int lambda_c = 0;
    int set_size = 0;
    SearchMode mode = SearchMode::ExactSize;
    std::size_t max_sets = kDefaultMaxSets;  // materialization ceiling
    int threads = 1;

    static constexpr std::size_t kDefaultMaxSets = 5'000'000;
};

// A group of code serials whose pairwise constraints satisfy the search
// parameters; members are ascending and duplicate-free.
struct CodeSet {
    std::vector<int> members;
};

// Sets sharing the same minimum member, in lexicographic order.
struct AnchorGroup {
    int anchor = 0;
    std::vector<CodeSet> sets;
};

bool operator==(const CodeSet& a, const CodeSet& b);

// Serials (1-based matrix positions) whose diagonal entry is <= lambda_a.
std::vector<int> eligible_codes(const CorrelationMatrix& matrix, int lambda_a);

// Principal submatrix on the eligible serials plus the index -> serial map.
// An empty eligible list yields an empty matrix, not an error.
struct ReducedMatrix {
    CorrelationMatrix lambda;
    std::vector<int> serials;
};
ReducedMatrix reduced_matrix(const CorrelationMatrix& matrix, const std::vector<int>& eligible);

// Enumerates code sets over the compatibility graph (edges where the
// cross entry is <= lambda_c) per the requested mode. Output is sorted
// lexicographically by member list and is identical for any thread count.
// Throws resource_exhausted when more than max_sets sets would be built.
std::vector<CodeSet> find_sets(const ReducedMatrix& reduced, const SearchParams& params);

// Partitions lexicographically sorted sets by their minimum member.
std::vector<AnchorGroup> group_by_anchor(const std::vector<CodeSet>& sets);

// Eligible serials that appear in none of the sets.
std::vector<int> unused_codes(const std::vector<int>& eligible, const std::vector<CodeSet>& sets);

struct resource_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ooc
