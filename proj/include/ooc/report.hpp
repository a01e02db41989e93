#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ooc/bounds.hpp"
#include "ooc/setsearch.hpp"

namespace ooc {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    int n = 0;
    int w = 0;
    int lambda_a = 0;
    int lambda_c = 0;
    std::optional<int> set_size;  // default: Johnson bound A
    SearchMode mode = SearchMode::ExactSize;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> output_path;
    bool verify = false;     // recheck every constraint against the shift oracle
    bool list_only = false;  // stop after enumeration and the lambda_a table
    int threads = 0;         // 0 = hardware parallelism
    std::size_t max_sets = SearchParams::kDefaultMaxSets;
};

struct CodeRow {
    int serial = 0;
    std::vector<int> dopr;
    std::vector<int> wpr;  // start position 0
    int lambda_a = 0;
};

// Everything the emitters need, produced by one pipeline pass.
struct RunResult {
    RunConfig config;
    std::vector<CodeRow> codes;
    std::vector<int> lambda_a_values;  // distinct, ascending
    // Search-phase fields; absent on list-only runs.
    long long j_a = 0;
    BoundResult j_b;
    BoundResult j_c;
    long long set_size = 0;  // resolved target cardinality
    std::vector<int> eligible;
    std::vector<CodeSet> sets;
    std::vector<AnchorGroup> groups;
    std::vector<int> unused;
    std::size_t total_sets = 0;
};

struct verification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// enumerate -> correlate -> bound -> search -> group. Throws
// std::invalid_argument on bad parameters, verification_error on an oracle
// mismatch (verify mode), resource_exhausted past the set ceiling.
RunResult run_pipeline(const RunConfig& config);

// Recomputes every constraint in `matrix` with the shift oracle on the
// codes' binary forms; throws verification_error on the first mismatch.
void verify_with_oracle(const std::vector<DopCode>& codes, const CorrelationMatrix& matrix);

std::string emit_text(const RunResult& result);
std::string emit_json(const RunResult& result);
std::string emit_csv(const RunResult& result);        // single stream, section headers
std::string emit_csv_codes(const RunResult& result);  // codes.csv payload
std::string emit_csv_sets(const RunResult& result);   // sets.csv payload

// Full pipeline plus output writing, mapped to process exit status:
// 0 success, 2 invalid parameters, 3 verification failure, 4 I/O error,
// 1 other runtime failure (e.g. set ceiling exceeded).
int run(const RunConfig& config);

}  // namespace ooc
