#pragma once

// Shared helpers for the test suites: golden-file loading, exhaustive
// generators, and the naive subset oracle used to cross-check the search.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ooc/correlation.hpp"
#include "ooc/dop.hpp"
#include "ooc/setsearch.hpp"

namespace testsupport {

inline std::string data_dir() {
#ifdef OOC_TEST_DATA_DIR
    return OOC_TEST_DATA_DIR;
#else
    const char* env = std::getenv("OOC_TEST_DATA_DIR");
    return env ? env : "tests/golden";
#endif
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct GoldenCodeRow {
    int serial;
    std::vector<int> dopr;
    std::vector<int> wpr;
    int lambda_a;
};

inline std::vector<int> parse_ints(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> out;
    int v;
    while (is >> v) out.push_back(v);
    return out;
}

// Loads the tab-separated code table; '#' lines are comments.
inline std::vector<GoldenCodeRow> load_golden_codes(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<GoldenCodeRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string serial, dopr, wpr, lambda;
        std::getline(is, serial, '\t');
        std::getline(is, dopr, '\t');
        std::getline(is, wpr, '\t');
        std::getline(is, lambda, '\t');
        rows.push_back({std::stoi(serial), parse_ints(dopr), parse_ints(wpr), std::stoi(lambda)});
    }
    return rows;
}

// Loads whitespace-separated integers, skipping '#' comment lines.
inline std::vector<int> load_golden_ints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<int> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (int v : parse_ints(line)) out.push_back(v);
    }
    return out;
}

// One row per line.
inline std::vector<std::vector<int>> load_golden_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<int>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        out.push_back(parse_ints(line));
    }
    return out;
}

inline ooc::BinaryCode to_binary(const ooc::DopCode& code) {
    return ooc::wpr_to_binary(ooc::dop_to_wpr(code, 0));
}

// Visits every n-bit sequence of the given weight as a position vector.
template <typename Fn>
void for_each_weighted_sequence(int n, int w, Fn&& fn) {
    std::vector<int> positions(w);
    for (int i = 0; i < w; ++i) positions[i] = i;
    for (;;) {
        fn(positions);
        int i = w - 1;
        while (i >= 0 && positions[i] == n - w + i) --i;
        if (i < 0) return;
        ++positions[i];
        for (int j = i + 1; j < w; ++j) positions[j] = positions[j - 1] + 1;
    }
}

// Reference search: walks k-subsets of the eligible codes in lexicographic
// order, keeping those whose pairs all satisfy lambda_c. Uses plain matrix
// lookups; shares nothing with find_sets.
inline void naive_extend(const ooc::ReducedMatrix& reduced, int lambda_c, int k, int from,
                         std::vector<int>& chosen, std::vector<ooc::CodeSet>& out) {
    const int m = reduced.lambda.size();
    if (static_cast<int>(chosen.size()) == k) {
        ooc::CodeSet set;
        for (int v : chosen) set.members.push_back(reduced.serials[v]);
        out.push_back(std::move(set));
        return;
    }
    for (int v = from; v < m; ++v) {
        if (m - v < k - static_cast<int>(chosen.size())) break;
        bool fits = true;
        for (int u : chosen)
            if (reduced.lambda.at(u, v) > lambda_c) {
                fits = false;
                break;
            }
        if (!fits) continue;
        chosen.push_back(v);
        naive_extend(reduced, lambda_c, k, v + 1, chosen, out);
        chosen.pop_back();
    }
}

inline std::vector<ooc::CodeSet> naive_find_sets(const ooc::ReducedMatrix& reduced, int lambda_c,
                                                 int k) {
    std::vector<ooc::CodeSet> out;
    std::vector<int> chosen;
    if (k >= 1 && k <= reduced.lambda.size()) naive_extend(reduced, lambda_c, k, 0, chosen, out);
    return out;
}

}  // namespace testsupport
