#include "ooc/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ooc/version.hpp"

namespace ooc {

namespace {

const char* mode_name(SearchMode mode) {
    switch (mode) {
        case SearchMode::ExactSize: return "exact";
        case SearchMode::AtLeastSize: return "atleast";
        case SearchMode::Maximal: return "maximal";
    }
    return "?";
}

void check_params(const RunConfig& c) {
    if (c.w < 2 || c.w >= c.n)
        throw std::invalid_argument("search: requires 2 <= w < n");
    if (c.lambda_a < 1 || c.lambda_a > c.w - 1)
        throw std::invalid_argument("search: requires 1 <= lambda_a <= w-1");
    if (c.lambda_c < 1 || c.lambda_c > c.w - 1)
        throw std::invalid_argument("search: requires 1 <= lambda_c <= w-1");
    if (c.set_size && *c.set_size < 1)
        throw std::invalid_argument("search: set size must be at least 1");
    if (c.threads < 0) throw std::invalid_argument("search: thread count must be non-negative");
    if (c.max_sets < 1) throw std::invalid_argument("search: max-sets must be at least 1");
}

int resolved_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

void verify_with_oracle(const std::vector<DopCode>& codes, const CorrelationMatrix& matrix) {
    if (static_cast<int>(codes.size()) != matrix.size())
        throw std::invalid_argument("verify_with_oracle: matrix size mismatch");

    std::vector<BinaryCode> bins;
    bins.reserve(codes.size());
    for (const auto& c : codes) bins.push_back(wpr_to_binary(dop_to_wpr(c, 0)));

    for (std::size_t i = 0; i < codes.size(); ++i) {
        const int expect = brute_auto(bins[i]);
        if (expect != matrix.at(static_cast<int>(i), static_cast<int>(i)))
            throw verification_error("oracle mismatch: auto constraint of code " +
                                     std::to_string(i + 1));
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            const int cross = brute_cross(bins[i], bins[j]);
            if (cross != matrix.at(static_cast<int>(i), static_cast<int>(j)))
                throw verification_error("oracle mismatch: cross constraint of codes " +
                                         std::to_string(i + 1) + " and " + std::to_string(j + 1));
        }
    }
}

RunResult run_pipeline(const RunConfig& config) {
    check_params(config);

    RunResult result;
    result.config = config;

    const std::vector<DopCode> codes = enumerate_codes(config.n, config.w);
    const int threads = resolved_threads(config.threads);

    if (config.list_only) {
        // Only the auto constraints are needed; skip the pairwise work.
        for (const auto& c : codes) {
            CodeRow row{c.serial, c.dops, dop_to_wpr(c, 0).positions, auto_constraint(c)};
            result.codes.push_back(std::move(row));
        }
    } else {
        const CorrelationMatrix matrix = correlation_matrix(codes, threads);
        if (config.verify) verify_with_oracle(codes, matrix);

        for (const auto& c : codes) {
            CodeRow row{c.serial, c.dops, dop_to_wpr(c, 0).positions,
                        matrix.at(c.serial - 1, c.serial - 1)};
            result.codes.push_back(std::move(row));
        }

        const int lambda = std::max(config.lambda_a, config.lambda_c);
        result.j_a = johnson_a(config.n, config.w, lambda);
        result.j_b = johnson_b(config.n, config.w, lambda);
        result.j_c = johnson_c_best(config.n, config.w, lambda);
        result.set_size = config.set_size ? *config.set_size : std::max(1LL, result.j_a);

        result.eligible = eligible_codes(matrix, config.lambda_a);
        const ReducedMatrix reduced = reduced_matrix(matrix, result.eligible);

        SearchParams params;
        params.n = config.n;
        params.w = config.w;
        params.lambda_a = config.lambda_a;
        params.lambda_c = config.lambda_c;
        // Anything beyond the eligible count yields no sets; clamp so the
        // target always fits in an int.
        params.set_size = static_cast<int>(
            std::min<long long>(result.set_size, static_cast<long long>(reduced.serials.size()) + 1));
        params.mode = config.mode;
        params.max_sets = config.max_sets;
        params.threads = threads;

        result.sets = find_sets(reduced, params);
        result.groups = group_by_anchor(result.sets);
        result.unused = unused_codes(result.eligible, result.sets);
        result.total_sets = result.sets.size();
    }

    for (const auto& row : result.codes)
        if (std::find(result.lambda_a_values.begin(), result.lambda_a_values.end(),
                      row.lambda_a) == result.lambda_a_values.end())
            result.lambda_a_values.push_back(row.lambda_a);
    std::sort(result.lambda_a_values.begin(), result.lambda_a_values.end());
    return result;
}

std::string emit_text(const RunResult& r) {
    std::ostringstream os;
    const RunConfig& c = r.config;

    os << "Input code length (n): " << c.n << '\n';
    os << "Input weight (w): " << c.w << '\n';
    os << "Auto-correlation constraint (lambda_a): " << c.lambda_a << '\n';
    os << "Cross-correlation constraint (lambda_c): " << c.lambda_c << '\n';
    if (!c.list_only) {
        os << "Search mode: " << mode_name(c.mode) << '\n';
        if (c.mode != SearchMode::Maximal) os << "Set size: " << r.set_size << '\n';
    }
    os << '\n';

    os << "Codes formed = " << r.codes.size() << '\n' << '\n';
    os << "Code No. | DOPR | WPR | lambda_a" << '\n';
    for (const auto& row : r.codes)
        os << row.serial << " | " << join_ints(row.dopr) << " | " << join_ints(row.wpr) << " | "
           << row.lambda_a << '\n';
    os << '\n';

    os << "Available lambda_a values: " << join_ints(r.lambda_a_values) << '\n';
    if (c.list_only) return os.str();
    os << '\n';

    os << "Eligible codes (lambda_a <= " << c.lambda_a << ") = " << r.eligible.size() << '\n';
    os << join_ints(r.eligible) << '\n' << '\n';

    const int lambda = std::max(c.lambda_a, c.lambda_c);
    os << "Johnson bound J_A(" << c.n << ", " << c.w << ", " << lambda << ") = " << r.j_a << '\n';
    os << "Johnson bound J_B (as printed): ";
    if (r.j_b.value)
        os << *r.j_b.value << '\n';
    else
        os << "not applicable (" << r.j_b.note << ")" << '\n';
    os << "Johnson bound J_C: ";
    if (r.j_c.value)
        os << *r.j_c.value << " (" << r.j_c.note << ")" << '\n';
    else
        os << "not applicable (" << r.j_c.note << ")" << '\n';
    os << '\n';

    for (const auto& group : r.groups) {
        os << "***** Code " << group.anchor << " *****" << '\n';
        for (const auto& set : group.sets) os << join_ints(set.members) << '\n';
        os << "If we begin with Code No. " << group.anchor
           << ", No. of sets = " << group.sets.size() << "." << '\n';
        os << '\n';
    }

    os << "Codes in no set: " << join_ints(r.unused) << '\n' << '\n';
    os << "Total possible sets: " << r.total_sets << '\n';
    return os.str();
}

std::string emit_json(const RunResult& r) {
    using json = nlohmann::ordered_json;
    const RunConfig& c = r.config;

    json doc;
    doc["schema_version"] = kJsonSchemaVersion;
    doc["tool_version"] = kToolVersion;

    json params;
    params["n"] = c.n;
    params["w"] = c.w;
    params["lambda_a"] = c.lambda_a;
    params["lambda_c"] = c.lambda_c;
    if (c.list_only)
        params["set_size"] = nullptr;
    else if (c.mode == SearchMode::Maximal)
        params["set_size"] = nullptr;
    else
        params["set_size"] = r.set_size;
    params["mode"] = mode_name(c.mode);
    params["list_only"] = c.list_only;
    doc["params"] = std::move(params);

    json codes = json::array();
    for (const auto& row : r.codes) {
        json entry;
        entry["serial"] = row.serial;
        entry["dopr"] = row.dopr;
        entry["wpr"] = row.wpr;
        entry["lambda_a"] = row.lambda_a;
        codes.push_back(std::move(entry));
    }
    doc["codes"] = std::move(codes);
    doc["lambda_a_values"] = r.lambda_a_values;

    if (!c.list_only) {
        json bounds;
        bounds["j_a"] = r.j_a;
        if (r.j_b.value) {
            bounds["j_b"] = *r.j_b.value;
        } else {
            bounds["j_b"] = nullptr;
            bounds["j_b_note"] = r.j_b.note;
        }
        bounds["j_b_as_printed"] = true;
        if (r.j_c.value) {
            bounds["j_c"] = *r.j_c.value;
            bounds["j_c_note"] = r.j_c.note;
        } else {
            bounds["j_c"] = nullptr;
            bounds["j_c_note"] = r.j_c.note;
        }
        doc["bounds"] = std::move(bounds);

        doc["eligible"] = r.eligible;

        json sets = json::array();
        for (const auto& set : r.sets) sets.push_back(set.members);
        doc["sets"] = std::move(sets);

        json groups = json::array();
        for (const auto& group : r.groups) {
            json entry;
            entry["anchor"] = group.anchor;
            json members = json::array();
            for (const auto& set : group.sets) members.push_back(set.members);
            entry["sets"] = std::move(members);
            groups.push_back(std::move(entry));
        }
        doc["groups"] = std::move(groups);
        doc["unused"] = r.unused;
        doc["total_sets"] = r.total_sets;
    }

    return doc.dump(2) + "\n";
}

std::string emit_csv_codes(const RunResult& r) {
    std::ostringstream os;
    os << "serial,dopr,wpr,lambda_a" << '\n';
    for (const auto& row : r.codes)
        os << row.serial << ',' << join_ints(row.dopr) << ',' << join_ints(row.wpr) << ','
           << row.lambda_a << '\n';
    return os.str();
}

std::string emit_csv_sets(const RunResult& r) {
    std::ostringstream os;
    os << "set_index,anchor,members" << '\n';
    std::size_t index = 1;
    for (const auto& set : r.sets) {
        os << index++ << ',' << set.members.front() << ',' << join_ints(set.members) << '\n';
    }
    return os.str();
}

std::string emit_csv(const RunResult& r) {
    std::string out = "# codes\n" + emit_csv_codes(r);
    if (!r.config.list_only) out += "\n# sets\n" + emit_csv_sets(r);
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << content;
    out.flush();
    if (!out) throw io_error("write failed: " + path);
}

void write_output(const RunConfig& config, const RunResult& result) {
    const bool to_dir = config.output_path && std::filesystem::is_directory(*config.output_path);

    if (config.format == OutputFormat::Csv && to_dir) {
        const std::filesystem::path dir(*config.output_path);
        write_file((dir / "codes.csv").string(), emit_csv_codes(result));
        if (!config.list_only) write_file((dir / "sets.csv").string(), emit_csv_sets(result));
        return;
    }

    std::string payload;
    switch (config.format) {
        case OutputFormat::Text: payload = emit_text(result); break;
        case OutputFormat::Json: payload = emit_json(result); break;
        case OutputFormat::Csv: payload = emit_csv(result); break;
    }
    if (config.output_path) {
        if (to_dir) throw io_error(*config.output_path + " is a directory");
        write_file(*config.output_path, payload);
    } else {
        std::cout << payload;
    }
}

}  // namespace

int run(const RunConfig& config) {
    try {
        const RunResult result = run_pipeline(config);
        write_output(config, result);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const verification_error& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return 3;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace ooc
