// oocforge: enumerate unipolar orthogonal codes, evaluate Johnson bounds,
// and search out all code sets satisfying given correlation constraints.

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ooc/bounds.hpp"
#include "ooc/report.hpp"
#include "ooc/version.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream is(cleaned);
    std::vector<int> values;
    int v;
    while (is >> v) values.push_back(v);
    if (!is.eof()) throw std::invalid_argument("expected a list of integers, got '" + text + "'");
    return values;
}

int run_bounds(int n, int w, int lambda, std::optional<int> k) {
    const long long j_a = ooc::johnson_a(n, w, lambda);
    std::cout << "J_A(" << n << ", " << w << ", " << lambda << ") = " << j_a << '\n';

    const ooc::BoundResult j_b = ooc::johnson_b(n, w, lambda);
    std::cout << "J_B (as printed): ";
    if (j_b.value)
        std::cout << *j_b.value << '\n';
    else
        std::cout << "not applicable (" << j_b.note << ")" << '\n';

    const ooc::BoundResult j_c = k ? ooc::johnson_c(n, w, lambda, *k)
                                   : ooc::johnson_c_best(n, w, lambda);
    std::cout << "J_C: ";
    if (j_c.value) {
        std::cout << *j_c.value;
        if (k)
            std::cout << " (k=" << *k << ")";
        else
            std::cout << " (" << j_c.note << ")";
        std::cout << '\n';
        std::cout << "note: J_C folds h into the innermost numerator before flooring" << '\n';
    } else {
        std::cout << "not applicable (" << j_c.note << ")" << '\n';
    }
    return 0;
}

int run_convert(const std::string& dop_text, const std::string& binary_text, int start) {
    ooc::DopCode code;
    if (!dop_text.empty()) {
        code = ooc::canonicalize(parse_int_list(dop_text));
    } else {
        ooc::BinaryCode bin;
        for (char ch : binary_text) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("binary sequence must contain only 0 and 1");
            bin.bits.push_back(ch == '1');
        }
        code = ooc::binary_to_dop(bin);
        std::cout << "Binary: " << binary_text << '\n';
    }

    std::cout << "DOPR (canonical): ";
    for (int i = 0; i < code.w; ++i) std::cout << (i ? " " : "") << code.dops[i];
    std::cout << '\n';
    std::cout << "n = " << code.n << ", w = " << code.w << '\n';

    if (!dop_text.empty()) {
        const ooc::WprCode wpr = ooc::dop_to_wpr(code, start);
        std::cout << "WPR (start " << start << "): ";
        for (std::size_t i = 0; i < wpr.positions.size(); ++i)
            std::cout << (i ? " " : "") << wpr.positions[i];
        std::cout << '\n';
        const ooc::BinaryCode bin = ooc::wpr_to_binary(wpr);
        std::cout << "Binary: ";
        for (auto bit : bin.bits) std::cout << int(bit);
        std::cout << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unipolar (optical) orthogonal code toolkit"};
    app.set_version_flag("--version", ooc::kToolVersion);
    app.require_subcommand(1);

    // search
    ooc::RunConfig config;
    std::string mode = "exact", format = "text", out_path;
    auto* search = app.add_subcommand("search", "enumerate codes and search out code sets");
    search->add_option("--n", config.n, "code length")->required();
    search->add_option("--w", config.w, "code weight")->required();
    search->add_option("--la", config.lambda_a, "auto-correlation constraint")->required();
    search->add_option("--lc", config.lambda_c, "cross-correlation constraint")->required();
    int set_size = 0;
    auto* size_opt = search->add_option("--set-size", set_size, "target set cardinality (default: Johnson bound A)");
    search->add_option("--mode", mode, "exact|atleast|maximal")
        ->check(CLI::IsMember({"exact", "atleast", "maximal"}));
    search->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    search->add_option("--out", out_path, "output file (or directory for csv)");
    search->add_flag("--verify", config.verify, "recheck every constraint with the shift oracle");
    search->add_flag("--list-only", config.list_only, "stop after the code table");
    search->add_option("--threads", config.threads, "worker cap (0 = hardware)");
    search->add_option("--max-sets", config.max_sets, "materialized set ceiling");

    // bounds
    int bn = 0, bw = 0, blambda = 0, bk = 0;
    auto* bounds = app.add_subcommand("bounds", "evaluate Johnson bounds A, B, C");
    bounds->add_option("--n", bn, "code length")->required();
    bounds->add_option("--w", bw, "code weight")->required();
    bounds->add_option("--lambda", blambda, "correlation constraint")->required();
    auto* k_opt = bounds->add_option("--k", bk, "bound C parameter in [1, lambda-1]");

    // convert
    std::string dop_text, binary_text;
    int start = 0;
    auto* convert = app.add_subcommand("convert", "convert between DOPR, WPR and binary form");
    auto* dop_opt = convert->add_option("--dop", dop_text, "gap tuple, e.g. \"1,2,4\"");
    auto* bin_opt = convert->add_option("--binary", binary_text, "bit string, e.g. 1101000");
    convert->add_option("--start", start, "first 1-position for WPR output");
    dop_opt->excludes(bin_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (search->parsed()) {
            if (*size_opt) config.set_size = set_size;
            if (mode == "atleast")
                config.mode = ooc::SearchMode::AtLeastSize;
            else if (mode == "maximal")
                config.mode = ooc::SearchMode::Maximal;
            if (format == "json")
                config.format = ooc::OutputFormat::Json;
            else if (format == "csv")
                config.format = ooc::OutputFormat::Csv;
            if (!out_path.empty()) config.output_path = out_path;
            return ooc::run(config);
        }
        if (bounds->parsed())
            return run_bounds(bn, bw, blambda, *k_opt ? std::optional<int>(bk) : std::nullopt);
        if (convert->parsed()) {
            if (dop_text.empty() && binary_text.empty())
                throw std::invalid_argument("convert: provide --dop or --binary");
            return run_convert(dop_text, binary_text, start);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
