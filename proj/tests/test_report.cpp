#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "ooc/report.hpp"
#include "support.hpp"

using namespace ooc;

namespace {

RunConfig appendix_config() {
    RunConfig c;
    c.n = 19;
    c.w = 3;
    c.lambda_a = 1;
    c.lambda_c = 1;
    c.threads = 1;
    return c;
}

}  // namespace

TEST_CASE("run_pipeline reproduces the published (19, 3, 1, 1) run") {
    const RunResult r = run_pipeline(appendix_config());
    CHECK(r.codes.size() == 51);
    CHECK(r.lambda_a_values == std::vector<int>{1, 2});
    CHECK(r.j_a == 3);
    CHECK_FALSE(r.j_b.value.has_value());
    CHECK_FALSE(r.j_c.value.has_value());
    CHECK(r.set_size == 3);
    CHECK(r.eligible.size() == 42);
    CHECK(r.total_sets == 32);
    CHECK(r.groups.size() == 14);
    CHECK(r.unused.size() == 18);
}

TEST_CASE("run_pipeline validates parameters up front") {
    RunConfig c = appendix_config();
    c.w = 19;
    CHECK_THROWS_AS(run_pipeline(c), std::invalid_argument);
    c = appendix_config();
    c.lambda_a = 0;
    CHECK_THROWS_AS(run_pipeline(c), std::invalid_argument);
    c = appendix_config();
    c.lambda_c = 3;
    CHECK_THROWS_AS(run_pipeline(c), std::invalid_argument);
    c = appendix_config();
    c.set_size = 0;
    CHECK_THROWS_AS(run_pipeline(c), std::invalid_argument);
}

TEST_CASE("verify mode accepts a consistent pipeline") {
    RunConfig c = appendix_config();
    c.n = 13;
    c.verify = true;
    CHECK(run_pipeline(c).codes.size() == 12);
}

TEST_CASE("verify_with_oracle flags a doctored matrix") {
    const auto codes = enumerate_codes(7, 3);
    CorrelationMatrix m = correlation_matrix(codes);
    CHECK_NOTHROW(verify_with_oracle(codes, m));

    m.set(0, 1, m.at(0, 1) + 1);
    CHECK_THROWS_AS(verify_with_oracle(codes, m), verification_error);

    m.set(0, 1, m.at(0, 1) - 1);
    m.set(2, 2, 1);
    CHECK_THROWS_AS(verify_with_oracle(codes, m), verification_error);
}

TEST_CASE("emit_text lays out the published report sections") {
    const std::string text = emit_text(run_pipeline(appendix_config()));
    CHECK(text.find("Codes formed = 51") != std::string::npos);
    CHECK(text.find("1 | 1 1 17 | 0 1 2 | 2") != std::string::npos);
    CHECK(text.find("51 | 8 2 9 | 0 8 10 | 1") != std::string::npos);
    CHECK(text.find("Available lambda_a values: 1 2") != std::string::npos);
    CHECK(text.find("Johnson bound J_A(19, 3, 1) = 3") != std::string::npos);
    CHECK(text.find("***** Code 3 *****\n3 16 38\n3 16 44\n3 38 47\n3 44 47\n"
                    "If we begin with Code No. 3, No. of sets = 4.") != std::string::npos);
    CHECK(text.find("Total possible sets: 32") != std::string::npos);
}

TEST_CASE("emit_text matches the frozen golden report byte for byte") {
    const std::string text = emit_text(run_pipeline(appendix_config()));
    CHECK(text == testsupport::read_file(testsupport::data_dir() + "/n19_w3_report.txt"));
}

TEST_CASE("emit_json matches the frozen golden report byte for byte") {
    const std::string json = emit_json(run_pipeline(appendix_config()));
    CHECK(json == testsupport::read_file(testsupport::data_dir() + "/n19_w3_report.json"));
}

TEST_CASE("emit_json round-trips and cross-references cleanly") {
    const RunResult r = run_pipeline(appendix_config());
    const nlohmann::json doc = nlohmann::json::parse(emit_json(r));

    CHECK(doc["schema_version"] == 1);
    CHECK(doc["params"]["n"] == 19);
    CHECK(doc["params"]["set_size"] == 3);
    CHECK(doc["bounds"]["j_a"] == 3);
    CHECK(doc["bounds"]["j_b"].is_null());
    CHECK(doc["bounds"]["j_b_as_printed"] == true);
    CHECK(doc["total_sets"] == 32);
    CHECK(doc["sets"].size() == doc["total_sets"].get<std::size_t>());

    std::set<int> eligible(doc["eligible"].begin(), doc["eligible"].end());
    std::set<int> serials;
    for (const auto& code : doc["codes"]) serials.insert(code["serial"].get<int>());
    for (const auto& set : doc["sets"])
        for (const auto& member : set) CHECK(eligible.count(member.get<int>()) == 1);
    for (int s : eligible) CHECK(serials.count(s) == 1);

    std::size_t grouped = 0;
    for (const auto& group : doc["groups"]) grouped += group["sets"].size();
    CHECK(grouped == doc["total_sets"].get<std::size_t>());
}

TEST_CASE("a list-only run truncates the report") {
    RunConfig c = appendix_config();
    c.list_only = true;
    const RunResult r = run_pipeline(c);

    const nlohmann::json doc = nlohmann::json::parse(emit_json(r));
    CHECK(doc.contains("codes"));
    CHECK_FALSE(doc.contains("sets"));
    CHECK_FALSE(doc.contains("bounds"));
    CHECK(doc["params"]["set_size"].is_null());

    const std::string text = emit_text(r);
    CHECK(text.find("Available lambda_a values") != std::string::npos);
    CHECK(text.find("Johnson") == std::string::npos);
    CHECK(text.find("Total possible sets") == std::string::npos);
}

TEST_CASE("an empty search still prints a zero total") {
    RunConfig c = appendix_config();
    c.n = 7;
    c.set_size = 2;  // the two eligible codes clash, so no pairs exist
    const RunResult r = run_pipeline(c);
    CHECK(r.total_sets == 0);
    CHECK(emit_text(r).find("Total possible sets: 0") != std::string::npos);
}

TEST_CASE("csv output carries both sections") {
    const RunResult r = run_pipeline(appendix_config());
    const std::string codes = emit_csv_codes(r);
    CHECK(codes.find("serial,dopr,wpr,lambda_a\n1,1 1 17,0 1 2,2\n") != std::string::npos);
    const std::string sets = emit_csv_sets(r);
    CHECK(sets.find("set_index,anchor,members\n1,3,3 16 38\n") != std::string::npos);
    const std::string stream = emit_csv(r);
    CHECK(stream.find("# codes\n") != std::string::npos);
    CHECK(stream.find("# sets\n") != std::string::npos);
}

TEST_CASE("run maps outcomes onto exit codes") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ooc_report_test";
    fs::create_directories(dir);

    RunConfig ok = appendix_config();
    ok.n = 7;
    ok.format = OutputFormat::Json;
    ok.output_path = (dir / "out.json").string();
    CHECK(run(ok) == 0);
    CHECK(fs::exists(*ok.output_path));

    RunConfig bad = appendix_config();
    bad.w = 0;
    CHECK(run(bad) == 2);

    RunConfig unwritable = appendix_config();
    unwritable.n = 7;
    unwritable.output_path = (dir / "missing" / "out.txt").string();
    CHECK(run(unwritable) == 4);

    RunConfig exhausted = appendix_config();
    exhausted.max_sets = 3;
    exhausted.output_path = (dir / "never.txt").string();
    CHECK(run(exhausted) == 1);

    RunConfig csv_dir = appendix_config();
    csv_dir.format = OutputFormat::Csv;
    csv_dir.output_path = dir.string();
    CHECK(run(csv_dir) == 0);
    CHECK(fs::exists(dir / "codes.csv"));
    CHECK(fs::exists(dir / "sets.csv"));

    fs::remove_all(dir);
}
