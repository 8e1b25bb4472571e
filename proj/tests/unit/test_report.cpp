#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "bchlab/error.hpp"
#include "bchlab/families.hpp"
#include "bchlab/repro.hpp"
#include "bchlab/report.hpp"
#include "bchlab/tables.hpp"

using namespace bchlab;

namespace {

std::vector<std::string> keys(const Json& j)
{
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out.push_back(it.key());
    }
    return out;
}

} // namespace

TEST_CASE("field and code objects")
{
    const FieldCtx ctx = build_field_ctx_q(3, 3);
    const auto f = field_json(ctx);
    CHECK(keys(f) == std::vector<std::string>{"p", "s", "m", "prim_poly_q", "prim_poly_qm"});
    CHECK(f["prim_poly_qm"].size() == 4);
    const auto code = build_bch(ctx, {3, 3, 2, 4, 1, false});
    const auto c = code_json(ctx, code);
    CHECK(c["k"] == 7);
    CHECK(c["n"] == 13);
    CHECK(c["d_bruteforce"].is_null());
    CHECK(c["generator"].size() == 7);
    CHECK(code_json(ctx, code, 4)["d_bruteforce"] == 4);
}

TEST_CASE("leader listing")
{
    CosetSpace space(3, 3, 2);
    const auto j = leaders_json(space, all_leaders(space, true));
    CHECK(j["n"] == 13);
    std::uint64_t covered = 0;
    for (const auto& e : j["leaders"]) {
        covered += e["size"].get<std::uint64_t>();
        CHECK(e["members"].size() == e["size"].get<std::size_t>());
    }
    CHECK(covered == 13);
}

TEST_CASE("weight tables keep big frequencies exact")
{
    const auto w = closed_form_distribution(FamilyKind::V4, 3, 5);
    const auto j = weights_json("V4", 3, 5, w, "closed_form");
    CHECK(keys(j) == std::vector<std::string>{"family", "q", "m", "length", "k", "entries", "source"});
    BigInt total = 0;
    for (const auto& e : j["entries"]) {
        REQUIRE(e[1].is_string());
        total += BigInt(e[1].get<std::string>());
    }
    CHECK(total == w.total());

    const auto csv = weights_csv("C_DELTA1", 3, 3, closed_form_distribution(FamilyKind::CDelta1, 3, 3), "closed_form");
    CHECK(csv ==
          "family,q,m,length,k,weight,frequency,source\n"
          "C_DELTA1,3,3,13,4,0,1,closed_form\n"
          "C_DELTA1,3,3,13,4,7,26,closed_form\n"
          "C_DELTA1,3,3,13,4,9,26,closed_form\n"
          "C_DELTA1,3,3,13,4,10,26,closed_form\n"
          "C_DELTA1,3,3,13,4,13,2,closed_form\n");
}

TEST_CASE("manifest")
{
    RunManifest m;
    m.command = "weights";
    m.parameters = {{"q", 3}, {"m", 3}};
    m.fields.push_back(build_field_ctx_q(3, 3));
    m.verdicts.push_back({"closed_vs_enum", true, "closed form vs enumeration", ""});
    CHECK(m.all_ok());
    const auto j = m.to_json();
    CHECK_FALSE(j.contains("timing"));
    CHECK(j["version"] == version_string());
    const auto first = make_report(m, Json{{"x", 1}}).dump();
    CHECK(first == make_report(m, Json{{"x", 1}}).dump());
    m.seconds = 0.5;
    CHECK(m.to_json().contains("timing"));
    m.verdicts.push_back({"other", false, "", "mismatch"});
    CHECK_FALSE(m.all_ok());
}

TEST_CASE("writing files")
{
    const std::string path = "bchlab_report_test.json";
    write_text_file(path, "{}\n");
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "{}\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x.json", "{}"), Error);
}

TEST_CASE("field size parsing")
{
    CHECK(parse_field_size("81") == 81);
    CHECK(parse_field_size("3^4") == 81);
    CHECK(parse_field_size("5^5") == 3125);
    CHECK_THROWS(parse_field_size("abc"));
    CHECK_THROWS(parse_field_size("3^"));
}

TEST_CASE("claim registry shape")
{
    const auto claims = claim_registry();
    std::set<std::string> ids;
    std::set<std::string> criteria;
    for (const auto& c : claims) {
        CHECK(ids.insert(c.id).second);
        criteria.insert(c.criterion);
    }
    CHECK(criteria == std::set<std::string>{"AC1", "AC2", "AC3", "AC4", "AC5", "AC6", "AC7"});
    ReproOptions tiny;
    tiny.max_field = 1;
    std::size_t seen = 0;
    const auto res = run_claims({claims.front()}, tiny, [&](const ClaimResult&) { ++seen; });
    CHECK(seen == 1);
    CHECK(res.front().status == ClaimStatus::Skip);
}
