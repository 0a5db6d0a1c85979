#include <gtest/gtest.h>

#include "harmpoly/report_json.hpp"
#include "support.hpp"

using namespace hp_test;

TEST(ReportJson, IndexReportKeysAndExactStrings) {
    auto r = index_report(path(4), {parse_exponent("-1"), parse_exponent("1/2")});
    Json j = to_json(r);
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items())
        keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"n", "m", "max_degree", "min_degree", "polynomial", "structure",
                                              "indices"}));
    EXPECT_EQ(j["indices"]["harmonic"], "11/6");
    EXPECT_EQ(j["indices"]["first_zagreb"], "10");
    EXPECT_EQ(j["indices"]["pi1_star"], "36");
    EXPECT_EQ(j["polynomial"]["text"], "2x^2 + x^3");
    EXPECT_EQ(j["polynomial"]["coefficients"]["2"], "2");
    EXPECT_EQ(j["structure"]["parity"], to_string(Parity::Neither));
    EXPECT_EQ(j["structure"]["zero_is_only_root"], false);
    EXPECT_EQ(j["indices"]["chi"][0]["value"], "11/12");
    EXPECT_FALSE(j["indices"]["chi"][0].contains("approx"));
    EXPECT_TRUE(j["indices"]["chi"][1]["value"].is_number_float());
    EXPECT_EQ(j["indices"]["chi"][1]["approx"], true);
}

TEST(ReportJson, EmptyGraphUsesNulls) {
    Json j = to_json(index_report(Graph::from_edges(3, std::vector<Edge>{}), {}));
    EXPECT_TRUE(j["max_degree"].is_null());
    EXPECT_TRUE(j["structure"]["degree"].is_null());
    EXPECT_EQ(j["indices"]["harmonic"], "0");
    EXPECT_EQ(j["polynomial"]["text"], "0");
}

TEST(ReportJson, VerificationReportIsByteStable) {
    VerifyOptions opt;
    opt.n_max = 4;
    std::string a = to_json(verify_corpus(opt)).dump(2);
    std::string b = to_json(verify_corpus(opt)).dump(2);
    EXPECT_EQ(a, b);
    Json j = Json::parse(a);
    EXPECT_EQ(j["corpus"]["count"], 75);
    EXPECT_EQ(j["total_fail"], 0);
    EXPECT_FALSE(j.contains("elapsed_seconds"));
    ASSERT_EQ(j["theorems"].size(), resolve_theorems("all").size());
    const auto& first = j["theorems"][0];
    for (const char* key : {"id", "pass", "fail", "not_applicable", "events", "witnesses"})
        EXPECT_TRUE(first.contains(key)) << key;
}

TEST(ReportJson, WitnessesCarryGraph6) {
    VerifyOptions opt;
    opt.n_max = 5;
    opt.theorems = {"p3-subgraph-min"};
    Json j = to_json(verify_corpus(opt));
    const auto& w = j["theorems"][0]["witnesses"];
    ASSERT_FALSE(w.empty());
    EXPECT_NO_THROW(parse_graph6(w[0]["graph6"].get<std::string>()));
    EXPECT_TRUE(w[0]["index"].is_number_unsigned());
    EXPECT_GT(j["total_fail"].get<int>(), 0);
}

TEST(ReportJson, CollisionReport) {
    Json j = to_json(mine_collisions(4));
    EXPECT_EQ(j["n_max"], 4);
    EXPECT_EQ(j["failing_pairs"], 0);
    EXPECT_EQ(j["pair_count"], j["pairs"].size());
    ASSERT_FALSE(j["pairs"].empty());
    EXPECT_EQ(j["pairs"][0]["agrees"], true);
    EXPECT_EQ(j, to_json(mine_collisions(4)));
}

TEST(ReportJson, FamilyComparison) {
    Json j = to_json(compare_family(parse_family_spec("wheel:6")));
    EXPECT_EQ(j["family"], "wheel:6");
    EXPECT_EQ(j["computed"]["text"], "5x^5 + 5x^7");
    EXPECT_EQ(j["closed_form"]["polynomial"]["text"], "5x^5 + 5x^7");
    EXPECT_EQ(j["match"], true);

    Json t = to_json(compare_family(parse_family_spec("trtree:4")));
    EXPECT_TRUE(t["closed_form"]["polynomial"].is_null());
    EXPECT_EQ(t["closed_form"]["nonzero_count"], 2);
    EXPECT_EQ(t["closed_form"]["exponent_support"], Json::array({4, 5}));
    EXPECT_EQ(t["match"], true);
}

TEST(ReportText, MentionsKeyValues) {
    std::string text = to_text(index_report(path(4), {parse_exponent("2")}));
    EXPECT_NE(text.find("H = 11/6"), std::string::npos) << text;
    EXPECT_NE(text.find("chi_2 = 34"), std::string::npos) << text;
    VerifyOptions opt;
    opt.n_max = 3;
    std::string table = to_text(verify_corpus(opt));
    EXPECT_NE(table.find("total failures: 0"), std::string::npos) << table;
}
