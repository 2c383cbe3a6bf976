#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include <qhilb/cli.hpp>
#include <qhilb/report.hpp>

using namespace qhilb::cli;

namespace
{

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(const std::vector<std::string> &args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(const std::vector<std::string> &args)
{
    const auto r = invoke(args);
    EXPECT_EQ(r.code, exit_ok) << r.err;
    return nlohmann::json::parse(r.out);
}

const CheckResult *find_result(const RunReport &report, const std::string &needle)
{
    for (const auto &r : report.results) {
        if (r.name.find(needle) != std::string::npos) {
            return &r;
        }
    }
    return nullptr;
}

} // namespace

TEST(CliZeta, TheoremJson)
{
    const auto doc = invoke_json({"zeta", "--p", "1", "--order", "5", "--method", "theorem", "--format", "json"});
    EXPECT_EQ(doc["coefficients"], (nlohmann::json{"1", "1", "2", "3", "5", "7"}));
    EXPECT_EQ(doc["p"], 1);
    EXPECT_EQ(doc["order"], 5);
}

TEST(CliZeta, ClosedP2)
{
    const auto r = invoke({"zeta", "--p", "2", "--order", "3", "--method", "closed", "--format", "json"});
    ASSERT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out, "{\"coefficients\":[\"1\",\"1\",\"3\",\"5\"],\"method\":\"closed\",\"order\":3,\"p\":2}\n");
}

TEST(CliZeta, AllMethodsAgree)
{
    const auto doc = invoke_json({"zeta", "--p", "2", "--order", "10", "--method", "all", "--format", "json"});
    EXPECT_EQ(doc["verdict"], "pass");
    EXPECT_EQ(doc["results"]["theorem"], doc["results"]["oracle"]);
    EXPECT_EQ(doc["results"]["theorem"], doc["results"]["closed"]);
    const auto p3 = invoke_json({"zeta", "--p", "3", "--order", "6", "--method", "all", "--format", "json"});
    EXPECT_FALSE(p3["results"].contains("closed"));
    EXPECT_EQ(p3["verdict"], "pass");
}

TEST(CliZeta, CsvAndText)
{
    const auto csv = invoke({"zeta", "--p", "1", "--order", "2", "--method", "all", "--format", "csv"});
    EXPECT_EQ(csv.code, exit_ok);
    EXPECT_EQ(csv.out, "m,theorem,oracle,closed\n0,1,1,1\n1,1,1,1\n2,2,2,2\n");
    const auto text = invoke({"zeta", "--p", "2", "--order", "3", "--method", "oracle", "--format", "text"});
    EXPECT_EQ(text.out, "oracle: 1,1,3,5\n");
}

TEST(CliZeta, UsageErrors)
{
    EXPECT_EQ(invoke({"zeta", "--p", "3", "--method", "closed"}).code, exit_usage);
    EXPECT_EQ(invoke({"zeta", "--order", "3"}).code, exit_usage);
    EXPECT_EQ(invoke({"zeta", "--p", "0"}).code, exit_usage);
    EXPECT_EQ(invoke({"zeta", "--p", "2", "--format", "xml"}).code, exit_usage);
    EXPECT_EQ(invoke({"frobnicate"}).code, exit_usage);
    EXPECT_EQ(invoke({}).code, exit_usage);
    EXPECT_EQ(invoke({"verify", "--p", "0"}).code, exit_usage);
}

TEST(CliFountains, JsonAndOracle)
{
    const auto doc = invoke_json(
        {"fountains", "--p", "2", "--max-n", "6", "--max-k", "6", "--table", "g", "--format", "json", "--check-oracle"});
    EXPECT_EQ(doc["oracle"]["status"], "pass");
    EXPECT_EQ(doc["table"], "g");
    bool saw = false;
    for (const auto &e : doc["entries"]) {
        if (e["n"] == 2 && e["k"] == 2) {
            EXPECT_EQ(e["count"], "1");
            saw = true;
        }
    }
    EXPECT_TRUE(saw);
    const auto zero = invoke_json({"fountains", "--p", "2", "--max-n", "0", "--table", "h", "--format", "json"});
    EXPECT_EQ(zero["entries"], (nlohmann::json::array({{{"count", "1"}, {"k", 0}, {"n", 0}}})));
}

TEST(CliFountains, CsvHeader)
{
    const auto r = invoke({"fountains", "--p", "1", "--max-n", "3", "--format", "csv"});
    EXPECT_EQ(r.code, exit_ok);
    EXPECT_EQ(r.out.rfind("n,k,count\n", 0), 0U);
}

TEST(CliJson, OutputRoundTripsByteIdentical)
{
    const std::vector<std::vector<std::string>> cases{
        {"zeta", "--p", "2", "--order", "8", "--method", "all", "--format", "json"},
        {"fountains", "--p", "3", "--max-n", "7", "--format", "json", "--check-oracle"},
        {"identities", "--p", "1,2", "--order", "6", "--format", "json"},
    };
    for (const auto &args : cases) {
        const auto r = invoke(args);
        ASSERT_EQ(r.code, exit_ok) << r.err;
        const std::string body = r.out.substr(0, r.out.size() - 1);
        EXPECT_EQ(nlohmann::json::parse(body).dump(), body);
        EXPECT_EQ(nlohmann::ordered_json::parse(body).dump(), body);
    }
}

TEST(CliVerify, PassesAndReportsJson)
{
    const auto doc = invoke_json({"verify", "--p", "1,2", "--order", "6", "--format", "json"});
    EXPECT_EQ(doc["status"], "pass");
    EXPECT_EQ(doc["command"], "verify");
    for (const auto &r : doc["results"]) {
        EXPECT_EQ(r["status"], "pass") << r["name"];
    }
    const auto text = invoke({"verify", "--p", "1", "--order", "0", "--format", "text"});
    EXPECT_EQ(text.code, exit_ok) << text.out;
    EXPECT_EQ(text.out.find("FAIL"), std::string::npos);
}

TEST(CliVerify, WeightMutationIsCaught)
{
    VerifyOptions options;
    options.triangle_weight_offset = 1;
    const auto report = run_verify({1, 2}, 6, options);
    EXPECT_FALSE(report.passed());
    const auto *r = find_result(report, "p=1 theorem vs diagram oracle");
    ASSERT_NE(r, nullptr);
    EXPECT_FALSE(r->passed);
    EXPECT_NE(r->details.find("m=0"), std::string::npos) << r->details;
    EXPECT_EQ(report.to_json()["status"], "fail");
    EXPECT_NE(report.to_text().find("FAIL  p=1 theorem vs diagram oracle"), std::string::npos);
}

TEST(CliVerify, SerialAndParallelAgree)
{
    VerifyOptions serial;
    serial.parallel = false;
    const auto a = run_verify({1, 2, 3}, 5, serial);
    const auto b = run_verify({1, 2, 3}, 5);
    ASSERT_EQ(a.results.size(), b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
        EXPECT_EQ(a.results[i].name, b.results[i].name);
        EXPECT_EQ(a.results[i].passed, b.results[i].passed);
    }
    EXPECT_TRUE(a.passed());
}

TEST(CliCache, DirectoryFlagAndEnvironment)
{
    const auto dir = std::filesystem::temp_directory_path() / "qhilb-cli-cache-test";
    std::filesystem::remove_all(dir);
    EXPECT_EQ(invoke({"zeta", "--p", "2", "--order", "4", "--cache-dir", dir.string()}).code, exit_ok);
    EXPECT_FALSE(std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);

    ::setenv("QHILB_CACHE_DIR", dir.c_str(), 1);
    EXPECT_EQ(invoke({"fountains", "--p", "1", "--max-n", "5"}).code, exit_ok);
    ::unsetenv("QHILB_CACHE_DIR");
    EXPECT_TRUE(std::filesystem::exists(dir) && !std::filesystem::is_empty(dir));
    std::filesystem::remove_all(dir);
}
