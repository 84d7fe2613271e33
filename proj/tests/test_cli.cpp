#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd =
      std::string(FUSIONKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return r;
  }
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), got);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, Lr) {
  EXPECT_EQ(run("lr 2,1 2,1 3,2,1").out, "2\n");
  EXPECT_EQ(run("lr 1 1 2").out, "1\n");
  EXPECT_EQ(run("lr 1 1 3").out, "0\n");
  EXPECT_EQ(run("lr 2,1 2,1 3,2,1 --method lattice").out, "2\n");
}

TEST(Cli, Fusion) {
  const Outcome r = run("fusion 2,1,0 2,1,0 3,2,1 --n 3 --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("fusion 1,0,0 1,1,0 2,1,0 --n 3 --k 2 --method oracle").out,
            "1\n");
  EXPECT_EQ(run("fusion 2,1 2,1 3,2,1 --n 3 --k 2 --method remark13").out,
            "1\n");
}

TEST(Cli, FusionExplainListsFixedPoints) {
  const Outcome r = run("fusion 2,1 2,1 3,2,1 --n 3 --k 2 --explain");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("1\n# ", 0), 0U) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("fusion 2,1,0 2,1,0 4,2,0 --n 3 --k 2").code, 2);
  EXPECT_EQ(run("fusion 0 3 3 --n 2 --k 3").code, 3);
  EXPECT_EQ(run("fusion 0 3 3 --n 2 --k 3 --method oracle").out, "1\n");
  EXPECT_EQ(run("lr 2,x 1 3").code, 2);
  EXPECT_EQ(run("lr 1,2 1 3").code, 2);
  EXPECT_EQ(run("fusion 1 1 2 --n 2").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
}

TEST(Cli, Table) {
  const Outcome r = run("table --n 2 --k 1 --mu 1 --max-size 2");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "fusionkit.table/1");
  // Level one sl(2): 0 -> 1, 1 -> 1,1 and 1,1 -> 2,1.
  ASSERT_EQ(j["rows"].size(), 3U);
  EXPECT_EQ(j["rows"][0]["lambda"], "0");
  EXPECT_EQ(j["rows"][0]["nu"], "1");
  for (const auto& row : j["rows"]) {
    EXPECT_EQ(row["N"], 1);
  }
  EXPECT_EQ(run("table --n 2 --k 1 --mu 1 --max-size 2").out, r.out);
}

TEST(Cli, TableEmpty) {
  const Outcome r = run("table --n 2 --k 1 --mu 1 --max-size -1");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["rows"].empty());
}

TEST(Cli, TableCsv) {
  const Outcome r = run("table --n 3 --k 2 --mu 2,1 --max-size 3 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("lambda,mu,nu,n,k,N\n", 0), 0U);
  EXPECT_NE(r.out.find("\"2,1\",\"2,1\",\"3,2,1\",3,2,1\n"),
            std::string::npos)
      << r.out;
}

TEST(Cli, Verify) {
  const Outcome r = run("verify --suite all --n-max 2 --k-max 2 --size-max 4");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "fusionkit.report/1");
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_FALSE(j.contains("wall_seconds"));
  EXPECT_EQ(run("verify --suite all --n-max 2 --k-max 2 --size-max 4").out,
            r.out);
}
