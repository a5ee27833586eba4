#include "qapsearch/tuner.h"

#include <gtest/gtest.h>

#include <sstream>

#include "qapsearch/error.h"

namespace qapsearch {
namespace {

TEST(ValidateThreadConfigTest, Examples) {
  EXPECT_TRUE(ValidateThreadConfig({6144, 192, 32}).valid);
  EXPECT_TRUE(ValidateThreadConfig({1024, 1024, 1}).valid);
  EXPECT_TRUE(ValidateThreadConfig({12288, 32, 384}).valid);

  const ConfigCheck bad = ValidateThreadConfig({6144, 100, 61});
  EXPECT_FALSE(bad.valid);
  ASSERT_FALSE(bad.violations.empty());
  EXPECT_NE(bad.violations[0].find("t mod 32"), std::string::npos);
}

TEST(ValidateThreadConfigTest, EachConstraintNamed) {
  auto first = [](ThreadConfig c) {
    const auto check = ValidateThreadConfig(c);
    return check.violations.empty() ? std::string() : check.violations.front();
  };
  EXPECT_NE(first({1040, 32, 32}).find("N mod 32"), std::string::npos);
  EXPECT_NE(first({2048, 2048, 1}).find("t outside"), std::string::npos);
  EXPECT_NE(first({992, 32, 31}).find("N outside"), std::string::npos);
  EXPECT_NE(first({12320, 32, 385}).find("N outside"), std::string::npos);
  EXPECT_NE(first({1056, 64, 16}).find("N mod t"), std::string::npos);
  EXPECT_NE(first({1024, 64, 15}).find("b != N / t"), std::string::npos);
}

TEST(EnumerateConfigsTest, FilterOnPowerOfTwo) {
  const auto configs = EnumerateConfigs(1024);
  std::vector<ThreadConfig> expected;
  for (std::int64_t t : {32, 64, 128, 256, 512, 1024}) {
    expected.push_back({1024, t, 1024 / t});
  }
  EXPECT_EQ(configs, expected);
}

TEST(EnumerateConfigsTest, FilterOn1056) {
  const auto configs = EnumerateConfigs(1056);
  const std::vector<ThreadConfig> expected{
      {1056, 32, 33}, {1056, 96, 11}, {1056, 352, 3}};
  EXPECT_EQ(configs, expected);
}

TEST(EnumerateConfigsTest, InvalidFilterIsEmpty) {
  EXPECT_TRUE(EnumerateConfigs(1000).empty());
  EXPECT_TRUE(EnumerateConfigs(16384).empty());
}

TEST(EnumerateConfigsTest, SelfConsistentAndOrdered) {
  const auto configs = EnumerateConfigs();
  EXPECT_TRUE(std::is_sorted(configs.begin(), configs.end()));
  for (const auto& c : configs) ASSERT_TRUE(ValidateThreadConfig(c).valid);
}

TEST(EnumerateConfigsTest, MatchesBruteForceAtSmallBounds) {
  const LaunchBounds small{8, 8, 64, 64, 256};
  std::vector<ThreadConfig> brute;
  for (std::int64_t n = 0; n <= 300; ++n)
    for (std::int64_t t = 1; t <= 80; ++t)
      for (std::int64_t b = 0; b <= 300; ++b)
        if (n % 8 == 0 && t % 8 == 0 && t >= 8 && t <= 64 && n >= 64 &&
            n <= 256 && n % t == 0 && b * t == n)
          brute.push_back({n, t, b});
  EXPECT_EQ(EnumerateConfigs(std::nullopt, small), brute);
}

TEST(MakeSweepTest, Examples) {
  const SearchConfig base;
  EXPECT_NO_THROW(MakeSweep(SweepAxis::kInstances, {64, 128, 256, 512, 1024}, base));
  EXPECT_THROW(MakeSweep(SweepAxis::kInstances, {100}, base), DomainError);
  EXPECT_THROW(MakeSweep(SweepAxis::kInstances, {2048}, base), DomainError);
  EXPECT_NO_THROW(MakeSweep(SweepAxis::kNeighborhoods, {100, 200, 400, 800}, base));
  EXPECT_THROW(MakeSweep(SweepAxis::kSeeds, {}, base), DomainError);
  EXPECT_THROW(MakeSweep(SweepAxis::kSeeds, {2, 2}, base), DomainError);
  EXPECT_THROW(MakeSweep(SweepAxis::kSeeds, {0, 1}, base), DomainError);
  EXPECT_THROW(MakeSweep(SweepAxis::kSeeds, {1}, base, 0), DomainError);
}

TEST(ExpandSweepTest, CountAndConfigs) {
  SearchConfig base;
  base.master_seed = 100;
  for (int reps : {1, 3, 8}) {
    const auto plan = MakeSweep(SweepAxis::kNeighborhoods, {100, 200, 400}, base, reps);
    const auto runs = ExpandSweep(plan);
    ASSERT_EQ(runs.size(), 3u * reps);
    EXPECT_EQ(runs.back().config.iterations, 400);
    EXPECT_EQ(runs.back().master_seed, 100u + reps - 1);
  }
  const auto inst_runs = ExpandSweep(MakeSweep(SweepAxis::kInstances, {64, 128}, base, 2));
  EXPECT_EQ(inst_runs[2].config.n_starts, 128);
}

TEST(ExpandSweepTest, SeedGroupsDoNotOverlapWithinValue) {
  SearchConfig base;
  base.master_seed = 10;
  const auto runs = ExpandSweep(MakeSweep(SweepAxis::kSeeds, {1, 4}, base, 3));
  ASSERT_EQ(runs.size(), 6u);
  EXPECT_EQ(runs[3].master_seed, 10u);
  EXPECT_EQ(runs[4].master_seed, 14u);
  EXPECT_EQ(runs[5].master_seed, 18u);
}

TEST(WritePlanCsvTest, Format) {
  SearchConfig base;
  base.master_seed = 7;
  std::ostringstream out;
  WritePlanCsv(MakeSweep(SweepAxis::kInstances, {64, 128}, base, 2), out);
  EXPECT_EQ(out.str(),
            "axis,value,master_seed,repetition\n"
            "instances,64,7,0\n"
            "instances,64,8,1\n"
            "instances,128,7,0\n"
            "instances,128,8,1\n");
}

TEST(SweepAxisTest, Names) {
  EXPECT_EQ(ParseSweepAxis("seeds"), SweepAxis::kSeeds);
  EXPECT_EQ(ParseSweepAxis("threads"), std::nullopt);
  EXPECT_EQ(SweepAxisName(SweepAxis::kNeighborhoods), "neighborhoods");
}

}  // namespace
}  // namespace qapsearch
