#include <gtest/gtest.h>

#include <cstring>
#include <limits>
#include <vector>

#include "bbap/generator.h"
#include "bbap/kernels.h"

namespace bbap::kernels {
namespace {

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<double> RandomValues(SplitMix64& rng, int len) {
  std::vector<double> v(len);
  for (auto& x : v) {
    const auto r = rng.UniformInt(0, 9);
    if (r == 0) {
      x = -std::numeric_limits<double>::infinity();
    } else {
      x = static_cast<double>(rng.UniformInt(-4000, 4000)) / 8.0;
    }
  }
  return v;
}

TEST(Kernels, ScalarTakeMaxSemantics) {
  std::vector<double> base{1, 2, 3}, gain{1, 1, -5}, best{2, 1, 0};
  std::vector<std::int32_t> arg{-1, -1, -1};
  scalar::TakeMax(base, gain, best, arg, 7);
  EXPECT_EQ(best, (std::vector<double>{2, 3, 0}));
  EXPECT_EQ(arg, (std::vector<std::int32_t>{-1, 7, -1}));  // tie keeps old tag
}

TEST(Kernels, ScalarShiftedGain) {
  std::vector<std::int32_t> p{5, -3, 0};
  std::vector<double> out(3);
  scalar::ShiftedGain(p, -1.5, out);
  EXPECT_EQ(out, (std::vector<double>{3.5, -4.5, -1.5}));
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (DetectIsa() != Isa::kAvx2) GTEST_SKIP() << "AVX2 not available";
  }
};

TEST_F(KernelEquivalence, TakeMaxBitIdentical) {
  SplitMix64 rng(99);
  for (int len = 0; len <= 70; ++len) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto base = RandomValues(rng, len);
      const auto gain = RandomValues(rng, len);
      auto best_s = RandomValues(rng, len);
      auto best_v = best_s;
      std::vector<std::int32_t> arg_s(len), arg_v;
      for (auto& a : arg_s) a = static_cast<std::int32_t>(rng.UniformInt(-2, 4));
      arg_v = arg_s;
      scalar::TakeMax(base, gain, best_s, arg_s, 5);
      avx2::TakeMax(base, gain, best_v, arg_v, 5);
      ASSERT_EQ(arg_s, arg_v) << "len " << len;
      for (int k = 0; k < len; ++k) ASSERT_TRUE(SameBits(best_s[k], best_v[k]));
    }
  }
}

TEST_F(KernelEquivalence, ShiftedGainBitIdentical) {
  SplitMix64 rng(5);
  for (int len = 0; len <= 70; ++len) {
    std::vector<std::int32_t> p(len);
    for (auto& x : p) x = static_cast<std::int32_t>(rng.UniformInt(-100000, 100000));
    const double offset = static_cast<double>(rng.UniformInt(-1000, 1000)) / 3.0;
    std::vector<double> out_s(len), out_v(len);
    scalar::ShiftedGain(p, offset, out_s);
    avx2::ShiftedGain(p, offset, out_v);
    for (int k = 0; k < len; ++k) ASSERT_TRUE(SameBits(out_s[k], out_v[k]));
  }
}

TEST(Kernels, ActiveIsaCanBePinned) {
  const Isa detected = DetectIsa();
  EXPECT_TRUE(SetActiveIsa(Isa::kScalar));
  EXPECT_EQ(ActiveIsa(), Isa::kScalar);
  EXPECT_TRUE(SetActiveIsa(detected));
  EXPECT_EQ(ActiveIsa(), detected);
}

}  // namespace
}  // namespace bbap::kernels
