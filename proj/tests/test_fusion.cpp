#include <doctest.h>

#include <cstdio>
#include <random>
#include <vector>

#include "chosal/fusion.hpp"
#include "chosal/saliency_map.hpp"
#include "helpers.hpp"

using namespace chosal;
using chosal::testing::TempDir;

namespace {

SaliencyMap map_of(int w, int h, std::vector<double> values) {
  SaliencyMap m;
  m.width = w;
  m.height = h;
  m.values = std::move(values);
  return m;
}

SaliencyMap random_map(int w, int h, std::mt19937& rng) {
  std::uniform_real_distribution<double> v(0.0, 1.0);
  SaliencyMap m = map_of(w, h, std::vector<double>(static_cast<std::size_t>(w) * h));
  for (double& x : m.values) x = v(rng);
  return m;
}

}  // namespace

TEST_CASE("minmax: constant map collapses to zero, affine otherwise") {
  SaliencyMap constant = map_of(3, 2, {4, 4, 4, 4, 4, 4});
  minmax_normalize(constant);
  for (double v : constant.values) CHECK(v == 0.0);

  SaliencyMap ramp = map_of(3, 1, {2.0, 3.0, 6.0});
  minmax_normalize(ramp);
  CHECK(ramp.values[0] == doctest::Approx(0.0));
  CHECK(ramp.values[1] == doctest::Approx(0.25));
  CHECK(ramp.values[2] == doctest::Approx(1.0));
}

TEST_CASE("fuse: zero cho zeroes the product") {
  const SaliencyMap cho = map_of(2, 2, {0, 0, 0, 0});
  const SaliencyMap gc = map_of(2, 2, {0.2, 0.4, 0.6, 0.8});
  const SaliencyMap fused = fuse(cho, gc);
  for (double v : fused.values) CHECK(v == 0.0);
}

TEST_CASE("fuse: all-one cho yields the normalized gc") {
  const SaliencyMap cho = map_of(2, 2, {1, 1, 1, 1});
  const SaliencyMap gc = map_of(2, 2, {0.2, 0.4, 0.6, 1.0});
  const SaliencyMap fused = fuse(cho, gc);
  SaliencyMap expect = gc;
  minmax_normalize(expect);
  for (int i = 0; i < 4; ++i) CHECK(fused.values[i] == doctest::Approx(expect.values[i]));
}

TEST_CASE("fuse matches the pointwise product oracle and is commutative") {
  std::mt19937 rng(55);
  const SaliencyMap a = random_map(9, 7, rng);
  const SaliencyMap b = random_map(9, 7, rng);

  SaliencyMap oracle = a;
  for (std::size_t i = 0; i < oracle.values.size(); ++i) oracle.values[i] = a.values[i] * b.values[i];
  minmax_normalize(oracle);

  const SaliencyMap fused = fuse(a, b);
  const SaliencyMap flipped = fuse(b, a);
  for (std::size_t i = 0; i < oracle.values.size(); ++i) {
    CHECK(fused.values[i] == doctest::Approx(oracle.values[i]).epsilon(1e-12));
    CHECK(flipped.values[i] == doctest::Approx(fused.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("fuse rejects mismatched dimensions") {
  CHECK_THROWS_AS(fuse(map_of(2, 2, {0, 0, 0, 0}), map_of(2, 1, {0, 0})),
                  std::invalid_argument);
}

TEST_CASE("to_u8 anchors and half-up rounding") {
  const SaliencyMap m = map_of(3, 1, {0.0, 0.5, 1.0});
  const GrayImage g = to_u8(m);
  CHECK(g.data[0] == 0);
  CHECK(g.data[1] == 128);
  CHECK(g.data[2] == 255);
}

TEST_CASE("to_u8 matches an independent rounding oracle") {
  std::mt19937 rng(13);
  const SaliencyMap m = random_map(16, 16, rng);
  const GrayImage g = to_u8(m);
  for (std::size_t i = 0; i < m.values.size(); ++i) {
    const int expect = static_cast<int>(m.values[i] * 255.0 + 0.5);
    CHECK(static_cast<int>(g.data[i]) == expect);
  }
}

TEST_CASE("raw map round-trips and has the documented layout") {
  TempDir tmp;
  SaliencyMap m = map_of(2, 1, {0.25, 1.0});
  write_raw_map(m, tmp.file("map.raw"));

  const SaliencyMap back = read_raw_map(tmp.file("map.raw"));
  CHECK(back.width == 2);
  CHECK(back.height == 1);
  CHECK(back.values[0] == doctest::Approx(0.25));
  CHECK(back.values[1] == doctest::Approx(1.0));

  FILE* fp = std::fopen(tmp.file("map.raw").c_str(), "rb");
  REQUIRE(fp != nullptr);
  unsigned char bytes[16];
  REQUIRE(std::fread(bytes, 1, 16, fp) == 16);
  std::fclose(fp);
  // u32 LE width=2, height=1, then f32 LE 0.25 and 1.0.
  const unsigned char expect[16] = {2, 0, 0, 0, 1, 0, 0, 0,
                                    0, 0, 0x80, 0x3e, 0, 0, 0x80, 0x3f};
  for (int i = 0; i < 16; ++i) CHECK(bytes[i] == expect[i]);
}
