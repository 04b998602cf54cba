#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "enl/errors.hpp"
#include "enl/shape.hpp"

using enl::Shape;

namespace {

// A shape is sound for a concrete tail if every tail value respects it.
bool respects(const Shape& s, const std::vector<std::int64_t>& tail, std::int64_t start) {
  if (s.is_indeterminate()) return true;
  for (std::size_t i = 0; i < tail.size(); ++i) {
    std::int64_t v = tail[i];
    if (auto e = s.exact_at(static_cast<std::uint64_t>(start) + i); e && *e != v) return false;
    if (auto lo = s.lower(); lo && v < *lo) return false;
    if (auto hi = s.upper(); hi && v > *hi) return false;
  }
  return true;
}

struct Sample {
  Shape shape;
  std::vector<std::int64_t> tail;
};

constexpr std::int64_t kStart = 1000;
constexpr int kLen = 40;

Sample affine(std::int64_t a, std::int64_t b) {
  Sample s{Shape::affine(a, b), {}};
  for (int i = 0; i < kLen; ++i) s.tail.push_back(a * (kStart + i) + b);
  return s;
}

Sample bounded(std::int64_t lo, std::int64_t hi, std::mt19937_64& rng) {
  Sample s{Shape::bounded(lo, hi), {}};
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  for (int i = 0; i < kLen; ++i) s.tail.push_back(d(rng));
  return s;
}

}  // namespace

TEST(Shape, AffineArithmetic) {
  EXPECT_EQ(Shape::affine(1, 2) + Shape::affine(2, -1), Shape::affine(3, 1));
  EXPECT_EQ(Shape::affine(1, 0) - Shape::affine(1, 5), Shape::constant(-5));
  EXPECT_EQ(abs_of(Shape::affine(-2, 3)), Shape::affine(2, -3));
  EXPECT_EQ(times(Shape::affine(1, 1), 3), Shape::affine(3, 3));
}

TEST(Shape, MixedKinds) {
  EXPECT_TRUE((Shape::affine(1, 0) + Shape::bounded(-4, 4)).diverges_up());
  EXPECT_EQ(Shape::constant(2) + Shape::bounded(-1, 1), Shape::bounded(1, 3));
  EXPECT_TRUE((Shape::affine(1, 0) - Shape::affine(2, 0)).eventual_sign() == -1);
  EXPECT_TRUE((Shape::unbounded(1) + Shape::unbounded(-1)).is_indeterminate());
  EXPECT_EQ(min_of(Shape::affine(1, 0), Shape::constant(2)), Shape::constant(2));
  EXPECT_EQ(max_of(Shape::affine(1, 0), Shape::constant(2)), Shape::affine(1, 0));
  EXPECT_THROW(Shape::bounded(3, 1), enl::ValidationError);
  EXPECT_EQ(Shape::bounded(2, 2), Shape::constant(2));
}

TEST(Shape, SelectSign) {
  auto neg = Shape::constant(-1), zero = Shape::constant(0), pos = Shape::constant(1);
  EXPECT_EQ(select_sign(Shape::affine(1, -50), neg, zero, pos), pos);
  EXPECT_EQ(select_sign(Shape::constant(0), neg, zero, pos), zero);
  EXPECT_TRUE(select_sign(Shape::bounded(-1, 1), neg, zero, pos).is_indeterminate());
  EXPECT_EQ(select_sign(Shape::bounded(0, 3), neg, zero, zero), zero);
}

TEST(Shape, OverflowIsReported) {
  EXPECT_THROW(Shape::affine(INT64_MAX, 0) + Shape::affine(1, 0), enl::OverflowError);
  EXPECT_THROW(times(Shape::affine(INT64_MAX / 2 + 1, 0), 2), enl::OverflowError);
}

// Every table entry must be sound: the result shape covers the pointwise result.
TEST(Shape, OperationsAreSoundOnRandomTails) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> coef(-3, 3), off(-20, 20);
  auto draw = [&]() {
    if (rng() % 2 == 0) return affine(coef(rng), off(rng));
    std::int64_t lo = off(rng);
    return bounded(lo, lo + 1 + static_cast<std::int64_t>(rng() % 10), rng);
  };
  for (int iter = 0; iter < 3000; ++iter) {
    Sample x = draw(), y = draw();
    std::vector<std::int64_t> sum, diff, mn, mx, ab;
    for (int i = 0; i < kLen; ++i) {
      sum.push_back(x.tail[i] + y.tail[i]);
      diff.push_back(x.tail[i] - y.tail[i]);
      mn.push_back(std::min(x.tail[i], y.tail[i]));
      mx.push_back(std::max(x.tail[i], y.tail[i]));
      ab.push_back(std::abs(x.tail[i]));
    }
    SCOPED_TRACE(x.shape.to_string() + " / " + y.shape.to_string());
    EXPECT_TRUE(respects(x.shape + y.shape, sum, kStart));
    EXPECT_TRUE(respects(x.shape - y.shape, diff, kStart));
    EXPECT_TRUE(respects(min_of(x.shape, y.shape), mn, kStart));
    EXPECT_TRUE(respects(max_of(x.shape, y.shape), mx, kStart));
    EXPECT_TRUE(respects(abs_of(x.shape), ab, kStart));
  }
}
