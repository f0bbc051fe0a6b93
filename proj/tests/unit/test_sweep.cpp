#include <gtest/gtest.h>

#include <random>

#include "cp1graft/sweep.hpp"

using namespace cp1graft;

namespace {

struct Rng {
  std::mt19937_64 gen{4242};
  std::normal_distribution<double> n{0.0, 1.0};
  cplx c() { return {n(gen), n(gen)}; }
  MobiusMap map() {
    for (;;) {
      cplx a = c(), b = c(), cc = c(), d = c();
      if (std::abs(a * d - b * cc) > 0.1) return MobiusMap(a, b, cc, d);
    }
  }
  Circle circle() { return circle_through(RiemannPoint::finite(c()), RiemannPoint::finite(c()), RiemannPoint::finite(c())); }
};

template <class T, class Eq>
void expect_same(const std::vector<SweepOutcome<T>>& s, const std::vector<SweepOutcome<T>>& p, Eq eq) {
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    ASSERT_EQ(s[i].value.has_value(), p[i].value.has_value()) << i;
    EXPECT_EQ(s[i].error, p[i].error) << i;
    EXPECT_EQ(s[i].message, p[i].message) << i;
    if (s[i].value) {
      EXPECT_TRUE(eq(*s[i].value, *p[i].value)) << i;
    }
  }
}

}  // namespace

TEST(Sweep, MapPreservesOrderAndCapturesErrors) {
  auto f = [](std::size_t i) -> long {
    if (i % 97 == 5) fail(ErrorCode::OutOfRange, "item " + std::to_string(i));
    return static_cast<long>(i * i);
  };
  auto s = sweep_map<long>(5000, f, Execution::Serial);
  auto p = sweep_map<long>(5000, f, Execution::Parallel);
  expect_same(s, p, [](long a, long b) { return a == b; });
  EXPECT_EQ(p[5].error, ErrorCode::OutOfRange);
  EXPECT_NE(p[5].message.find("item 5"), std::string::npos);
  EXPECT_EQ(*p[4999].value, 4999L * 4999L);
}

TEST(Sweep, ClassifyBatchMatchesSerial) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<int> num(1, 299);
  std::vector<std::array<AngleValue, 3>> in;
  for (int n = 0; n < 3000; ++n) {
    in.push_back({AngleValue::pi_fraction(num(gen), 100), AngleValue::pi_fraction(num(gen) % 100 + 1, 101),
                  AngleValue::pi_fraction(num(gen) % 100 + 1, 103)});
  }
  auto s = classify_batch(in, Execution::Serial), p = classify_batch(in, Execution::Parallel);
  expect_same(s, p, [](const AtomicImmersion& a, const AtomicImmersion& b) {
    return a.table_row == b.table_row && a.signs == b.signs && a.kind == b.kind;
  });
}

TEST(Sweep, DecomposeBatchMatchesSerial) {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<int> num(1, 1999);
  std::vector<IndexTriple> in;
  for (int n = 0; n < 3000; ++n) {
    // Lattice values such as 2pi are kept on purpose: they must fail per item.
    in.push_back({AngleValue::pi_fraction(num(gen), 100), AngleValue::pi_fraction(num(gen), 100),
                  AngleValue::pi_fraction(num(gen), 100)});
  }
  in.push_back({AngleValue::pi_fraction(2), AngleValue::pi_fraction(1), AngleValue::pi_fraction(1)});
  auto s = decompose_batch(in, Execution::Serial), p = decompose_batch(in, Execution::Parallel);
  expect_same(s, p, [](const Decomposition& a, const Decomposition& b) {
    return a.curve == b.curve && a.relabel == b.relabel && a.atomic.table_row == b.atomic.table_row;
  });
  EXPECT_EQ(p.back().error, ErrorCode::InvalidIndices);
}

TEST(Sweep, TraceIdentityBatch) {
  Rng r;
  std::vector<MobiusMap> in;
  for (int n = 0; n < 2000; ++n) {
    MobiusMap g = r.map();
    double t = 0.1 + 6.0 * (n % 97) / 97.0;
    in.push_back(g * MobiusMap(std::polar(1.0, t / 2), 0.0, 0.0, std::polar(1.0, -t / 2)) * g.inverse());
  }
  in.push_back(MobiusMap(2.0, 0.0, 0.0, 0.5));
  auto s = trace_identity_batch(in, Execution::Serial), p = trace_identity_batch(in, Execution::Parallel);
  expect_same(s, p, [](double a, double b) { return a == b; });
  for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_LT(*p[i].value, 1e-10);
  EXPECT_EQ(p.back().error, ErrorCode::NotElliptic);
}

TEST(Sweep, ReflectionRotationBatch) {
  Rng r;
  std::vector<CirclePair> in;
  while (in.size() < 1000) {
    Circle a = r.circle(), b = r.circle();
    if (std::abs(inversive_product(a, b)) < 0.95) in.push_back({a, b});
  }
  auto s = reflection_rotation_batch(in, Execution::Serial), p = reflection_rotation_batch(in, Execution::Parallel);
  expect_same(s, p, [](double a, double b) { return a == b; });
  for (const auto& o : p) EXPECT_LT(*o.value, 1e-9);
}
