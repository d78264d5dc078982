#include <cmath>
#include <random>
#include <set>

#include "doctest.h"

#include "disto/rings.hpp"

using disto::BigInt;
using disto::GoldenInt;
using disto::QuadInt;

namespace {

std::mt19937_64 rng(0x5eed0001);

QuadInt random_quad() {
  std::uniform_int_distribution<long> d(-50, 50);
  return QuadInt{d(rng), d(rng)};
}

GoldenInt random_golden() {
  std::uniform_int_distribution<long> d(-50, 50);
  return GoldenInt{d(rng), d(rng)};
}

}  // namespace

TEST_CASE("quad_mul pinned products") {
  CHECK(QuadInt{3, 2} * QuadInt{3, -2} == QuadInt{1, 0});  // norm of lambda^2
  CHECK(QuadInt{1, 0} * QuadInt{7, -4} == QuadInt{7, -4}); // identity
  CHECK(QuadInt{1, 1} * QuadInt{1, 1} == QuadInt{3, 2});   // (1+sqrt2)^2
}

TEST_CASE("golden_mul pinned products") {
  CHECK(GoldenInt{0, 1} * GoldenInt{0, 1} == GoldenInt{1, 1});   // phi^2 = 1+phi
  CHECK(GoldenInt{1, 1} * GoldenInt{2, -1} == GoldenInt{1, 0});  // phi^2 * phi^-2
  CHECK(GoldenInt{0, 0} * GoldenInt{9, -4} == GoldenInt{0, 0});
}

TEST_CASE("ring axioms hold exactly on random triples") {
  for (int i = 0; i < 300; ++i) {
    const QuadInt a = random_quad(), b = random_quad(), c = random_quad();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);

    const GoldenInt x = random_golden(), y = random_golden(), z = random_golden();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
  }
}

TEST_CASE("conjugate norm has no sqrt2 part") {
  for (int i = 0; i < 100; ++i) {
    const QuadInt a = random_quad();
    CHECK((a * a.conj()).b == 0);
  }
}

TEST_CASE("unit detection matches existence of an inverse") {
  // Units of Z[phi] are +-phi^k; conjugate (a+b*phi -> (a+b) - b*phi)
  // inverts up to the sign of the norm.
  for (int k = -8; k <= 8; ++k) {
    GoldenInt u = disto::golden_phi2_pow(k);
    CHECK(u.is_unit());
    GoldenInt cj{u.a + u.b, -u.b};
    GoldenInt prod = u * cj;
    CHECK((prod == GoldenInt{1, 0} || prod == GoldenInt{-1, 0}));
  }
  CHECK_FALSE(GoldenInt{2, 0}.is_unit());
  CHECK_FALSE(GoldenInt{3, 1}.is_unit());
  CHECK(QuadInt{1, 1}.is_unit());
  CHECK(QuadInt{3, 2}.is_unit());
  CHECK_FALSE(QuadInt{2, 1}.is_unit());
}

TEST_CASE("exact sign agrees with the real embedding") {
  for (int i = 0; i < 500; ++i) {
    const QuadInt a = random_quad();
    const double v = a.to_real();
    if (std::fabs(v) > 1e-6) CHECK(a.sign() == (v > 0 ? 1 : -1));
    const GoldenInt g = random_golden();
    const double w = g.to_real();
    if (std::fabs(w) > 1e-6) CHECK(g.sign() == (w > 0 ? 1 : -1));
  }
  // Pell-sized case where doubles alone would be shaky:
  // 665857 - 470832*sqrt2 = 1/(665857 + 470832*sqrt2) > 0.
  CHECK(QuadInt{665857, -470832}.sign() == 1);
  CHECK(QuadInt{-665857, 470832}.sign() == -1);
  CHECK(QuadInt{0, 0}.sign() == 0);
}

TEST_CASE("golden real embedding is injective on a bounded box") {
  std::set<double> values;
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) values.insert(GoldenInt{a, b}.to_real());
  CHECK(values.size() == 41u * 41u);
}

TEST_CASE("phi power helper inverts cleanly") {
  for (int k = -6; k <= 6; ++k)
    CHECK(disto::golden_phi2_pow(k) * disto::golden_phi2_pow(-k) == GoldenInt{1, 0});
  CHECK(disto::golden_phi2_pow(1) == GoldenInt{1, 1});
  CHECK(disto::golden_phi2_pow(-1) == GoldenInt{2, -1});
}
