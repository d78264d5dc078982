#include <random>

#include "doctest.h"

#include "disto/heisenberg.hpp"
#include "disto/mat2.hpp"
#include "disto/rings.hpp"

using disto::BigInt;
using disto::HeisElt;
using disto::Mat2;
using disto::ProjMat2;
using disto::QuadInt;

namespace {

std::mt19937_64 rng(0x5eed0002);

// Random unimodular integer matrix: product of elementary shears.
Mat2<BigInt> random_unimodular() {
  Mat2<BigInt> m = Mat2<BigInt>::identity();
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> amt(-3, 3);
  for (int i = 0; i < 6; ++i) {
    long k = amt(rng);
    Mat2<BigInt> e = coin(rng) ? Mat2<BigInt>{1, k, 0, 1} : Mat2<BigInt>{1, 0, k, 1};
    m = m * e;
  }
  return m;
}

HeisElt random_heis() {
  std::uniform_int_distribution<long> d(-9, 9);
  return HeisElt{d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("matrix products and inverses") {
  const Mat2<BigInt> a{2, 1, 1, 1};
  CHECK(a * a == Mat2<BigInt>{5, 3, 3, 2});
  CHECK(a * a.inverse() == Mat2<BigInt>::identity());
  CHECK_THROWS_AS(Mat2<BigInt>(2, 0, 0, 1).inverse(), disto::NotUnimodular);
}

TEST_CASE("det is multiplicative on random unimodular pairs") {
  for (int i = 0; i < 200; ++i) {
    const auto m = random_unimodular(), n = random_unimodular();
    CHECK((m * n).det() == m.det() * n.det());
    CHECK((m.det() == 1 || m.det() == -1));
  }
}

TEST_CASE("projective canonical form identifies +-M") {
  const Mat2<BigInt> b{1, 1, 0, 1};
  CHECK(ProjMat2<BigInt>(b) == ProjMat2<BigInt>(-b));
  for (int i = 0; i < 100; ++i) {
    const auto m = random_unimodular();
    CHECK(ProjMat2<BigInt>(m) == ProjMat2<BigInt>(-m));
    CHECK(ProjMat2<BigInt>(m).key() == ProjMat2<BigInt>(-m).key());
  }
  // Sign decided by the exact QuadInt sign when the leading entry is
  // irrational.
  const Mat2<QuadInt> q{QuadInt{-1, 1}, QuadInt{0, 0}, QuadInt{0, 0}, QuadInt{1, 1}};
  CHECK(ProjMat2<QuadInt>(q) == ProjMat2<QuadInt>(-q));
  CHECK(disto::sign_of(ProjMat2<QuadInt>(q).rep.a) > 0);
}

TEST_CASE("heisenberg group law") {
  const HeisElt g{1, 0, 0}, h{0, 1, 0};
  CHECK(disto::heis_commutator(g, h) == HeisElt{0, 0, 1});

  // (n,0,0)(0,n,0)(-n,0,0)(0,-n,0) = (0,0,n^2) at n=3
  const HeisElt gn{3, 0, 0}, hn{0, 3, 0};
  CHECK(gn * hn * gn.inverse() * hn.inverse() == HeisElt{0, 0, 9});

  for (int i = 0; i < 200; ++i) {
    const HeisElt u = random_heis(), v = random_heis(), w = random_heis();
    CHECK((u * v) * w == u * (v * w));
    CHECK(u * u.inverse() == HeisElt{});
    CHECK(u.inverse() * u == HeisElt{});
  }
}

TEST_CASE("center is exactly the z-axis and commutes with everything") {
  const HeisElt f{0, 0, 1}, g{1, 0, 0}, h{0, 1, 0};
  for (int i = 0; i < 200; ++i) {
    const HeisElt u = random_heis();
    CHECK(f * u == u * f);
    const bool commutes_with_both = (u * g == g * u) && (u * h == h * u);
    CHECK(commutes_with_both == u.is_central());
  }
}
