#include "doctest.h"

#include "convexsum/hull.hpp"
#include "oracle.hpp"

#include <random>

using namespace convexsum;

namespace {

PointMatrix<Rational> random_cloud(std::mt19937_64& rng, int dim, int count, int den = 64) {
  std::uniform_int_distribution<int> num(0, den);
  PointMatrix<Rational> m(dim, count);
  for (int j = 0; j < count; ++j) {
    for (int i = 0; i < dim; ++i) m(i, j) = Rational(num(rng), den);
  }
  return m;
}

std::vector<oracle::Pt> to_pts(const PointMatrix<Rational>& m) {
  std::vector<oracle::Pt> out;
  for (Index j = 0; j < m.cols(); ++j) {
    oracle::Pt p;
    for (Index i = 0; i < m.rows(); ++i) p.push_back(m(i, j));
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("hull of small bodies") {
  PointMatrix<Rational> sq(2, 5);
  sq << 0, 1, 0, 1, Rational(1, 2), 0, 0, 1, 1, Rational(1, 2);
  auto h = convex_hull(sq);
  CHECK(h.affine_dim == 2);
  CHECK(h.extreme == std::vector<Index>{0, 2, 1, 3});
  CHECK(h.volume == 1);

  PointMatrix<Rational> tri(2, 4);
  tri << 0, 1, 0, Rational(1, 4), 0, 0, 1, Rational(1, 4);
  CHECK(convex_hull(tri).volume == Rational(1, 2));
  CHECK(convex_hull(tri).extreme.size() == 3);

  PointMatrix<Rational> cube(3, 9);
  for (int j = 0; j < 8; ++j) {
    for (int i = 0; i < 3; ++i) cube(i, j) = (j >> i) & 1;
  }
  cube.col(8) << Rational(1, 2), Rational(1, 2), 1;
  auto hc = convex_hull(cube, true);
  CHECK(hc.volume == 1);
  CHECK(hc.extreme.size() == 8);

  PointMatrix<Rational> flat(3, 4);
  flat << 0, 1, 0, 1, 0, 0, 1, 1, 2, 2, 2, 2;
  auto hf = convex_hull(flat);
  CHECK(hf.affine_dim == 2);
  CHECK(hf.volume == 0);
  CHECK(hf.extreme.size() == 4);

  PointMatrix<Rational> seg(3, 3);
  seg << 0, 2, 1, 0, 2, 1, 0, 2, 1;
  auto hs = convex_hull(seg);
  CHECK(hs.affine_dim == 1);
  CHECK(hs.extreme == std::vector<Index>{0, 1});

  PointMatrix<Rational> pt(4, 2);
  pt.setConstant(Rational(3, 7));
  CHECK(convex_hull(pt).affine_dim == 0);
  CHECK(convex_hull(pt).extreme.size() == 1);
}

TEST_CASE("hull over the quadratic field") {
  // Unit square rotated by 45 degrees and scaled by sqrt2: area 2.
  PointMatrix<Scalar> d(2, 4);
  const Scalar r = Scalar::sqrt2() / Scalar(2);
  d << r, Scalar(0) - r, Scalar(0), Scalar(0), Scalar(0), Scalar(0), r, Scalar(0) - r;
  CHECK(convex_hull(d).volume == Scalar(1));
  PointMatrix<Scalar> t(3, 4);
  t.setZero();
  t(0, 1) = Scalar::sqrt2();
  t(1, 2) = Scalar::sqrt3();
  t(2, 3) = Scalar(2);
  CHECK(convex_hull(t).volume == Scalar::sqrt6() / Scalar(3));
}

TEST_CASE("planar extreme points agree with the cubic oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = sorted_unique_columns<Rational>(random_cloud(rng, 2, 100, 16));
    auto pts = to_pts(m);
    auto h = convex_hull(m);
    std::vector<Index> expect;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!oracle::in_hull_of_others_2d(pts, i)) expect.push_back(static_cast<Index>(i));
    }
    auto got = h.extreme;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    CHECK(h.volume == oracle::volume(pts));
  }
}

TEST_CASE("hull agrees with brute-force facets in 3-D and 4-D") {
  std::mt19937_64 rng(9);
  for (int dim : {3, 4}) {
    for (int trial = 0; trial < 20; ++trial) {
      // A coarse grid forces coplanar and collinear boundary points.
      auto m = random_cloud(rng, dim, dim == 3 ? 24 : 14, trial % 2 == 0 ? 2 : 1000);
      m = sorted_unique_columns<Rational>(m);
      if (affine_span(m).dim < dim) continue;
      auto pts = to_pts(m);
      auto h = convex_hull(m);
      CHECK(h.volume == oracle::volume(pts));
      std::vector<Index> expect;
      for (std::size_t i : oracle::extreme_points(pts)) expect.push_back(static_cast<Index>(i));
      auto got = h.extreme;
      std::sort(got.begin(), got.end());
      CHECK(got == expect);
    }
  }
}

TEST_CASE("hull handles large coordinates") {
  std::mt19937_64 rng(13);
  for (int dim : {2, 3, 4}) {
    auto m = random_cloud(rng, dim, 12, 1000);
    PointMatrix<Rational> big = m;
    const Rational s = pow(Rational(10), 30);
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) big(i, j) = m(i, j) * s + Rational(1, 3);
    }
    CHECK(convex_hull(big).volume == convex_hull(m).volume * pow(s, dim));
    CHECK(convex_hull(big).extreme == convex_hull(m).extreme);
  }
}
