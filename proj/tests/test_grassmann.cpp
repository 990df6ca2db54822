#include "skewbrane/errors.hpp"
#include "skewbrane/grassmann.hpp"
#include "skewbrane/hopf.hpp"
#include "skewbrane/skew_torus.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <numbers>

using namespace skewbrane;
using skewbrane::test::Uniform;

namespace {

constexpr double kPi = std::numbers::pi;

OrientedPlaned plane(std::initializer_list<Eigen::VectorXd> cols) {
  Eigen::MatrixXd m(cols.begin()->size(), static_cast<Eigen::Index>(cols.size()));
  int c = 0;
  for (const auto& v : cols) m.col(c++) = v;
  return plane_from_vectors(m);
}

Eigen::VectorXd e(int n, int i) { return Eigen::VectorXd::Unit(n, i); }

double plucker_identity(const Eigen::VectorXd& p) { return p(0) * p(5) - p(1) * p(4) + p(2) * p(3); }

// Inversion count of (i−1)p+j ↦ (j−1)q+i by brute force over all pairs.
long inversions_oracle(int p, int q) {
  std::vector<int> image(p * q);
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= p; ++j) image[(i - 1) * p + j - 1] = (j - 1) * q + i;
  }
  long inv = 0;
  for (size_t a = 0; a < image.size(); ++a) {
    for (size_t b = a + 1; b < image.size(); ++b) inv += image[a] > image[b];
  }
  return inv;
}

}  // namespace

TEST_CASE("plane_from_vectors: coordinate planes and orientation") {
  const OrientedPlaned p = plane({e(4, 0), e(4, 1)});
  CHECK(p.plucker()(0) == doctest::Approx(1.0));
  CHECK(p.plucker().tail(5).norm() < 1e-15);
  CHECK(plane({e(4, 1), e(4, 0)}).plucker()(0) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(plane({e(4, 0), 2.0 * e(4, 0)}), DegeneratePointError);
}

TEST_CASE("torus frame at the origin in xy coordinates") {
  const PluckerXY xy = to_xy(gauss_plane(build_torus0(), Eigen::Vector2d(0, 0)));
  CHECK(std::abs(xy.x2) < 1e-15);
  CHECK(xy.x3 == doctest::Approx(1.0));
}

TEST_CASE("to_xy examples") {
  PluckerXY a = to_xy(plane({e(4, 0), e(4, 1)}));
  CHECK(a.x1 == doctest::Approx(1.0));
  CHECK(a.y1 == doctest::Approx(1.0));
  CHECK(std::abs(a.x2) + std::abs(a.x3) + std::abs(a.y2) + std::abs(a.y3) < 1e-15);
  PluckerXY b = to_xy(plane({e(4, 2), e(4, 3)}));
  CHECK(b.x1 == doctest::Approx(1.0));
  CHECK(b.y1 == doctest::Approx(-1.0));
  Uniform u(2);
  const OrientedPlaned r = plane({u.vec(4), u.vec(4)});
  CHECK((to_xy(r).as_vector() + to_xy(r.reversed()).as_vector()).norm() < 1e-15);
  CHECK_THROWS_AS(to_xy(plane({e(5, 0), e(5, 1)})), ContractError);
  CHECK_THROWS_AS(to_xy(plane({e(4, 0), e(4, 1), e(4, 2)})), ContractError);
}

TEST_CASE("random frames: unit simple Plücker vectors and the xy identity") {
  Uniform u(17);
  double identity = 0.0, norm = 0.0, xy = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const OrientedPlaned p = plane({u.vec(4), u.vec(4)});
    identity = std::max(identity, std::abs(plucker_identity(p.plucker())));
    norm = std::max(norm, std::abs(p.plucker().norm() - 1.0));
    const PluckerXY c = to_xy(p);
    xy = std::max(xy, std::abs(c.x1 * c.x1 + c.x2 * c.x2 + c.x3 * c.x3 - c.y1 * c.y1 - c.y2 * c.y2 - c.y3 * c.y3));
  }
  CHECK(identity < 1e-12);
  CHECK(norm < 1e-12);
  CHECK(xy < 1e-12);
}

TEST_CASE("higher-dimensional planes use minors in lexicographic order") {
  const OrientedPlaned p = plane({e(5, 0), e(5, 1), e(5, 2)});
  CHECK(p.plucker().size() == 10);
  CHECK(p.plucker()(0) == doctest::Approx(1.0));
  CHECK(plucker_index_sets(5, 3).front() == std::vector<int>{0, 1, 2});
  CHECK(plucker_index_sets(5, 3).back() == std::vector<int>{2, 3, 4});
}

TEST_CASE("normal_plane orientation") {
  const OrientedPlaned n = normal_plane(plane({e(4, 0), e(4, 1)}));
  CHECK(n.plucker()(5) == doctest::Approx(1.0));  // +e3∧e4
  Uniform u(8);
  for (int N : {4, 5, 6}) {
    for (int k : {1, 2, 3}) {
      if (k >= N) continue;
      Eigen::MatrixXd f(N, k);
      for (int c = 0; c < k; ++c) f.col(c) = u.vec(N);
      const OrientedPlaned p = plane_from_vectors(f);
      const OrientedPlaned q = normal_plane(p);
      Eigen::MatrixXd full(N, N);
      full << p.frame(), q.frame();
      CHECK(full.determinant() > 0.0);
      CHECK((p.frame().transpose() * q.frame()).norm() < 1e-12);
      // Reversing the input reverses the output.
      CHECK(parallel_defect(normal_plane(p.reversed()), q).negative < 1e-12);
      // d∘d = (−1)^{k(N−k)}.
      const DefectValue dd = parallel_defect(normal_plane(q), p);
      CHECK(((k * (N - k)) % 2 == 0 ? dd.positive : dd.negative) < 1e-12);
    }
  }
}

TEST_CASE("S^3 in R^5 compares normal planes") {
  const SkewSphere s = build_skew_sphere(2, 0.0);
  const Immersion imm = s.section.immersion();
  CHECK(uses_normal_planes(imm));
  CHECK_FALSE(uses_normal_planes(build_torus0()));
  Eigen::VectorXd x = Eigen::Vector4d(1, 0, 0, 0);
  const OrientedPlaned n = gauss_plane(imm, x);
  CHECK(n.dim() == 2);
  CHECK(n.ambient_dim() == 5);
  const Eigen::MatrixXd frame = analytic_frame(imm, x);
  CHECK((frame.transpose() * n.frame()).norm() < 1e-12);
}

TEST_CASE("parallel_defect: examples and symmetries") {
  const OrientedPlaned a = plane({e(4, 0), e(4, 1)});
  const DefectValue same = parallel_defect(a, a);
  CHECK(same.positive == 0.0);
  CHECK(same.negative == doctest::Approx(2.0));

  const Immersion t0 = build_torus0();
  Uniform u(4);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Vector2d p(u.in(0, 2 * kPi), u.in(0, 2 * kPi));
    const OrientedPlaned base = gauss_plane(t0, p);
    CHECK(parallel_defect(base, gauss_plane(t0, p + Eigen::Vector2d(kPi, kPi))).positive < 1e-12);
    CHECK(parallel_defect(base, gauss_plane(t0, p + Eigen::Vector2d(kPi, 0))).negative < 1e-12);
    CHECK(parallel_defect(base, gauss_plane(t0, p + Eigen::Vector2d(0, kPi))).negative < 1e-12);
  }

  for (int i = 0; i < 1000; ++i) {
    const OrientedPlaned p = plane({u.vec(4), u.vec(4)});
    const OrientedPlaned q = plane({u.vec(4), u.vec(4)});
    const DefectValue pq = parallel_defect(p, q), qp = parallel_defect(q, p);
    CHECK(pq.positive == qp.positive);
    CHECK(pq.negative == qp.negative);
    const DefectValue flipped = parallel_defect(p.reversed(), q);
    CHECK(flipped.positive == pq.negative);
    CHECK(flipped.negative == pq.positive);
    CHECK(pq.positive * pq.positive + pq.negative * pq.negative == doctest::Approx(4.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(parallel_defect(a, plane({e(5, 0), e(5, 1)})), ContractError);
}

TEST_CASE("transpose_permutation_sign") {
  const PermutationSign s22 = transpose_permutation_sign(2, 2);
  CHECK(s22.inversions == 1);
  CHECK(s22.sign == -1);
  CHECK(transpose_permutation_sign(2, 4).sign == 1);
  CHECK(transpose_permutation_sign(4, 4).sign == 1);
  CHECK(transpose_permutation_sign(6, 6).sign == -1);
  for (int p = 2; p <= 8; p += 2) {
    for (int q = 2; q <= 8; q += 2) {
      const PermutationSign s = transpose_permutation_sign(p, q);
      CHECK(s.inversions == inversions_oracle(p, q));
      CHECK(s.consistent());
      CHECK(s.sign == ((p * q / 4) % 2 ? -1 : 1));
    }
  }
  CHECK_THROWS_AS(transpose_permutation_sign(3, 2), ContractError);
  CHECK_THROWS_AS(transpose_permutation_sign(0, 2), ContractError);
  CHECK_THROWS_AS(transpose_permutation_sign(200, 200), ContractError);
}

TEST_CASE("scalar-generic planes agree with double") {
  Uniform u(9);
  Eigen::MatrixXd m(4, 2);
  m << u.vec(4), u.vec(4);
  const auto pf = plane_from_vectors(Eigen::MatrixXf(m.cast<float>()));
  const auto pd = plane_from_vectors(m);
  CHECK((pf.plucker().cast<double>() - pd.plucker()).norm() < 1e-5);
}
