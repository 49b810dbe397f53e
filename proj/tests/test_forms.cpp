#include "doctest.h"
#include "helpers.hpp"
#include "polar/error.hpp"
#include "polar/forms.hpp"

using namespace polar;

TEST_CASE("standard quadric") {
  const Field f = Field::of_order(3);
  const QuadraticSpace qs = standard_space(f, 2);
  CHECK(qs.dim() == 5);
  CHECK(qs.M == Matrix::from_values(f, {{0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}));
  CHECK(qs.M * qs.M_inv == Matrix::identity(f, 5));
  CHECK(witt_index(qs.M) == 2);
}

TEST_CASE("quadratic space validation") {
  const Field f = Field::of_order(3);
  CHECK_THROWS_AS(make_quadratic_space(Matrix::from_values(f, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})), Error);
  CHECK_THROWS_AS(make_quadratic_space(Matrix::from_values(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}})), Error);
  CHECK_THROWS_AS(make_quadratic_space(Matrix::identity(f, 4)), Error);
}

TEST_CASE("alternating form validation") {
  const Field f = Field::of_order(5);
  CHECK_THROWS_AS(make_alternating_form(Matrix::identity(f, 5)), Error);
  CHECK_THROWS_AS(make_alternating_form(Matrix(f, 5, 5)), Error);
  CHECK_THROWS_AS(make_alternating_form(Matrix(f, 4, 4)), Error);
  Matrix s(f, 5, 5);
  s(0, 1) = f.one();
  s(1, 0) = f.neg(f.one());
  const AlternatingForm af = make_alternating_form(s);
  CHECK(af.r == 3);
  CHECK(af.radical.dim() == 3);
}

TEST_CASE("realizable parameter domain") {
  CHECK(realizable(1, 3, 5, 1));
  CHECK_FALSE(realizable(1, 3, 5, 3));
  CHECK(realizable(1, 3, 3, 3));
  CHECK_FALSE(realizable(2, 3, 3, 3));
  CHECK(realizable(2, 3, 3, 1));
  CHECK(realizable(3, 3, 5, 0));
  CHECK(realizable(3, 3, 1, 0));
  CHECK(realizable(3, 3, 5, 2));
  CHECK_FALSE(realizable(3, 3, 5, 4));
  CHECK(realizable(4, 3, 5, 0));
  CHECK_FALSE(realizable(4, 3, 3, 4));
  CHECK_FALSE(realizable(1, 3, 4, 1));
}

TEST_CASE("canonical pairs have the requested radical and d") {
  for (unsigned q : {3u, 5u, 9u})
    for (int n : {2, 3}) {
      const Field f = Field::of_order(q);
      for (int c = 1; c <= 4; ++c)
        for (const CanonicalDescriptor& d : canonical_descriptors(f, n, c)) {
          CAPTURE(q);
          CAPTURE(n);
          CAPTURE(c);
          CAPTURE(d.r);
          CAPTURE(d.d);
          const FormPair fp = build_canonical(d);
          CHECK(fp.qs.M.is_symmetric());
          CHECK(fp.af.r == d.r);
          const RadicalDecomposition rd = radical_decomposition(fp.qs, fp.af);
          CHECK(rd.d == d.d);
          CHECK(static_cast<int>(rd.R.dim()) == d.r);
          CHECK(rd.D.dim() + rd.D0.dim() == rd.R.dim());
        }
    }
}

TEST_CASE("build_M and build_S reject parameters outside the domain") {
  const Field f = Field::of_order(3);
  CHECK_THROWS_AS(build_M(f, 3, 5, 3, 1), Error);
  CHECK_THROWS_AS(build_S(f, 3, 4, 1, 1), Error);
  CHECK_THROWS_AS(build_S(f, 3, 3, 0, 4, SOptions{std::nullopt, std::nullopt, true}), Error);
  CHECK_NOTHROW(build_S(f, 3, 3, 2, 4, SOptions{std::nullopt, Elem{0}, true}));
}

TEST_CASE("internal and external points agree with the section-count oracle") {
  for (int p : {3, 5}) {
    const Field f = Field::of_order(static_cast<unsigned>(p));
    const int n = 2;
    const QuadraticSpace qs = standard_space(f, n);
    const auto Q = oracle::quadric_points(p, n);
    const std::uint64_t ell = (oracle::pw(p, n) + 1) * (oracle::pw(p, n - 1) - 1) / (p - 1);
    for (const oracle::IVec& x : oracle::projective_points(p, 2 * n + 1)) {
      const Vec v = th::to_vec(x);
      if (oracle::eta(x, n, p) == 0) {
        CHECK(point_square_class(qs, v) == SquareClass::singular);
        continue;
      }
      std::uint64_t s = 0;
      for (const oracle::IVec& y : Q)
        if (oracle::polar(x, y, n, p) == 0) ++s;
      CHECK((classify_internal_external(qs, v) == PointPosition::internal) == (s == ell));
      // External points carry a fixed square class.
      const bool square = point_square_class(qs, v) == SquareClass::square;
      CHECK((classify_internal_external(qs, v) == PointPosition::external) == (square == qs.external_square));
    }
  }
}

TEST_CASE("orbit counts match the oracle on standard and canonical quadrics") {
  for (int p : {3, 5}) {
    const Field f = Field::of_order(static_cast<unsigned>(p));
    const oracle::Orbits o = oracle::orbits(p, 2);
    CHECK(o.other == 0);
    const OrbitCounts got = orbit_counts(standard_space(f, 2));
    CHECK(got.on_quadric == o.on);
    CHECK(got.internal == o.internal);
    CHECK(got.external == o.external);
    for (int c = 1; c <= 4; ++c)
      for (const CanonicalDescriptor& d : canonical_descriptors(f, 2, c)) {
        const OrbitCounts oc = orbit_counts(build_canonical(d).qs);
        CHECK(oc.on_quadric == o.on);
        CHECK(oc.internal == o.internal);
        CHECK(oc.external == o.external);
      }
  }
}

TEST_CASE("hyperbolic discriminant test") {
  const Field f = Field::of_order(3);
  CHECK(is_hyperbolic(Matrix::from_values(f, {{0, 1}, {1, 0}})));
  // x^2 + y^2 over F_3 is anisotropic.
  CHECK_FALSE(is_hyperbolic(Matrix::from_values(f, {{1, 0}, {0, 1}})));
  CHECK(witt_index(Matrix::from_values(f, {{1, 0}, {0, 1}})) == 0);
  CHECK(witt_index(Matrix::from_values(f, {{1, 0}, {0, 2}})) == 1);
}

TEST_CASE("standard frames carry M to a multiple of the standard Gram") {
  for (unsigned q : {3u, 5u, 9u}) {
    const Field f = Field::of_order(q);
    const QuadraticSpace st = standard_space(f, 3);
    for (int c = 1; c <= 4; ++c)
      for (const CanonicalDescriptor& d : canonical_descriptors(f, 3, c)) {
        const QuadraticSpace qs = build_canonical(d).qs;
        const StandardFrame fr = standard_frame(qs);
        CHECK(fr.T.transpose() * qs.M * fr.T == st.M.scaled(fr.lambda));
        CHECK_FALSE(determinant(fr.T).is_zero());
      }
  }
}

TEST_CASE("transport preserves the radical") {
  const Field f = Field::of_order(5);
  const FormPair fp = build_canonical(CanonicalDescriptor{5, 5, 1, 3, 3, 1, 2});
  const AlternatingForm moved = transport_form(fp.af, fp.qs, standard_space(f, 3));
  CHECK(moved.r == 3);
}

TEST_CASE("two-generator pairs have two eigenspaces of dimension m") {
  const Field f = Field::of_order(3);
  const FormPair fp = two_generator_pair(f, 3, 2, 1);
  const auto ev = nonzero_eigenvalues(fp.qs.M_inv * fp.af.S);
  REQUIRE(ev.size() == 2);
  for (const auto& [l, s] : ev) CHECK(s.dim() == 2);
  CHECK(fp.af.r == 1);
  CHECK_THROWS_AS(two_generator_pair(f, 3, 2, 2), Error);
}

TEST_CASE("descriptor JSON round trip") {
  CanonicalDescriptor d{9, 3, 2, 3, 3, 2, 4, 0, true, std::nullopt};
  const CanonicalDescriptor back = descriptor_from_json(descriptor_to_json(d));
  CHECK(descriptor_to_json(back) == descriptor_to_json(d));
  const Field f = Field::of_order(5);
  d = CanonicalDescriptor{5, 5, 1, 3, 3, 3, 1, 1, false, Matrix::from_values(f, {{0, 1, 0}, {4, 0, 0}, {0, 0, 0}})};
  CHECK(descriptor_to_json(descriptor_from_json(descriptor_to_json(d))) == descriptor_to_json(d));
  // This block leaves the H part degenerate, so the radical comes out too big.
  CHECK_THROWS_AS(build_canonical(d), Error);
}
