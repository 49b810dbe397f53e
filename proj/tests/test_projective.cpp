#include <set>

#include "doctest.h"
#include "polar/error.hpp"
#include "polar/projective.hpp"

using namespace polar;

TEST_CASE("point counts of PG(d-1,q)") {
  CHECK(projective_point_count(3, 5) == 121);
  CHECK(projective_point_count(5, 3) == 31);
  for (unsigned q : {3u, 5u, 9u})
    for (unsigned dim : {2u, 3u, 4u}) {
      const Field f = Field::of_order(q);
      std::uint64_t seen = 0;
      std::set<Vec> uniq;
      for_each_projective_point(f, dim, [&](std::span<const Elem> p) {
        ++seen;
        uniq.insert(Vec(p.begin(), p.end()));
      });
      CHECK(seen == projective_point_count(q, dim));
      CHECK(uniq.size() == seen);
    }
}

TEST_CASE("enumeration is lexicographic and canonical") {
  const Field f = Field::of_order(3);
  Vec prev;
  for_each_projective_point(f, 3, [&](std::span<const Elem> p) {
    Vec v(p.begin(), p.end());
    Vec c = v;
    CHECK(canonicalize(f, c));
    CHECK(c == v);
    if (!prev.empty()) CHECK(prev < v);
    prev = v;
  });
}

TEST_CASE("canonicalize scales the first nonzero entry to one") {
  const Field f = Field::of_order(5);
  Vec v{Elem{0}, Elem{3}, Elem{1}};
  CHECK(canonicalize(f, v));
  CHECK(v == Vec{Elem{0}, Elem{1}, Elem{2}});
  Vec z(3);
  CHECK_FALSE(canonicalize(f, z));
  CHECK_THROWS_AS(make_point(f, Vec(4)), Error);
  CHECK(make_point(f, Vec{Elem{2}, Elem{4}}).coords == Vec{Elem{1}, Elem{2}});
}

TEST_CASE("coordinate keys") {
  CHECK(coordinate_key(3, Vec{Elem{1}, Elem{0}, Elem{2}}) == 11);
  CHECK(ipow(3, 4) == 81);
}
