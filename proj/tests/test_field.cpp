#include "doctest.h"
#include "polar/error.hpp"
#include "polar/field.hpp"

using namespace polar;

namespace {

void check_axioms(const Field& f) {
  const auto els = f.elements();
  REQUIRE(els.size() == f.q());
  unsigned squares = 0;
  for (Elem a : els) {
    CHECK(f.add(a, f.neg(a)) == f.zero());
    CHECK(f.mul(a, f.one()) == a);
    if (!a.is_zero()) {
      CHECK(f.mul(a, f.inv(a)) == f.one());
      if (f.is_square(a)) ++squares;
    }
    for (Elem b : els) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.sub(f.add(a, b), b) == a);
    }
  }
  // Half the units are squares and the reported non-square is not one.
  CHECK(squares == (f.q() - 1) / 2);
  CHECK_FALSE(f.is_square(f.nonsquare()));
  CHECK_FALSE(f.nonsquare().is_zero());
}

}  // namespace

TEST_CASE("prime and extension fields satisfy the field axioms") {
  for (unsigned q : {3u, 5u, 7u, 9u, 25u, 27u}) {
    CAPTURE(q);
    check_axioms(Field::of_order(q));
  }
}

TEST_CASE("multiplication is associative and distributes in F_9") {
  const Field f = Field::of_order(9);
  for (Elem a : f.elements())
    for (Elem b : f.elements())
      for (Elem c : f.elements()) {
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
}

TEST_CASE("the unit group of F_q is cyclic of order q-1") {
  for (unsigned q : {5u, 9u, 27u}) {
    const Field f = Field::of_order(q);
    bool has_generator = false;
    for (Elem a : f.elements()) {
      if (a.is_zero()) continue;
      CHECK(f.pow(a, q - 1) == f.one());
      unsigned order = 1;
      for (Elem x = a; x != f.one(); x = f.mul(x, a)) ++order;
      has_generator = has_generator || order == q - 1;
    }
    CHECK(has_generator);
  }
}

TEST_CASE("make and of_order agree") {
  CHECK(Field::make(3, 2) == Field::of_order(9));
  CHECK(Field::of_order(5).p() == 5);
  CHECK(Field::of_order(125).e() == 3);
}

TEST_CASE("from_int reduces mod p") {
  const Field f = Field::of_order(5);
  CHECK(f.from_int(7) == Elem{2});
  CHECK(f.from_int(-1) == Elem{4});
  CHECK_THROWS_AS(f.from_value(5), Error);
}

TEST_CASE("invalid orders are rejected") {
  auto code_of = [](unsigned q) {
    try {
      (void)Field::of_order(q);
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no throw");
    return Errc::io_error;
  };
  CHECK(code_of(4) == Errc::even_characteristic);
  CHECK(code_of(2) == Errc::even_characteristic);
  CHECK(code_of(15) == Errc::not_prime);
  CHECK(code_of(1) == Errc::not_prime);
  CHECK_THROWS_AS(Field::of_order(3 * 3 * 3 * 3 * 3 * 3), Error);
  CHECK_THROWS_AS(Field::make(3, 0), Error);
  CHECK_THROWS_AS(Field::of_order(5).inv(Elem{0}), Error);
}
