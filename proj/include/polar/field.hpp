#pragma once

// Arithmetic in F_q for odd prime powers q = p^e.
//
// Elements are stored as their base-p integer encoding v = c_0 + c_1 p + ... + c_{e-1} p^{e-1},
// where c_i are the coefficients in the polynomial basis 1, x, ..., x^{e-1}. The same integer
// is used in every file format, and integer order is the enumeration order of the field.
// All arithmetic goes through q x q lookup tables, so q is capped at 255.

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace polar {

struct Elem {
  std::uint8_t v = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint8_t value) : v(value) {}

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

using Vec = std::vector<Elem>;

class Field {
 public:
  static constexpr unsigned max_order = 255;

  // Picks the smallest monic irreducible modulus (coefficients c_{e-1}..c_0 read as a
  // base-p integer) and the first non-square in enumeration order.
  static Field make(unsigned p, unsigned e = 1);

  // Factors q as p^e and forwards to make(p, e).
  static Field of_order(unsigned q);

  unsigned p() const { return t_->p; }
  unsigned e() const { return t_->e; }
  unsigned q() const { return t_->q; }

  // Monic modulus, low degree first: modulus()[i] is the coefficient of x^i; length e+1.
  std::span<const unsigned> modulus() const { return t_->modulus; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem nonsquare() const { return t_->nonsquare; }

  // Image of an integer in the prime subfield.
  Elem from_int(long long k) const;
  Elem from_value(unsigned v) const;

  Elem add(Elem a, Elem b) const { return t_->add[a.v * t_->q + b.v]; }
  Elem sub(Elem a, Elem b) const { return t_->add[a.v * t_->q + t_->neg[b.v].v]; }
  Elem mul(Elem a, Elem b) const { return t_->mul[a.v * t_->q + b.v]; }
  Elem neg(Elem a) const { return t_->neg[a.v]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  // True for 0 as well; callers test zero first when they need the strict square set.
  bool is_square(Elem a) const { return t_->square[a.v] != 0; }

  std::vector<Elem> elements() const;

  // Raw tables for inner loops: add_table()[a*q+b] = a+b, and so on.
  std::span<const Elem> add_table() const { return t_->add; }
  std::span<const Elem> mul_table() const { return t_->mul; }
  std::span<const Elem> neg_table() const { return t_->neg; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    unsigned p = 0;
    unsigned e = 0;
    unsigned q = 0;
    std::vector<unsigned> modulus;
    Elem nonsquare;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> neg;
    std::vector<Elem> inv;
    std::vector<std::uint8_t> square;
  };

  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

// Free-function spelling of the field constructor.
inline Field make_field(unsigned p, unsigned e = 1) { return Field::make(p, e); }

bool is_prime(unsigned n);

}  // namespace polar
