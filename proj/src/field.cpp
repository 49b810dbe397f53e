#include "polar/field.hpp"

#include <string>

#include "polar/error.hpp"

namespace polar {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::not_prime: return "NotPrime";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::inadmissible_params: return "InadmissibleParams";
    case Errc::radical_mismatch: return "RadicalMismatch";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::singular_point: return "SingularPoint";
    case Errc::not_on_quadric: return "NotOnQuadric";
    case Errc::type_not_in_table: return "TypeNotInTable";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::zero_message: return "ZeroMessage";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::counterexample_found: return "CounterexampleFound";
    case Errc::non_integer_result: return "NonIntegerResult";
    case Errc::case4_no_closed_form: return "Case4NoClosedForm";
    case Errc::table_mismatch: return "TableMismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<unsigned>;  // low degree first, coefficients mod p

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const unsigned lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i)
        a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

bool is_irreducible(const Poly& m, unsigned p) {
  const unsigned e = static_cast<unsigned>(m.size() - 1);
  // Trial division by every monic polynomial of degree 1..e/2.
  for (unsigned deg = 1; deg <= e / 2; ++deg) {
    unsigned count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
      Poly d(deg + 1, 0);
      unsigned c = code;
      for (unsigned i = 0; i < deg; ++i) {
        d[i] = c % p;
        c /= p;
      }
      d[deg] = 1;
      Poly r = poly_mod(m, d, p);
      bool zero = true;
      for (unsigned x : r) zero = zero && x == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

Field Field::make(unsigned p, unsigned e) {
  if (p == 2) throw Error(Errc::even_characteristic, "q must be odd");
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (e < 1 || e > 4)
    throw Error(Errc::inadmissible_params, "extension degree must be in 1..4, got " + std::to_string(e));
  unsigned q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order)
      throw Error(Errc::field_too_large, "field order exceeds " + std::to_string(max_order));
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = q;

  // Smallest monic irreducible: scan codes of (c_{e-1}..c_0) in ascending order.
  Poly modulus;
  for (unsigned code = 0; code < q; ++code) {
    Poly m(e + 1, 0);
    unsigned c = code;
    for (unsigned i = 0; i < e; ++i) {
      m[i] = c % p;
      c /= p;
    }
    m[e] = 1;
    if (e == 1 || is_irreducible(m, p)) {
      modulus = m;
      break;
    }
  }
  t->modulus = modulus;

  auto decode = [&](unsigned v) {
    Poly a(e, 0);
    for (unsigned i = 0; i < e; ++i) {
      a[i] = v % p;
      v /= p;
    }
    return a;
  };
  auto encode = [&](const Poly& a) {
    unsigned v = 0;
    for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
    return static_cast<std::uint8_t>(v);
  };

  t->add.resize(q * q);
  t->mul.resize(q * q);
  t->neg.resize(q);
  t->inv.resize(q);
  t->square.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    const Poly pa = decode(a);
    Poly na(e);
    for (unsigned i = 0; i < e; ++i) na[i] = (p - pa[i]) % p;
    t->neg[a] = Elem{encode(na)};
    for (unsigned b = 0; b < q; ++b) {
      const Poly pb = decode(b);
      Poly s(e);
      for (unsigned i = 0; i < e; ++i) s[i] = (pa[i] + pb[i]) % p;
      t->add[a * q + b] = Elem{encode(s)};
      Poly prod(2 * e - 1, 0);
      for (unsigned i = 0; i < e; ++i)
        for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
      prod = poly_mod(prod, modulus, p);
      prod.resize(e, 0);
      t->mul[a * q + b] = Elem{encode(prod)};
    }
  }
  for (unsigned a = 0; a < q; ++a) {
    const Elem sq = t->mul[a * q + a];
    t->square[sq.v] = 1;
    for (unsigned b = 1; b < q; ++b)
      if (t->mul[a * q + b].v == 1) t->inv[a] = Elem{static_cast<std::uint8_t>(b)};
  }
  for (unsigned a = 1; a < q; ++a) {
    if (!t->square[a]) {
      t->nonsquare = Elem{static_cast<std::uint8_t>(a)};
      break;
    }
  }
  return Field(std::move(t));
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw Error(Errc::not_prime, "field order must be at least 2");
  if (q % 2 == 0) throw Error(Errc::even_characteristic, "q must be odd");
  unsigned p = 3;
  while (q % p != 0) p += 2;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return make(p, e);
}

Elem Field::from_int(long long k) const {
  const long long p = t_->p;
  return Elem{static_cast<std::uint8_t>(((k % p) + p) % p)};
}

Elem Field::from_value(unsigned v) const {
  if (v >= t_->q)
    throw Error(Errc::parse_error, "value " + std::to_string(v) + " out of range for q=" + std::to_string(t_->q));
  return Elem{static_cast<std::uint8_t>(v)};
}

Elem Field::inv(Elem a) const {
  if (a.is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  return t_->inv[a.v];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  Elem r = one();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(t_->q);
  for (unsigned v = 0; v < t_->q; ++v) out[v] = Elem{static_cast<std::uint8_t>(v)};
  return out;
}

}  // namespace polar
