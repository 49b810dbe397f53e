#include "polar/projective.hpp"

#include "polar/error.hpp"

namespace polar {

bool canonicalize(const Field& f, std::span<Elem> v) {
  std::size_t i = 0;
  while (i < v.size() && v[i].is_zero()) ++i;
  if (i == v.size()) return false;
  if (v[i] != f.one()) {
    const Elem s = f.inv(v[i]);
    for (std::size_t j = i; j < v.size(); ++j) v[j] = f.mul(s, v[j]);
  }
  return true;
}

ProjPoint make_point(const Field& f, Vec v) {
  if (!canonicalize(f, v)) throw Error(Errc::zero_vector, "the zero vector is not a projective point");
  return ProjPoint{std::move(v)};
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t projective_point_count(unsigned q, unsigned dim) { return (ipow(q, dim) - 1) / (q - 1); }

void for_each_projective_point(const Field& f, unsigned dim, const std::function<void(std::span<const Elem>)>& visit) {
  const unsigned q = f.q();
  Vec v(dim);
  // Lexicographic order puts later pivots first: (0,..,0,1) < ... < (1,..).
  for (unsigned pivot = dim; pivot-- > 0;) {
    std::fill(v.begin(), v.end(), Elem{});
    v[pivot] = f.one();
    const unsigned tail = dim - pivot - 1;
    const std::uint64_t count = ipow(q, tail);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (unsigned j = dim; j-- > pivot + 1;) {
        v[j] = Elem{static_cast<std::uint8_t>(c % q)};
        c /= q;
      }
      visit(v);
    }
  }
}

std::uint64_t coordinate_key(unsigned q, std::span<const Elem> v) {
  std::uint64_t k = 0;
  for (Elem x : v) k = k * q + x.v;
  return k;
}

}  // namespace polar
