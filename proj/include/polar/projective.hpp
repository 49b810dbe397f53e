#pragma once

// Points of PG(dim-1, q) as canonically scaled coordinate vectors.

#include <cstdint>
#include <functional>
#include <span>

#include "polar/field.hpp"

namespace polar {

// Representative with first nonzero coordinate equal to 1.
struct ProjPoint {
  Vec coords;

  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

// Scales v in place so its first nonzero entry is 1. Returns false for the zero vector.
bool canonicalize(const Field& f, std::span<Elem> v);
ProjPoint make_point(const Field& f, Vec v);  // throws ZeroVector

std::uint64_t ipow(std::uint64_t base, unsigned exp);
// Number of points of PG(dim-1, q).
std::uint64_t projective_point_count(unsigned q, unsigned dim);

// Visits every canonical vector of F_q^dim in lexicographic order of coordinates.
void for_each_projective_point(const Field& f, unsigned dim, const std::function<void(std::span<const Elem>)>& visit);

// Base-q integer of a coordinate vector, first coordinate most significant.
std::uint64_t coordinate_key(unsigned q, std::span<const Elem> v);

}  // namespace polar
