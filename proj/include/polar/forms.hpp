#pragma once

// Quadratic and alternating forms on V(2n+1, q).
//
// Conventions: eta(v) = v^T M v with M symmetric; the polarity of eta is read off M directly
// (q is odd, so the factor 2 of the polarization never matters). phi(u, v) = u^T S v with S
// alternating. The canonical pairs (M, S) follow the ordered basis H, H0, D0, D, with
// dim H = dim D = d, dim H0 = 2n+1-r-d and dim D0 = r-d.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polar/field.hpp"
#include "polar/matrix.hpp"
#include "polar/projective.hpp"
#include "json.hpp"

namespace polar {

struct QuadraticSpace {
  Field field;
  int n = 0;
  Matrix M;
  Matrix M_inv;
  std::optional<int> case_tag;
  // Whether points external to the parabolic quadric have square eta.
  bool external_square = true;

  std::size_t dim() const { return static_cast<std::size_t>(2 * n + 1); }
};

// Validates M (symmetric, invertible, odd size 2n+1) and caches M^-1.
QuadraticSpace make_quadratic_space(Matrix M, std::optional<int> case_tag = std::nullopt);
// x_0 x_n + ... + x_{n-1} x_{2n-1} + x_{2n}^2 in Gram form.
QuadraticSpace standard_space(const Field& f, int n);

struct AlternatingForm {
  Matrix S;
  Subspace radical;
  int r = 0;
};

// Validates S (alternating, odd size, not zero) and caches its radical.
AlternatingForm make_alternating_form(Matrix S);

// Structural constraints on (case, r, d) for which canonical blocks exist:
//   case 1: d odd, 1 <= d <= min(r, 2n-r)           (R0 hyperbolic, Q0 parabolic)
//   case 2: case 1 constraints and r-d >= 2          (R0 elliptic)
//   case 3: d even, 0 <= d <= r-1, r+d <= 2n+1       (Q0 hyperbolic, possibly empty)
//   case 4: d even, 0 <= d <= r-1, r+d <= 2n-1       (Q0 elliptic)
// always with r odd and 1 <= r <= 2n-1.
bool realizable(int case_tag, int n, int r, int d);

// Gram matrix of eta in the basis H, H0, D0, D. Throws InadmissibleParams.
QuadraticSpace build_M(const Field& f, int n, int r, int d, int case_tag);

struct SOptions {
  // d x d alternating block on H. When absent, the H vectors not already paired through U are
  // paired symplectically (b_i, b_{i+1}); for d = 1 in cases 1-2 this is the zero block.
  std::optional<Matrix> s11;
  // Case 4 only: the entry of the trailing 2x2 block of S22.
  std::optional<Elem> alpha;
  // Case 4 only: place the 2x2 identity minor U_I in the last two columns of U.
  bool u_minor = false;
};

// Alternating form with radical D0 + D. Throws InadmissibleParams or RadicalMismatch.
AlternatingForm build_S(const Field& f, int n, int r, int d, int case_tag, const SOptions& opts = {});

Elem eval_quadratic(const QuadraticSpace& qs, std::span<const Elem> v);

enum class SquareClass { square, nonsquare, singular };
enum class PointPosition { internal, external };

SquareClass point_square_class(const QuadraticSpace& qs, std::span<const Elem> p);
// Decides the type of the section p^perp cut on the quadric from its discriminant.
PointPosition classify_internal_external(const QuadraticSpace& qs, std::span<const Elem> p);

// Discriminant test for a non-degenerate form of even dimension 2t: hyperbolic iff
// (-1)^t det(gram) is a square.
bool is_hyperbolic(const Matrix& gram);
// Witt index of a non-degenerate symmetric Gram matrix. Throws SingularMatrix when degenerate.
int witt_index(const Matrix& gram);

struct OrbitCounts {
  std::uint64_t on_quadric = 0;
  std::uint64_t internal = 0;
  std::uint64_t external = 0;
};

OrbitCounts orbit_counts(const QuadraticSpace& qs);

struct RadicalDecomposition {
  Subspace R;
  Subspace D;
  Subspace D0;
  Subspace H;
  Subspace H0;
  int d = 0;
  // Witt index of eta on H0, a complement of D in R^perp.
  int m = 0;
};

RadicalDecomposition radical_decomposition(const QuadraticSpace& qs, const AlternatingForm& af);

// Columns of T are a basis e_1..e_n, f_1..f_n, z with T^T M T = lambda * (Gram of standard_space).
// Any two parabolic quadrics of the same dimension are related through their frames.
struct StandardFrame {
  Matrix T;
  Elem lambda;
};
StandardFrame standard_frame(const QuadraticSpace& qs);

// Carries phi along the isometry from's quadric -> to's quadric given by the two frames, so
// the codeword of the result on `to` is the codeword of af on `from` (up to line order).
AlternatingForm transport_form(const AlternatingForm& af, const QuadraticSpace& from, const QuadraticSpace& to);

// The "two generator" configuration: V = G+ + G- + V0 + R with eta hyperbolic on
// G+ + G-, elliptic on V0 (dim 0 or 2) and nonzero on R; phi pairs G+ with G- as [[0,-I],[I,0]]
// and V0 with itself. G+ and G- are then eigenspaces of M^-1 S of dimension m.
struct FormPair {
  QuadraticSpace qs;
  AlternatingForm af;
};
FormPair two_generator_pair(const Field& f, int n, int m, int r);

// Parameters of a canonical (M, S) pair, serialized as JSON.
struct CanonicalDescriptor {
  unsigned q = 0;
  unsigned p = 0;
  unsigned e = 0;
  int n = 0;
  int r = 0;
  int d = 0;
  int case_tag = 1;
  unsigned alpha = 1;
  bool u_minor = false;
  std::optional<Matrix> s11;
};

// Every realizable (r, d) for the case, r then d ascending. Case 4 also lists the U_I variants
// (alpha = 1 and alpha = 0) when d >= 2.
std::vector<CanonicalDescriptor> canonical_descriptors(const Field& f, int n, int case_tag);

nlohmann::ordered_json descriptor_to_json(const CanonicalDescriptor& desc);
CanonicalDescriptor descriptor_from_json(const nlohmann::ordered_json& j);
FormPair build_canonical(const CanonicalDescriptor& desc);

}  // namespace polar
