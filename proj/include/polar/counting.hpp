#pragma once

// Closed-form point censuses, the counting identity for f, and their brute-force counterparts.
//
// f = number of totally singular lines that are totally isotropic for phi; the minimum distance
// is N - max f. Points of the quadric split into the classes of ResidueClass, and
//   (q+1) f = A A0 + N0 B0 + N+ B+ + N- B-
// with the residue constants below.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polar/forms.hpp"
#include "polar/geometry.hpp"

namespace polar {

// Exact rational with 64-bit parts; products go through 128 bits and overflow throws.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  // Throws NonIntegerResult.
  std::int64_t to_int() const;
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// q^e for any integer e.
Rational qpow(unsigned q, int e);

struct ResidueConstants {
  std::uint64_t A0 = 0;
  std::uint64_t Bplus = 0;
  std::uint64_t B0 = 0;
  std::uint64_t Bminus = 0;
};
ResidueConstants residue_constants(int n, unsigned q);

struct ClassCensus {
  std::uint64_t A_R = 0;
  std::uint64_t A_V = 0;
  std::uint64_t A = 0;
  std::uint64_t N0 = 0;
  std::uint64_t Nplus = 0;
  std::uint64_t Nminus = 0;
  std::uint64_t f = 0;

  friend bool operator==(const ClassCensus&, const ClassCensus&) = default;
};

struct RationalCensus {
  Rational A_R, A_V, A, N0, Nplus, Nminus, f;
};

// (A A0 + N0 B0 + N+ B+ + N- B-) / (q+1).
Rational key_f(int n, unsigned q, const Rational& A, const Rational& N0, const Rational& Np, const Rational& Nm);

// Where the closed forms are evaluated. `formula` is the parity/range domain of the displayed
// formulas (cases 1-3); `realizable` additionally requires the canonical blocks to exist.
enum class Domain { formula, realizable };
bool in_domain(Domain dom, int case_tag, int n, int r, int d);

// Cases 1-3. Throws InadmissibleParams outside the domain and Case4NoClosedForm for case 4.
RationalCensus closed_form_rational(int case_tag, int n, unsigned q, int r, int d, Domain dom = Domain::realizable);
// Integer census on the realizable domain. Throws NonIntegerResult if a value is fractional.
ClassCensus closed_form_census(int case_tag, int n, unsigned q, int r, int d);

// The case-3 N+/N- exactly as printed (denominator 2(q-1)); kept to document that it breaks
// the partition of the quadric. Returns {N+, N-}.
std::array<Rational, 2> case3_printed_nplus_nminus(int n, unsigned q, int r, int d);
// Case 4 only has A in closed form.
Rational case4_A(int n, unsigned q, int r, int d);

// Census of the quadric points for (eta, phi) by exhaustive classification; f from the identity.
ClassCensus point_census(const QuadraticSpace& qs, const AlternatingForm& af);

struct EmpiricalCensus {
  ClassCensus census;            // f from the counting identity
  std::uint64_t f_direct = 0;    // totally singular, totally isotropic lines
  std::uint64_t tau_sum = 0;     // sum of tau(p) over the quadric
  std::uint64_t on_w = 0;        // #(Q cap W)
  std::array<std::uint64_t, 5> line_types{};  // indexed by LineTag
};
EmpiricalCensus empirical_census(const PolarSpace& ps, const AlternatingForm& af);
// Reuses a scan_form result taken with lines.
EmpiricalCensus empirical_census(const PolarSpace& ps, const AlternatingForm& af, const FormScan& scan);

struct L11Counts {
  std::uint64_t claim1_formula = 0;
  std::uint64_t claim1_brute = 0;
  std::uint64_t claim2_brute = 0;
  int block = 0;  // size of z1 and z2, n - (r+d)/2
};
// Case 1 setting: r - d even, d odd. beta must be nonzero.
L11Counts lemma_l11_counts(const Field& f, int n, int r, int d, Elem beta);

// (q^{n-1}-1)(q^{3n-2}+q^{3n-3}-q^{3n-4}+q^{2n}-q^{n-1}-1) / ((q-1)^2 (q+1)).
std::uint64_t f1_max(int n, unsigned q);

struct GridArgmax {
  int r = 0;
  int x = 0;  // d or s, depending on the grid
  Rational value;
  int ties = 0;  // other grid points attaining the same value
};

// g(r,s) = q^{n-s/2+1} + q^{n-s/2} + q^{s/2+1} - q^{s/2-1} + q^{r-1} on r odd, s even,
// r+1 <= s <= min(2r, 2n). Throws InadmissibleParams off that grid.
Rational g_value(int n, unsigned q, int r, int s);
GridArgmax g_argmax(int n, unsigned q);
// q^{2n-2} + q^{n+1} - q^{n-1} + q + 1.
std::uint64_t g_proper_bound(int n, unsigned q);

// Upper bound for (q-1)^2 (q+1) f^4 at s = r + d.
Rational case4_bound(int n, unsigned q, int r, int s);
Rational case4_h1(int n, unsigned q);
Rational case4_h2n1(int n, unsigned q);

// Argmax of f^i(r, d) from the closed forms over the given domain, first hit in (r, d) order.
GridArgmax f_argmax(int case_tag, int n, unsigned q, Domain dom);

struct TableMaximaRow {
  int case_tag = 0;
  int expected_r = 0;
  int expected_d = 0;
  GridArgmax formula;                    // over the formula domain
  std::optional<GridArgmax> realizable;  // over realizable (r, d), if any
  bool ok = false;
};
// Rows for cases 1-3 at n >= 3. The table is matched on the formula domain.
std::vector<TableMaximaRow> table_maxima_report(int n, unsigned q);
// Throws TableMismatch naming the offending case and (r, d).
void verify_table_maxima(int n, unsigned q);

struct MaxEigReport {
  std::uint64_t eigenvectors = 0;  // nonzero vectors in eigenspaces of nonzero eigenvalues
  int m = 0;
  std::uint64_t bound = 0;         // 2 (q^m - 1)
  bool ok = false;
};
MaxEigReport maxeig_bound_check(const QuadraticSpace& qs, const AlternatingForm& af);

// Sizes of the parabolic orbits: {on quadric, internal, external}.
OrbitCounts orbit_formulas(int n, unsigned q);
// Size of each square class of non-singular points in a hyperbolic (or elliptic) space of
// dimension 2t.
std::uint64_t section_class_size(int t, unsigned q, bool hyperbolic);

}  // namespace polar
