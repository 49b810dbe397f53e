#pragma once

// Points and totally singular lines of the parabolic quadric, residue classes of points with
// respect to an alternating form, and the line types they induce.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "polar/forms.hpp"
#include "polar/projective.hpp"

namespace polar {

// Number of coordinates of the Pluecker embedding of lines of V(dim, q).
inline std::size_t plucker_length(std::size_t dim) { return dim * (dim - 1) / 2; }

struct SingularLine {
  ProjPoint p1;
  ProjPoint p2;
  Vec plucker;
  std::size_t id = 0;
};

// Flat storage for all totally singular lines, sorted by Pluecker vector.
// Line l is spanned by points()[p1[l]] and points()[p2[l]], the reduced row echelon pair.
struct LineTable {
  std::size_t K = 0;
  std::vector<Elem> plucker;
  std::vector<std::uint32_t> p1;
  std::vector<std::uint32_t> p2;

  std::size_t size() const { return p1.size(); }
  std::span<const Elem> row(std::size_t l) const { return {plucker.data() + l * K, K}; }
};

class PolarSpace {
 public:
  explicit PolarSpace(QuadraticSpace qs, unsigned workers = 1);

  const QuadraticSpace& space() const { return qs_; }
  const Field& field() const { return qs_.field; }
  std::size_t dim() const { return qs_.dim(); }

  std::size_t point_count() const { return points_.size() / dim(); }
  std::span<const Elem> point(std::size_t i) const { return {points_.data() + i * dim(), dim()}; }
  // Index of the canonical representative of v (any nonzero multiple is fine), or -1.
  std::int64_t index_of(std::span<const Elem> v) const;

  const LineTable& lines() const { return lines_; }
  SingularLine line(std::size_t l) const;
  // The q+1 point indices of line l: p2 first, then p1 + t p2 in field order.
  std::vector<std::uint32_t> line_points(std::size_t l) const;

  // Line ids through point i, ascending. Built on first use.
  std::span<const std::uint32_t> lines_through(std::size_t i) const;

 private:
  void build_incidence() const;

  QuadraticSpace qs_;
  std::vector<Elem> points_;
  std::vector<std::int32_t> dense_index_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_index_;
  LineTable lines_;

  mutable std::once_flag incidence_once_;
  mutable std::vector<std::uint32_t> inc_offsets_;
  mutable std::vector<std::uint32_t> inc_lines_;
};

std::vector<ProjPoint> enumerate_quadric_points(const QuadraticSpace& qs);
std::vector<SingularLine> enumerate_singular_lines(const QuadraticSpace& qs);
// Lines through p, which must lie on the quadric. Throws NotOnQuadric.
std::vector<SingularLine> lines_through(const PolarSpace& ps, std::span<const Elem> p);

// Line list text export: "id : plucker coordinates".
void write_lines(std::ostream& out, const PolarSpace& ps);

enum class ResidueClass { p_a, p_b, plus, zero, minus };
const char* residue_class_name(ResidueClass c);

// Caches M^-1 S and W = S M^-1 S for one (eta, phi) pair.
class ResidueClassifier {
 public:
  ResidueClassifier(const QuadraticSpace& qs, const AlternatingForm& af);

  // Throws NotOnQuadric.
  ResidueClass classify(std::span<const Elem> p) const;
  // p^T W p == 0, i.e. p lies on the quadric induced by W.
  bool on_w(std::span<const Elem> p) const;

  const Matrix& MinvS() const { return minv_s_; }
  const Matrix& W() const { return w_; }

 private:
  const QuadraticSpace* qs_;
  const AlternatingForm* af_;
  Matrix minv_s_;
  Matrix w_;
};

ResidueClass residue_class(const QuadraticSpace& qs, const AlternatingForm& af, std::span<const Elem> p);

// Number of totally singular lines through point i of ps inside its phi-perp.
std::uint64_t tau(const PolarSpace& ps, const AlternatingForm& af, std::size_t i);
std::uint64_t tau(const PolarSpace& ps, const AlternatingForm& af, std::span<const Elem> p);

enum class LineTag { t0, tplus, talpha, tbeta, tminus };
const char* line_tag_name(LineTag t);

struct LineType {
  LineTag tag = LineTag::t0;
  unsigned n_plus = 0;
  unsigned n_w = 0;
  unsigned n_minus = 0;
};

// Matches a (n_plus, n_w, n_minus) triple against the table of line types. Throws TypeNotInTable.
LineType match_line_type(unsigned q, unsigned n_plus, unsigned n_w, unsigned n_minus);
LineType line_type(const PolarSpace& ps, const AlternatingForm& af, std::size_t l);

// Per-form scan: class of every point and type of every line.
struct FormScan {
  std::vector<ResidueClass> point_class;
  std::vector<std::uint64_t> point_tau;
  std::vector<LineTag> line_tag;
  // Lines that are totally isotropic for phi.
  std::uint64_t isotropic_lines = 0;
};

// With with_lines = false the line tags are skipped.
FormScan scan_form(const PolarSpace& ps, const AlternatingForm& af, bool with_lines = true);

}  // namespace polar
