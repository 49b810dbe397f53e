#include "polar/geometry.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <ostream>

#include "polar/error.hpp"
#include "polar/parallel.hpp"

namespace polar {

namespace {

constexpr std::uint64_t dense_limit = std::uint64_t{1} << 26;

std::size_t pivot_of(std::span<const Elem> v) {
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  return k;
}

}  // namespace

PolarSpace::PolarSpace(QuadraticSpace qs, unsigned workers) : qs_(std::move(qs)) {
  const Field& f = qs_.field;
  const std::size_t N = dim();
  const unsigned q = f.q();

  for_each_projective_point(f, static_cast<unsigned>(N), [&](std::span<const Elem> p) {
    if (bilinear(qs_.M, p, p).is_zero()) points_.insert(points_.end(), p.begin(), p.end());
  });
  const std::size_t np = point_count();

  const std::uint64_t space = ipow(q, static_cast<unsigned>(N));
  if (space <= dense_limit) {
    dense_index_.assign(space, -1);
    for (std::size_t i = 0; i < np; ++i) dense_index_[coordinate_key(q, point(i))] = static_cast<std::int32_t>(i);
  } else {
    for (std::size_t i = 0; i < np; ++i) sparse_index_.emplace(coordinate_key(q, point(i)), static_cast<std::uint32_t>(i));
  }

  // Each line has exactly one reduced echelon pair (a, b): pivot(a) < pivot(b), a[pivot(b)] = 0.
  std::vector<std::size_t> piv(np);
  std::vector<Elem> mp(np * N);
  for (std::size_t i = 0; i < np; ++i) {
    piv[i] = pivot_of(point(i));
    const Vec row = qs_.M.apply(point(i));
    std::copy(row.begin(), row.end(), mp.begin() + static_cast<std::ptrdiff_t>(i * N));
  }
  const std::size_t blocks = std::min<std::size_t>(np, 64);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> found(blocks);
  parallel_blocks(np, blocks, workers, [&](std::size_t b, std::size_t begin, std::size_t end) {
    auto& out = found[b];
    for (std::size_t i = begin; i < end; ++i) {
      const auto a = point(i);
      const std::span<const Elem> ma(mp.data() + i * N, N);
      for (std::size_t j = 0; j < np; ++j) {
        if (piv[j] <= piv[i] || !a[piv[j]].is_zero()) continue;
        if (dot(f, ma, point(j)).is_zero())
          out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  });

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (auto& v : found) pairs.insert(pairs.end(), v.begin(), v.end());
  const std::size_t K = plucker_length(N);
  std::vector<Elem> pl(pairs.size() * K);
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    const auto a = point(pairs[l].first);
    const auto b = point(pairs[l].second);
    Elem* out = pl.data() + l * K;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i + 1; j < N; ++j) *out++ = f.sub(f.mul(a[i], b[j]), f.mul(a[j], b[i]));
  }
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Elem is a single byte holding the enumeration value, so memcmp is lexicographic order.
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::memcmp(pl.data() + x * K, pl.data() + y * K, K) < 0;
  });

  lines_.K = K;
  lines_.plucker.resize(pl.size());
  lines_.p1.resize(pairs.size());
  lines_.p2.resize(pairs.size());
  for (std::size_t l = 0; l < order.size(); ++l) {
    const std::size_t src = order[l];
    std::copy_n(pl.data() + src * K, K, lines_.plucker.data() + l * K);
    lines_.p1[l] = pairs[src].first;
    lines_.p2[l] = pairs[src].second;
  }
}

std::int64_t PolarSpace::index_of(std::span<const Elem> v) const {
  if (v.size() != dim()) throw Error(Errc::dimension_mismatch, "point has wrong length");
  Vec c(v.begin(), v.end());
  if (!canonicalize(field(), c)) return -1;
  const std::uint64_t key = coordinate_key(field().q(), c);
  if (!dense_index_.empty()) return dense_index_[key];
  auto it = sparse_index_.find(key);
  return it == sparse_index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

SingularLine PolarSpace::line(std::size_t l) const {
  const auto a = point(lines_.p1[l]);
  const auto b = point(lines_.p2[l]);
  const auto pl = lines_.row(l);
  return SingularLine{ProjPoint{Vec(a.begin(), a.end())}, ProjPoint{Vec(b.begin(), b.end())},
                      Vec(pl.begin(), pl.end()), l};
}

std::vector<std::uint32_t> PolarSpace::line_points(std::size_t l) const {
  const Field& f = field();
  const std::size_t N = dim();
  const auto a = point(lines_.p1[l]);
  const auto b = point(lines_.p2[l]);
  std::vector<std::uint32_t> out;
  out.reserve(f.q() + 1);
  out.push_back(lines_.p2[l]);
  Vec v(N);
  for (Elem t : f.elements()) {
    for (std::size_t k = 0; k < N; ++k) v[k] = f.add(a[k], f.mul(t, b[k]));
    // a + t b keeps a's leading 1, so it is already canonical.
    const std::int64_t idx = index_of(v);
    if (idx < 0) throw Error(Errc::not_on_quadric, "line point off the quadric");
    out.push_back(static_cast<std::uint32_t>(idx));
  }
  return out;
}

void PolarSpace::build_incidence() const {
  const std::size_t np = point_count();
  std::vector<std::vector<std::uint32_t>> pts(lines_.size());
  std::vector<std::uint32_t> count(np + 1, 0);
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    pts[l] = line_points(l);
    for (auto i : pts[l]) ++count[i + 1];
  }
  inc_offsets_.assign(np + 1, 0);
  for (std::size_t i = 0; i < np; ++i) inc_offsets_[i + 1] = inc_offsets_[i] + count[i + 1];
  inc_lines_.resize(inc_offsets_[np]);
  std::vector<std::uint32_t> fill(inc_offsets_.begin(), inc_offsets_.end() - 1);
  for (std::size_t l = 0; l < lines_.size(); ++l)
    for (auto i : pts[l]) inc_lines_[fill[i]++] = static_cast<std::uint32_t>(l);
}

std::span<const std::uint32_t> PolarSpace::lines_through(std::size_t i) const {
  std::call_once(incidence_once_, [this] { build_incidence(); });
  return {inc_lines_.data() + inc_offsets_[i], inc_offsets_[i + 1] - inc_offsets_[i]};
}

std::vector<ProjPoint> enumerate_quadric_points(const QuadraticSpace& qs) {
  std::vector<ProjPoint> out;
  for_each_projective_point(qs.field, static_cast<unsigned>(qs.dim()), [&](std::span<const Elem> p) {
    if (bilinear(qs.M, p, p).is_zero()) out.push_back(ProjPoint{Vec(p.begin(), p.end())});
  });
  return out;
}

std::vector<SingularLine> enumerate_singular_lines(const QuadraticSpace& qs) {
  const PolarSpace ps(qs);
  std::vector<SingularLine> out;
  out.reserve(ps.lines().size());
  for (std::size_t l = 0; l < ps.lines().size(); ++l) out.push_back(ps.line(l));
  return out;
}

std::vector<SingularLine> lines_through(const PolarSpace& ps, std::span<const Elem> p) {
  const std::int64_t idx = ps.index_of(p);
  if (idx < 0) {
    bool zero = std::all_of(p.begin(), p.end(), [](Elem x) { return x.is_zero(); });
    if (zero) throw Error(Errc::zero_vector, "the zero vector is not a projective point");
    throw Error(Errc::not_on_quadric, "point is not on the quadric");
  }
  std::vector<SingularLine> out;
  for (auto l : ps.lines_through(static_cast<std::size_t>(idx))) out.push_back(ps.line(l));
  return out;
}

void write_lines(std::ostream& out, const PolarSpace& ps) {
  const LineTable& lt = ps.lines();
  for (std::size_t l = 0; l < lt.size(); ++l) {
    out << l << " :";
    for (Elem x : lt.row(l)) out << ' ' << static_cast<unsigned>(x.v);
    out << '\n';
  }
}

const char* residue_class_name(ResidueClass c) {
  switch (c) {
    case ResidueClass::p_a: return "P_A";
    case ResidueClass::p_b: return "P_B";
    case ResidueClass::plus: return "PLUS";
    case ResidueClass::zero: return "ZERO";
    case ResidueClass::minus: return "MINUS";
  }
  return "?";
}

ResidueClassifier::ResidueClassifier(const QuadraticSpace& qs, const AlternatingForm& af)
    : qs_(&qs), af_(&af), minv_s_(qs.M_inv * af.S), w_(af.S * qs.M_inv * af.S) {
  if (af.S.rows() != qs.dim()) throw Error(Errc::dimension_mismatch, "form sizes differ");
}

ResidueClass ResidueClassifier::classify(std::span<const Elem> p) const {
  const Field& f = qs_->field;
  if (!eval_quadratic(*qs_, p).is_zero()) throw Error(Errc::not_on_quadric, "point is not on the quadric");
  const Vec sp = af_->S.apply(p);
  if (std::all_of(sp.begin(), sp.end(), [](Elem x) { return x.is_zero(); })) return ResidueClass::p_a;
  const Vec a = qs_->M_inv.apply(sp);
  const std::size_t k = pivot_of(p);
  if (k == p.size()) throw Error(Errc::zero_vector, "the zero vector is not a projective point");
  const Elem lambda = f.div(a[k], p[k]);
  bool parallel = true;
  for (std::size_t i = 0; i < p.size() && parallel; ++i) parallel = a[i] == f.mul(lambda, p[i]);
  if (parallel) return ResidueClass::p_b;
  // (Sp)^T M^-1 (Sp) = -p^T S M^-1 S p.
  const Elem val = dot(f, sp, a);
  if (val.is_zero()) return ResidueClass::zero;
  return f.is_square(val) == qs_->external_square ? ResidueClass::plus : ResidueClass::minus;
}

bool ResidueClassifier::on_w(std::span<const Elem> p) const { return bilinear(w_, p, p).is_zero(); }

ResidueClass residue_class(const QuadraticSpace& qs, const AlternatingForm& af, std::span<const Elem> p) {
  return ResidueClassifier(qs, af).classify(p);
}

std::uint64_t tau(const PolarSpace& ps, const AlternatingForm& af, std::size_t i) {
  const Field& f = ps.field();
  const Vec sp = af.S.apply(ps.point(i));
  const LineTable& lt = ps.lines();
  std::uint64_t count = 0;
  for (auto l : ps.lines_through(i)) {
    if (dot(f, sp, ps.point(lt.p1[l])).is_zero() && dot(f, sp, ps.point(lt.p2[l])).is_zero()) ++count;
  }
  return count;
}

std::uint64_t tau(const PolarSpace& ps, const AlternatingForm& af, std::span<const Elem> p) {
  const std::int64_t idx = ps.index_of(p);
  if (idx < 0) throw Error(Errc::not_on_quadric, "point is not on the quadric");
  return tau(ps, af, static_cast<std::size_t>(idx));
}

const char* line_tag_name(LineTag t) {
  switch (t) {
    case LineTag::t0: return "T0";
    case LineTag::tplus: return "TPLUS";
    case LineTag::talpha: return "TALPHA";
    case LineTag::tbeta: return "TBETA";
    case LineTag::tminus: return "TMINUS";
  }
  return "?";
}

LineType match_line_type(unsigned q, unsigned n_plus, unsigned n_w, unsigned n_minus) {
  struct Row {
    LineTag tag;
    unsigned plus, w, minus;
  };
  const Row rows[] = {
      {LineTag::t0, 0, q + 1, 0},
      {LineTag::tplus, q, 1, 0},
      {LineTag::talpha, (q + 1) / 2, 0, (q + 1) / 2},
      {LineTag::tbeta, (q - 1) / 2, 2, (q - 1) / 2},
      {LineTag::tminus, 0, 1, q},
  };
  for (const Row& r : rows)
    if (r.plus == n_plus && r.w == n_w && r.minus == n_minus) return LineType{r.tag, n_plus, n_w, n_minus};
  throw Error(Errc::type_not_in_table, "line with (+, W, -) = (" + std::to_string(n_plus) + ", " +
                                           std::to_string(n_w) + ", " + std::to_string(n_minus) + ")");
}

namespace {

LineType type_from_classes(unsigned q, const std::vector<std::uint32_t>& pts,
                           const std::vector<ResidueClass>& cls) {
  unsigned plus = 0, w = 0, minus = 0;
  for (auto i : pts) {
    switch (cls[i]) {
      case ResidueClass::plus: ++plus; break;
      case ResidueClass::minus: ++minus; break;
      default: ++w; break;
    }
  }
  return match_line_type(q, plus, w, minus);
}

}  // namespace

LineType line_type(const PolarSpace& ps, const AlternatingForm& af, std::size_t l) {
  const ResidueClassifier rc(ps.space(), af);
  const auto pts = ps.line_points(l);
  std::vector<ResidueClass> cls(ps.point_count(), ResidueClass::p_a);
  for (auto i : pts) cls[i] = rc.classify(ps.point(i));
  return type_from_classes(ps.field().q(), pts, cls);
}

FormScan scan_form(const PolarSpace& ps, const AlternatingForm& af, bool with_lines) {
  const ResidueClassifier rc(ps.space(), af);
  const std::size_t np = ps.point_count();
  FormScan out;
  out.point_class.resize(np);
  out.point_tau.resize(np);
  for (std::size_t i = 0; i < np; ++i) {
    out.point_class[i] = rc.classify(ps.point(i));
    out.point_tau[i] = tau(ps, af, i);
  }
  const LineTable& lt = ps.lines();
  for (std::size_t l = 0; l < lt.size(); ++l)
    if (bilinear(af.S, ps.point(lt.p1[l]), ps.point(lt.p2[l])).is_zero()) ++out.isotropic_lines;
  if (!with_lines) return out;
  out.line_tag.resize(lt.size());
  for (std::size_t l = 0; l < lt.size(); ++l)
    out.line_tag[l] = type_from_classes(ps.field().q(), ps.line_points(l), out.point_class).tag;
  return out;
}

}  // namespace polar
