#include "polar/counting.hpp"

#include <numeric>

#include "polar/error.hpp"

namespace polar {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(Errc::non_integer_result, "rational overflow");
  return static_cast<std::int64_t>(v);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

Rational R(std::int64_t v) { return Rational(v); }

// Exponent e/2 for an expression known to be even.
int half(int e) {
  if (e % 2 != 0) throw Error(Errc::inadmissible_params, "half-integral exponent");
  return e / 2;
}

std::string params_str(int c, int n, int r, int d) {
  return "case " + std::to_string(c) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
         " d=" + std::to_string(d);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::to_int() const {
  if (den_ != 1) throw Error(Errc::non_integer_result, str() + " is not an integer");
  return num_;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}
Rational operator-(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}
Rational operator*(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}
Rational operator/(const Rational& a, const Rational& b) {
  return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}
std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const i128 x = i128(a.num_) * b.den_, y = i128(b.num_) * a.den_;
  return x < y ? std::strong_ordering::less : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational qpow(unsigned q, int e) {
  if (e >= 0) return Rational(static_cast<std::int64_t>(ipow(q, static_cast<unsigned>(e))));
  return Rational(1, static_cast<std::int64_t>(ipow(q, static_cast<unsigned>(-e))));
}

ResidueConstants residue_constants(int n, unsigned q) {
  if (n < 2) throw Error(Errc::inadmissible_params, "n must be at least 2");
  const Rational qm1 = R(q - 1);
  auto P = [q](int e) { return qpow(q, e); };
  ResidueConstants c;
  c.A0 = static_cast<std::uint64_t>(((P(2 * n - 2) - R(1)) / qm1).to_int());
  c.Bplus = static_cast<std::uint64_t>(((P(n - 1) - R(1)) * (P(n - 2) + R(1)) / qm1).to_int());
  c.B0 = static_cast<std::uint64_t>(((P(2 * n - 3) - R(1)) / qm1).to_int());
  c.Bminus = static_cast<std::uint64_t>(((P(n - 1) + R(1)) * (P(n - 2) - R(1)) / qm1).to_int());
  return c;
}

Rational key_f(int n, unsigned q, const Rational& A, const Rational& N0, const Rational& Np, const Rational& Nm) {
  const ResidueConstants c = residue_constants(n, q);
  auto I = [](std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); };
  return (A * I(c.A0) + N0 * I(c.B0) + Np * I(c.Bplus) + Nm * I(c.Bminus)) / R(q + 1);
}

bool in_domain(Domain dom, int c, int n, int r, int d) {
  if (dom == Domain::realizable || c == 4) return realizable(c, n, r, d);
  if (r % 2 == 0 || r < 1 || r > 2 * n - 1) return false;
  switch (c) {
    case 1:
    case 2: return d % 2 == 1 && d >= 1 && d <= r && d <= 2 * n - r;
    case 3: return d % 2 == 0 && d >= 0 && d <= r - 1 && r + d <= 2 * n + 1;
    default: return false;
  }
}

RationalCensus closed_form_rational(int c, int n, unsigned q, int r, int d, Domain dom) {
  if (c == 4) throw Error(Errc::case4_no_closed_form, "case 4 has no closed-form census; use case4_A or case4_bound");
  if (!in_domain(dom, c, n, r, d)) throw Error(Errc::inadmissible_params, params_str(c, n, r, d));
  auto P = [q](int e) { return qpow(q, e); };
  const Rational one = R(1), two = R(2), qm1 = R(q - 1);
  const int s = r + d;
  RationalCensus out;
  if (c <= 2) {
    const Rational sgn = R(c == 1 ? 1 : -1);
    out.A_V = two * (P(n - half(s)) - one) / qm1;
    out.A_R = (P(r - 1) - one) / qm1 + sgn * P(half(s - 2));
    out.A = out.A_R + out.A_V;
    out.N0 = (P(2 * n - 1) - one) / qm1 - out.A;
    out.Nplus = (P(2 * n - 1) + P(2 * n - half(s) - 1) + sgn * P(n + half(s) - 1) - P(n - 1)) / two;
    out.Nminus = (P(2 * n - 1) - P(2 * n - half(s) - 1) - sgn * P(n + half(s) - 1) + P(n - 1)) / two;
  } else {
    out.A_V = two * (P(n - half(s - 1)) - one) / qm1;
    out.A_R = (P(r - 1) - one) / qm1;
    out.A = out.A_R + out.A_V;
    out.N0 = (P(2 * n - 1) + P(n + half(s - 1)) - P(n + half(s - 1) - 1) - one) / qm1 - out.A;
    const Rational base = (P(2 * n - s) - P(n - half(s + 1))) / two;
    out.Nplus = base * (P(s - 1) + P(half(s - 1)));
    out.Nminus = base * (P(s - 1) - P(half(s - 1)));
  }
  out.f = key_f(n, q, out.A, out.N0, out.Nplus, out.Nminus);
  return out;
}

ClassCensus closed_form_census(int c, int n, unsigned q, int r, int d) {
  const RationalCensus rc = closed_form_rational(c, n, q, r, d, Domain::realizable);
  auto U = [](const Rational& x) { return static_cast<std::uint64_t>(x.to_int()); };
  return ClassCensus{U(rc.A_R), U(rc.A_V), U(rc.A), U(rc.N0), U(rc.Nplus), U(rc.Nminus), U(rc.f)};
}

std::array<Rational, 2> case3_printed_nplus_nminus(int n, unsigned q, int r, int d) {
  if (!in_domain(Domain::formula, 3, n, r, d)) throw Error(Errc::inadmissible_params, params_str(3, n, r, d));
  auto P = [q](int e) { return qpow(q, e); };
  const int s = r + d;
  const Rational base = (P(2 * n - s) - P(n - half(s + 1))) / (R(2) * R(q - 1));
  return {base * (P(s - 1) + P(half(s - 1))), base * (P(s - 1) - P(half(s - 1)))};
}

Rational case4_A(int n, unsigned q, int r, int d) {
  if (!realizable(4, n, r, d)) throw Error(Errc::inadmissible_params, params_str(4, n, r, d));
  const Rational one = R(1), qm1 = R(q - 1);
  return R(2) * (qpow(q, n - half(r + d + 1)) - one) / qm1 + (qpow(q, r - 1) - one) / qm1;
}

namespace {

ClassCensus census_from_classes(int n, unsigned q, const std::array<std::uint64_t, 5>& k) {
  ClassCensus c;
  c.A_R = k[static_cast<int>(ResidueClass::p_a)];
  c.A_V = k[static_cast<int>(ResidueClass::p_b)];
  c.A = c.A_R + c.A_V;
  c.N0 = k[static_cast<int>(ResidueClass::zero)];
  c.Nplus = k[static_cast<int>(ResidueClass::plus)];
  c.Nminus = k[static_cast<int>(ResidueClass::minus)];
  auto I = [](std::uint64_t v) { return Rational(static_cast<std::int64_t>(v)); };
  c.f = static_cast<std::uint64_t>(key_f(n, q, I(c.A), I(c.N0), I(c.Nplus), I(c.Nminus)).to_int());
  return c;
}

}  // namespace

ClassCensus point_census(const QuadraticSpace& qs, const AlternatingForm& af) {
  const ResidueClassifier rc(qs, af);
  std::array<std::uint64_t, 5> k{};
  for_each_projective_point(qs.field, static_cast<unsigned>(qs.dim()), [&](std::span<const Elem> p) {
    if (eval_quadratic(qs, p).is_zero()) ++k[static_cast<int>(rc.classify(p))];
  });
  return census_from_classes(qs.n, qs.field.q(), k);
}

EmpiricalCensus empirical_census(const PolarSpace& ps, const AlternatingForm& af) {
  return empirical_census(ps, af, scan_form(ps, af, true));
}

EmpiricalCensus empirical_census(const PolarSpace& ps, const AlternatingForm& af, const FormScan& scan) {
  const ResidueClassifier rc(ps.space(), af);
  EmpiricalCensus out;
  std::array<std::uint64_t, 5> k{};
  for (std::size_t i = 0; i < ps.point_count(); ++i) {
    ++k[static_cast<int>(scan.point_class[i])];
    out.tau_sum += scan.point_tau[i];
    if (rc.on_w(ps.point(i))) ++out.on_w;
  }
  for (LineTag t : scan.line_tag) ++out.line_types[static_cast<int>(t)];
  out.f_direct = scan.isotropic_lines;
  out.census = census_from_classes(ps.space().n, ps.field().q(), k);
  return out;
}

L11Counts lemma_l11_counts(const Field& f, int n, int r, int d, Elem beta) {
  if (!in_domain(Domain::formula, 1, n, r, d)) throw Error(Errc::inadmissible_params, params_str(1, n, r, d));
  if (beta.is_zero()) throw Error(Errc::inadmissible_params, "beta must be nonzero");
  const unsigned q = f.q();
  const int h = (r - d) / 2;
  L11Counts out;
  out.block = n - (r + d) / 2;
  out.claim1_formula = ipow(q, static_cast<unsigned>(h)) * (ipow(q, static_cast<unsigned>(h)) + 1);

  const Elem two = f.from_int(2);
  const Elem b2 = f.mul(beta, beta);
  // y^2 + x^T [[0,I],[I,0]] x over (y, x) in F_q^{1 + 2h}.
  const unsigned len1 = static_cast<unsigned>(1 + 2 * h);
  const std::uint64_t total1 = ipow(q, len1);
  Vec v(len1);
  for (std::uint64_t code = 0; code < total1; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < len1; ++i, c /= q) v[i] = Elem{static_cast<std::uint8_t>(c % q)};
    Elem val = f.mul(v[0], v[0]);
    for (int i = 0; i < h; ++i) val = f.add(val, f.mul(two, f.mul(v[1 + i], v[1 + h + i])));
    if (val == b2) ++out.claim1_brute;
  }

  // theta(z, z1, z2) = -z^2 + 2 z2^T z1 with z != 0, counted when theta is in -(nonzero squares).
  const unsigned len2 = static_cast<unsigned>(1 + 2 * out.block);
  const std::uint64_t total2 = ipow(q, len2);
  Vec w(len2);
  for (std::uint64_t code = 0; code < total2; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < len2; ++i, c /= q) w[i] = Elem{static_cast<std::uint8_t>(c % q)};
    if (w[0].is_zero()) continue;
    Elem val = f.neg(f.mul(w[0], w[0]));
    for (int i = 0; i < out.block; ++i) val = f.add(val, f.mul(two, f.mul(w[1 + i], w[1 + out.block + i])));
    if (!val.is_zero() && f.is_square(f.neg(val))) ++out.claim2_brute;
  }
  return out;
}

std::uint64_t f1_max(int n, unsigned q) {
  if (n < 2) throw Error(Errc::inadmissible_params, "n must be at least 2");
  auto P = [q](int e) { return qpow(q, e); };
  const Rational num = (P(n - 1) - R(1)) *
                       (P(3 * n - 2) + P(3 * n - 3) - P(3 * n - 4) + P(2 * n) - P(n - 1) - R(1));
  const Rational den = R(q - 1) * R(q - 1) * R(q + 1);
  return static_cast<std::uint64_t>((num / den).to_int());
}

Rational g_value(int n, unsigned q, int r, int s) {
  if (r < 1 || r > 2 * n - 1 || r % 2 == 0 || s % 2 != 0 || s < r + 1 || s > std::min(2 * r, 2 * n))
    throw Error(Errc::inadmissible_params, "g(r,s) outside its grid: r=" + std::to_string(r) + " s=" + std::to_string(s));
  auto P = [q](int e) { return qpow(q, e); };
  const int h = s / 2;
  return P(n - h + 1) + P(n - h) + P(h + 1) - P(h - 1) + P(r - 1);
}

GridArgmax g_argmax(int n, unsigned q) {
  GridArgmax best;
  bool first = true;
  for (int r = 1; r <= 2 * n - 1; r += 2)
    for (int s = r + 1; s <= std::min(2 * r, 2 * n); ++s) {
      if (s % 2 != 0) continue;
      const Rational v = g_value(n, q, r, s);
      if (first || v > best.value) {
        best = GridArgmax{r, s, v, 0};
        first = false;
      } else if (v == best.value) {
        ++best.ties;
      }
    }
  return best;
}

std::uint64_t g_proper_bound(int n, unsigned q) {
  const unsigned u = static_cast<unsigned>(n);
  return ipow(q, 2 * u - 2) + ipow(q, u + 1) - ipow(q, u - 1) + q + 1;
}

Rational case4_bound(int n, unsigned q, int r, int s) {
  if (n < 2 || r < 1 || r % 2 == 0 || s % 2 == 0 || s < r)
    throw Error(Errc::inadmissible_params, "case-4 bound needs r odd and s = r + d with d even");
  auto P = [q](int e) { return qpow(q, e); };
  const Rational head = P(n) * (P(n - 1) - R(1)) * R(q - 1) * (P(r - 3) + R(2) * P(n - half(s + 5)));
  return head + P(4 * n - 3) + P(3 * n - 1) - P(3 * n - 2) - R(3) * P(2 * n - 2) + R(2) * P(2 * n - 3) - P(2 * n) +
         R(2) * P(n - 1) - R(2) * P(n - 2) + R(1);
}

Rational case4_h1(int n, unsigned q) {
  auto P = [q](int e) { return qpow(q, e); };
  return P(4 * n - 3) + P(3 * n - 1) - P(3 * n - 2) + R(2) * P(3 * n - 3) - R(2) * P(3 * n - 4) -
         R(4) * P(2 * n - 2) + R(3) * P(2 * n - 3) - P(2 * n) + P(n - 1) - P(n - 2) + R(1);
}

Rational case4_h2n1(int n, unsigned q) {
  auto P = [q](int e) { return qpow(q, e); };
  return P(4 * n - 3) + P(4 * n - 4) - P(4 * n - 5) + P(3 * n - 1) - P(3 * n - 2) - P(3 * n - 3) + P(3 * n - 4) -
         P(2 * n - 2) - P(2 * n) + R(1);
}

GridArgmax f_argmax(int c, int n, unsigned q, Domain dom) {
  GridArgmax best;
  bool first = true;
  for (int r = 1; r <= 2 * n - 1; r += 2)
    for (int d = 0; d <= r; ++d) {
      if (!in_domain(dom, c, n, r, d)) continue;
      const Rational v = closed_form_rational(c, n, q, r, d, dom).f;
      if (first || v > best.value) {
        best = GridArgmax{r, d, v, 0};
        first = false;
      } else if (v == best.value) {
        ++best.ties;
      }
    }
  if (first) throw Error(Errc::inadmissible_params, "empty parameter grid");
  return best;
}

std::vector<TableMaximaRow> table_maxima_report(int n, unsigned q) {
  if (n < 3) throw Error(Errc::inadmissible_params, "the maxima table covers n >= 3");
  const int top = 2 * n - 1;
  const int exp[3][2] = {{top, 1}, {n == 3 ? 1 : top, 1}, {n == 3 ? 1 : top, 0}};
  std::vector<TableMaximaRow> rows;
  for (int c = 1; c <= 3; ++c) {
    TableMaximaRow row;
    row.case_tag = c;
    row.expected_r = exp[c - 1][0];
    row.expected_d = exp[c - 1][1];
    row.formula = f_argmax(c, n, q, Domain::formula);
    try {
      row.realizable = f_argmax(c, n, q, Domain::realizable);
    } catch (const Error&) {
    }
    row.ok = in_domain(Domain::formula, c, n, row.expected_r, row.expected_d) &&
             closed_form_rational(c, n, q, row.expected_r, row.expected_d, Domain::formula).f == row.formula.value;
    rows.push_back(std::move(row));
  }
  return rows;
}

void verify_table_maxima(int n, unsigned q) {
  for (const TableMaximaRow& row : table_maxima_report(n, q))
    if (!row.ok)
      throw Error(Errc::table_mismatch, "case " + std::to_string(row.case_tag) + ": table says (r,d)=(" +
                                            std::to_string(row.expected_r) + "," + std::to_string(row.expected_d) +
                                            "), argmax is (" + std::to_string(row.formula.r) + "," +
                                            std::to_string(row.formula.x) + ")");
}

MaxEigReport maxeig_bound_check(const QuadraticSpace& qs, const AlternatingForm& af) {
  const unsigned q = qs.field.q();
  MaxEigReport rep;
  for (const auto& [lambda, space] : nonzero_eigenvalues(qs.M_inv * af.S))
    rep.eigenvectors += ipow(q, static_cast<unsigned>(space.dim())) - 1;
  rep.m = radical_decomposition(qs, af).m;
  rep.bound = 2 * (ipow(q, static_cast<unsigned>(rep.m)) - 1);
  rep.ok = rep.eigenvectors <= rep.bound;
  return rep;
}

OrbitCounts orbit_formulas(int n, unsigned q) {
  const std::uint64_t qn = ipow(q, static_cast<unsigned>(n));
  return OrbitCounts{(qn * qn - 1) / (q - 1), qn * (qn - 1) / 2, qn * (qn + 1) / 2};
}

std::uint64_t section_class_size(int t, unsigned q, bool hyperbolic) {
  const std::uint64_t qt = ipow(q, static_cast<unsigned>(t));
  const std::uint64_t qt1 = ipow(q, static_cast<unsigned>(t - 1));
  return hyperbolic ? qt1 * (qt - 1) / 2 : qt1 * (qt + 1) / 2;
}

}  // namespace polar
