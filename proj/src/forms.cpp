#include "polar/forms.hpp"

#include <string>

#include "polar/error.hpp"

namespace polar {

namespace {

std::string params_str(int n, int r, int d, int c) {
  return "case " + std::to_string(c) + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
         " d=" + std::to_string(d);
}

Elem minus_one_pow(const Field& f, int k) { return (k % 2 == 0) ? f.one() : f.neg(f.one()); }

// [[0, I_k], [I_k, 0]] at offset.
void put_hyperbolic(Matrix& m, std::size_t off, std::size_t k) {
  const Elem one = m.field().one();
  for (std::size_t i = 0; i < k; ++i) {
    m(off + i, off + k + i) = one;
    m(off + k + i, off + i) = one;
  }
}

// [[0, I_k], [-I_k, 0]] at offset.
void put_symplectic(Matrix& s, std::size_t off, std::size_t k) {
  const Field& f = s.field();
  for (std::size_t i = 0; i < k; ++i) {
    s(off + i, off + k + i) = f.one();
    s(off + k + i, off + i) = f.neg(f.one());
  }
}

void put_alt(Matrix& s, std::size_t i, std::size_t j, Elem a) {
  s(i, j) = a;
  s(j, i) = s.field().neg(a);
}

}  // namespace

QuadraticSpace make_quadratic_space(Matrix M, std::optional<int> case_tag) {
  if (!M.is_square() || M.rows() % 2 == 0 || M.rows() < 3)
    throw Error(Errc::dimension_mismatch, "Gram matrix must be square of odd size 2n+1 >= 3");
  if (!M.is_symmetric()) throw Error(Errc::inadmissible_params, "Gram matrix is not symmetric");
  const Field f = M.field();
  const Elem det = determinant(M);
  if (det.is_zero()) throw Error(Errc::singular_matrix, "quadratic form is degenerate");
  QuadraticSpace qs{f, static_cast<int>((M.rows() - 1) / 2), M, inverse(M), case_tag, true};
  qs.external_square = f.is_square(f.mul(minus_one_pow(f, qs.n), det));
  return qs;
}

QuadraticSpace standard_space(const Field& f, int n) {
  if (n < 1) throw Error(Errc::inadmissible_params, "n must be positive");
  const std::size_t dim = static_cast<std::size_t>(2 * n + 1);
  Matrix M(f, dim, dim);
  put_hyperbolic(M, 0, static_cast<std::size_t>(n));
  M(dim - 1, dim - 1) = f.one();
  return make_quadratic_space(std::move(M));
}

AlternatingForm make_alternating_form(Matrix S) {
  if (!S.is_square() || S.rows() % 2 == 0)
    throw Error(Errc::dimension_mismatch, "alternating form must be square of odd size");
  if (!S.is_alternating()) throw Error(Errc::inadmissible_params, "matrix is not alternating");
  if (S.is_zero()) throw Error(Errc::inadmissible_params, "zero form has no codeword");
  Subspace rad = kernel(S);
  const int r = static_cast<int>(rad.dim());
  return AlternatingForm{std::move(S), std::move(rad), r};
}

bool realizable(int c, int n, int r, int d) {
  if (n < 1 || r % 2 == 0 || r < 1 || r > 2 * n - 1 || d < 0) return false;
  switch (c) {
    case 1:
    case 2:
      if (d % 2 == 0 || d > r || d > 2 * n - r) return false;
      return c == 1 || r - d >= 2;
    case 3:
      return d % 2 == 0 && d <= r - 1 && r + d <= 2 * n + 1;
    case 4:
      return d % 2 == 0 && d <= r - 1 && r + d <= 2 * n - 1;
    default:
      return false;
  }
}

QuadraticSpace build_M(const Field& f, int n, int r, int d, int c) {
  if (!realizable(c, n, r, d)) throw Error(Errc::inadmissible_params, params_str(n, r, d, c));
  const std::size_t N = static_cast<std::size_t>(2 * n + 1);
  const std::size_t sd = static_cast<std::size_t>(d);
  const std::size_t h0 = N - static_cast<std::size_t>(r) - sd;
  const std::size_t d0 = static_cast<std::size_t>(r - d);
  const std::size_t oH0 = sd, oD0 = sd + h0, oD = N - sd;
  const Elem one = f.one();
  const Elem mxi = f.neg(f.nonsquare());

  Matrix M(f, N, N);
  for (std::size_t i = 0; i < sd; ++i) {
    M(i, oD + i) = one;
    M(oD + i, i) = one;
  }
  // Q0 on H0.
  if (c <= 2) {
    const std::size_t k = (h0 - 1) / 2;
    put_hyperbolic(M, oH0, k);
    M(oH0 + 2 * k, oH0 + 2 * k) = one;
  } else if (c == 3) {
    put_hyperbolic(M, oH0, h0 / 2);
  } else {
    const std::size_t k = h0 / 2 - 1;
    put_hyperbolic(M, oH0, k);
    M(oH0 + 2 * k, oH0 + 2 * k) = one;
    M(oH0 + 2 * k + 1, oH0 + 2 * k + 1) = mxi;
  }
  // R0 on D0.
  if (c == 1) {
    put_hyperbolic(M, oD0, d0 / 2);
  } else if (c == 2) {
    const std::size_t k = d0 / 2 - 1;
    put_hyperbolic(M, oD0, k);
    M(oD0 + 2 * k, oD0 + 2 * k) = one;
    M(oD0 + 2 * k + 1, oD0 + 2 * k + 1) = mxi;
  } else {
    const std::size_t k = (d0 - 1) / 2;
    put_hyperbolic(M, oD0, k);
    M(oD0 + 2 * k, oD0 + 2 * k) = one;
  }
  return make_quadratic_space(std::move(M), c);
}

AlternatingForm build_S(const Field& f, int n, int r, int d, int c, const SOptions& opts) {
  if (!realizable(c, n, r, d)) throw Error(Errc::inadmissible_params, params_str(n, r, d, c));
  if (opts.u_minor && (c != 4 || d < 2))
    throw Error(Errc::inadmissible_params, "the U_I minor needs case 4 with d >= 2");
  const std::size_t N = static_cast<std::size_t>(2 * n + 1);
  const std::size_t sd = static_cast<std::size_t>(d);
  const std::size_t h0 = N - static_cast<std::size_t>(r) - sd;
  const std::size_t oH0 = sd;

  Matrix S(f, N, N);
  std::vector<bool> used(sd, false);
  if (c <= 2) {
    put_symplectic(S, oH0, (h0 - 1) / 2);
    put_alt(S, 0, oH0 + h0 - 1, f.one());
    used[0] = true;
  } else if (c == 3) {
    put_symplectic(S, oH0, h0 / 2);
  } else {
    put_symplectic(S, oH0, h0 / 2 - 1);
    const Elem alpha = opts.alpha.value_or(f.one());
    const std::size_t a = oH0 + h0 - 2, b = oH0 + h0 - 1;
    put_alt(S, a, b, alpha);
    if (opts.u_minor) {
      put_alt(S, 0, a, f.one());
      put_alt(S, 1, b, f.one());
      used[0] = used[1] = true;
    }
  }

  if (opts.s11) {
    const Matrix& s11 = *opts.s11;
    if (s11.rows() != sd || s11.cols() != sd) throw Error(Errc::dimension_mismatch, "s11 must be d x d");
    if (!s11.is_alternating()) throw Error(Errc::inadmissible_params, "s11 is not alternating");
    S.set_block(0, 0, s11);
  } else {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < sd; ++i)
      if (!used[i]) rest.push_back(i);
    for (std::size_t j = 0; j + 1 < rest.size(); j += 2) put_alt(S, rest[j], rest[j + 1], f.one());
  }

  AlternatingForm af = make_alternating_form(std::move(S));
  if (af.r != r)
    throw Error(Errc::radical_mismatch,
                "assembled S has radical dimension " + std::to_string(af.r) + ", expected " + std::to_string(r));
  return af;
}

Elem eval_quadratic(const QuadraticSpace& qs, std::span<const Elem> v) {
  if (v.size() != qs.dim()) throw Error(Errc::dimension_mismatch, "vector length differs from 2n+1");
  return bilinear(qs.M, v, v);
}

SquareClass point_square_class(const QuadraticSpace& qs, std::span<const Elem> p) {
  bool zero = true;
  for (Elem x : p) zero = zero && x.is_zero();
  if (zero) throw Error(Errc::zero_vector, "the zero vector is not a projective point");
  const Elem v = eval_quadratic(qs, p);
  if (v.is_zero()) return SquareClass::singular;
  return qs.field.is_square(v) ? SquareClass::square : SquareClass::nonsquare;
}

bool is_hyperbolic(const Matrix& gram) {
  if (!gram.is_square() || gram.rows() % 2 != 0)
    throw Error(Errc::dimension_mismatch, "hyperbolic test needs an even-dimensional form");
  const Field& f = gram.field();
  const Elem det = determinant(gram);
  if (det.is_zero()) throw Error(Errc::singular_matrix, "form is degenerate");
  return f.is_square(f.mul(minus_one_pow(f, static_cast<int>(gram.rows() / 2)), det));
}

int witt_index(const Matrix& gram) {
  const int k = static_cast<int>(gram.rows());
  if (k == 0) return 0;
  if (determinant(gram).is_zero()) throw Error(Errc::singular_matrix, "form is degenerate");
  if (k % 2 == 1) return (k - 1) / 2;
  return is_hyperbolic(gram) ? k / 2 : k / 2 - 1;
}

PointPosition classify_internal_external(const QuadraticSpace& qs, std::span<const Elem> p) {
  if (point_square_class(qs, p) == SquareClass::singular)
    throw Error(Errc::singular_point, "point lies on the quadric");
  const Subspace line = Subspace::span(qs.field, qs.dim(), {Vec(p.begin(), p.end())});
  const Subspace hyper = orthogonal(line, qs.M);
  return is_hyperbolic(restrict_form(qs.M, hyper)) ? PointPosition::external : PointPosition::internal;
}

OrbitCounts orbit_counts(const QuadraticSpace& qs) {
  OrbitCounts out;
  for_each_projective_point(qs.field, static_cast<unsigned>(qs.dim()), [&](std::span<const Elem> p) {
    if (eval_quadratic(qs, p).is_zero())
      ++out.on_quadric;
    else if (classify_internal_external(qs, p) == PointPosition::external)
      ++out.external;
    else
      ++out.internal;
  });
  return out;
}

RadicalDecomposition radical_decomposition(const QuadraticSpace& qs, const AlternatingForm& af) {
  if (af.S.rows() != qs.dim()) throw Error(Errc::dimension_mismatch, "form sizes differ");
  const Field& f = qs.field;
  const std::size_t N = qs.dim();
  RadicalDecomposition rd{af.radical, Subspace(f, N), Subspace(f, N), Subspace(f, N), Subspace(f, N), 0, 0};
  const Subspace rperp = orthogonal(rd.R, qs.M);
  rd.D = intersect(rd.R, rperp);
  rd.d = static_cast<int>(rd.D.dim());
  rd.D0 = complement_in(rd.D, rd.R);
  rd.H0 = complement_in(rd.D, rperp);
  rd.H = complement_in(sum(rd.R, rd.H0), Subspace::whole(f, N));
  rd.m = witt_index(restrict_form(qs.M, rd.H0));
  return rd;
}

FormPair two_generator_pair(const Field& f, int n, int m, int r) {
  const int v0 = 2 * n + 1 - 2 * m - r;
  if (m < 0 || r < 1 || r % 2 == 0 || (v0 != 0 && v0 != 2))
    throw Error(Errc::inadmissible_params, "need 2n+1 = 2m + r + (0 or 2) with r odd");
  const std::size_t N = static_cast<std::size_t>(2 * n + 1);
  const std::size_t sm = static_cast<std::size_t>(m);
  Matrix M(f, N, N), S(f, N, N);
  put_hyperbolic(M, 0, sm);
  // phi(g+, g-) = -1 makes G+ the eigenspace of 1 and G- that of -1.
  for (std::size_t i = 0; i < sm; ++i) put_alt(S, sm + i, i, f.one());
  std::size_t off = 2 * sm;
  if (v0 == 2) {
    M(off, off) = f.one();
    M(off + 1, off + 1) = f.neg(f.nonsquare());
    put_alt(S, off, off + 1, f.one());
    off += 2;
  }
  const std::size_t k = static_cast<std::size_t>((r - 1) / 2);
  put_hyperbolic(M, off, k);
  M(N - 1, N - 1) = f.one();
  return FormPair{make_quadratic_space(std::move(M)), make_alternating_form(std::move(S))};
}

nlohmann::ordered_json descriptor_to_json(const CanonicalDescriptor& desc) {
  nlohmann::ordered_json j;
  j["q"] = desc.q;
  j["p"] = desc.p;
  j["e"] = desc.e;
  j["n"] = desc.n;
  j["r"] = desc.r;
  j["d"] = desc.d;
  j["case"] = desc.case_tag;
  j["alpha"] = desc.alpha;
  j["u_minor"] = desc.u_minor;
  if (desc.s11) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < desc.s11->rows(); ++i) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (Elem x : desc.s11->row(i)) row.push_back(x.v);
      rows.push_back(row);
    }
    j["s11"] = rows;
  } else {
    j["s11"] = nullptr;
  }
  return j;
}

CanonicalDescriptor descriptor_from_json(const nlohmann::ordered_json& j) {
  try {
    CanonicalDescriptor desc;
    desc.q = j.at("q").get<unsigned>();
    desc.p = j.value("p", 0u);
    desc.e = j.value("e", 0u);
    desc.n = j.at("n").get<int>();
    desc.r = j.at("r").get<int>();
    desc.d = j.at("d").get<int>();
    desc.case_tag = j.at("case").get<int>();
    desc.alpha = j.value("alpha", 1u);
    desc.u_minor = j.value("u_minor", false);
    const Field f = Field::of_order(desc.q);
    if ((desc.p && desc.p != f.p()) || (desc.e && desc.e != f.e()))
      throw Error(Errc::parse_error, "p, e disagree with q");
    desc.p = f.p();
    desc.e = f.e();
    if (j.contains("s11") && !j["s11"].is_null()) {
      std::vector<std::vector<unsigned>> rows = j["s11"].get<std::vector<std::vector<unsigned>>>();
      for (const auto& row : rows)
        if (row.size() != rows.size()) throw Error(Errc::parse_error, "s11 must be square");
      desc.s11 = rows.empty() ? Matrix(f, 0, 0) : Matrix::from_values(f, rows);
    }
    return desc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

FormPair build_canonical(const CanonicalDescriptor& desc) {
  const Field f = Field::of_order(desc.q);
  SOptions opts;
  opts.s11 = desc.s11;
  opts.alpha = f.from_value(desc.alpha);
  opts.u_minor = desc.u_minor;
  return FormPair{build_M(f, desc.n, desc.r, desc.d, desc.case_tag),
                  build_S(f, desc.n, desc.r, desc.d, desc.case_tag, opts)};
}

}  // namespace polar

namespace polar {

StandardFrame standard_frame(const QuadraticSpace& qs) {
  const Field& f = qs.field;
  const std::size_t N = qs.dim();
  const std::size_t n = static_cast<std::size_t>(qs.n);
  const Elem half = f.inv(f.from_int(2));
  std::vector<Vec> es, fs;
  Subspace rest = Subspace::whole(f, N);
  auto b = [&](std::span<const Elem> u, std::span<const Elem> v) { return bilinear(qs.M, u, v); };
  for (std::size_t k = 0; k < n; ++k) {
    const std::vector<Vec> basis = rest.vectors();
    // rest is non-degenerate of dimension >= 3, so its first three basis vectors span a singular one.
    Vec e;
    const std::uint64_t q = f.q();
    for (std::uint64_t code = 1; code < q * q * q && e.empty(); ++code) {
      Vec v(N);
      std::uint64_t c = code;
      for (std::size_t t = 0; t < 3; ++t, c /= q) {
        const Elem a{static_cast<std::uint8_t>(c % q)};
        for (std::size_t i = 0; i < N; ++i) v[i] = f.add(v[i], f.mul(a, basis[t][i]));
      }
      if (b(v, v).is_zero()) e = v;
    }
    if (e.empty()) throw Error(Errc::singular_matrix, "no singular vector found; form is degenerate");
    Vec w;
    for (const Vec& x : basis)
      if (!b(e, x).is_zero()) {
        w = x;
        break;
      }
    if (w.empty()) throw Error(Errc::singular_matrix, "form is degenerate");
    const Elem s = f.inv(b(e, w));
    for (Elem& x : w) x = f.mul(s, x);
    const Elem t = f.mul(half, b(w, w));
    for (std::size_t i = 0; i < N; ++i) w[i] = f.sub(w[i], f.mul(t, e[i]));
    const Subspace plane = Subspace::span(f, N, {e, w});
    rest = intersect(rest, orthogonal(plane, qs.M));
    es.push_back(std::move(e));
    fs.push_back(std::move(w));
  }
  Vec z = rest.vector(0);
  const Elem c = b(z, z);
  Elem lambda = f.one();
  if (f.is_square(c)) {
    Elem root;
    for (Elem x : f.elements())
      if (f.mul(x, x) == c) root = x;
    const Elem inv_root = f.inv(root);
    for (Elem& x : z) x = f.mul(inv_root, x);
  } else {
    lambda = c;
    for (Vec& v : fs)
      for (Elem& x : v) x = f.mul(c, x);
  }
  Matrix T(f, N, N);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < N; ++i) {
      T(i, k) = es[k][i];
      T(i, n + k) = fs[k][i];
    }
  for (std::size_t i = 0; i < N; ++i) T(i, N - 1) = z[i];
  return StandardFrame{std::move(T), lambda};
}

AlternatingForm transport_form(const AlternatingForm& af, const QuadraticSpace& from, const QuadraticSpace& to) {
  if (af.S.rows() != from.dim() || from.dim() != to.dim())
    throw Error(Errc::dimension_mismatch, "form sizes differ");
  const Matrix tf = standard_frame(from).T;
  const Matrix tt_inv = inverse(standard_frame(to).T);
  return make_alternating_form(tt_inv.transpose() * (tf.transpose() * af.S * tf) * tt_inv);
}

}  // namespace polar

namespace polar {

std::vector<CanonicalDescriptor> canonical_descriptors(const Field& f, int n, int c) {
  std::vector<CanonicalDescriptor> out;
  for (int r = 1; r <= 2 * n - 1; r += 2)
    for (int d = 0; d <= r; ++d) {
      if (!realizable(c, n, r, d)) continue;
      CanonicalDescriptor desc;
      desc.q = f.q();
      desc.p = f.p();
      desc.e = f.e();
      desc.n = n;
      desc.r = r;
      desc.d = d;
      desc.case_tag = c;
      out.push_back(desc);
      if (c == 4 && d >= 2) {
        desc.u_minor = true;
        out.push_back(desc);
        desc.alpha = 0;
        out.push_back(desc);
      }
    }
  return out;
}

}  // namespace polar
