#include "polar/code.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "polar/parallel.hpp"

namespace polar {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Weight of sum_t m_t * column_t over all lines, via the field tables.
std::uint64_t weight_impl(const PolarCode& code, std::span<const Elem> m, Vec* values) {
  const Field& f = code.field();
  const LineTable& lt = code.lines();
  const unsigned q = f.q();
  const auto add = f.add_table();
  const auto mul = f.mul_table();
  std::vector<std::pair<std::size_t, const Elem*>> terms;
  for (std::size_t t = 0; t < m.size(); ++t)
    if (!m[t].is_zero()) terms.emplace_back(t, mul.data() + m[t].v * q);
  if (values) values->assign(lt.size(), Elem{});
  std::uint64_t w = 0;
  for (std::size_t l = 0; l < lt.size(); ++l) {
    const Elem* row = lt.plucker.data() + l * lt.K;
    Elem acc{};
    for (const auto& [t, mrow] : terms) acc = add[acc.v * q + mrow[row[t].v].v];
    if (!acc.is_zero()) ++w;
    if (values) (*values)[l] = acc;
  }
  return w;
}

}  // namespace

std::uint64_t claimed_min_distance(int n, unsigned q) {
  return ipow(q, static_cast<unsigned>(4 * n - 5)) - ipow(q, static_cast<unsigned>(3 * n - 4));
}

std::uint64_t line_count(int n, unsigned q) {
  const unsigned u = static_cast<unsigned>(n);
  return (ipow(q, 2 * u - 2) - 1) * (ipow(q, 2 * u) - 1) / ((std::uint64_t{q} * q - 1) * (q - 1));
}

PolarCode build_code(const QuadraticSpace& qs, unsigned workers) {
  if (qs.n < 2) throw Error(Errc::inadmissible_params, "n must be at least 2");
  PolarCode code;
  code.n = qs.n;
  code.space = std::make_shared<const PolarSpace>(qs, workers);
  const Field& f = qs.field;
  const LineTable& lt = code.lines();
  const std::size_t K = lt.K;

  // Streaming column rank: echelon rows keyed by pivot, each normalized to a leading 1.
  std::vector<Vec> basis(K);
  std::size_t rk = 0;
  Vec v(K);
  for (std::size_t l = 0; l < lt.size() && rk < K; ++l) {
    const auto col = lt.row(l);
    std::copy(col.begin(), col.end(), v.begin());
    for (std::size_t p = 0; p < K; ++p) {
      if (v[p].is_zero()) continue;
      if (basis[p].empty()) {
        const Elem s = f.inv(v[p]);
        for (Elem& x : v) x = f.mul(s, x);
        basis[p] = v;
        ++rk;
        break;
      }
      const Elem c = v[p];
      for (std::size_t j = p; j < K; ++j) v[j] = f.sub(v[j], f.mul(c, basis[p][j]));
    }
  }
  if (rk != K)
    throw Error(Errc::rank_deficient, "generator rank " + std::to_string(rk) + " != " + std::to_string(K));
  code.params = CodeParams{lt.size(), K, claimed_min_distance(qs.n, f.q())};
  return code;
}

PolarCode build_code(const Field& f, int n, unsigned workers) { return build_code(standard_space(f, n), workers); }

Vec message_from_form(const Matrix& S) {
  Vec m;
  m.reserve(plucker_length(S.rows()));
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = i + 1; j < S.cols(); ++j) m.push_back(S(i, j));
  return m;
}

Matrix form_from_message(const Field& f, std::size_t dim, std::span<const Elem> m) {
  if (m.size() != plucker_length(dim)) throw Error(Errc::dimension_mismatch, "message length is not C(2n+1,2)");
  Matrix S(f, dim, dim);
  std::size_t t = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j, ++t) {
      S(i, j) = m[t];
      S(j, i) = f.neg(m[t]);
    }
  return S;
}

Codeword codeword_from_form(const PolarCode& code, const AlternatingForm& af) {
  const PolarSpace& ps = *code.space;
  if (af.S.rows() != ps.dim() || !(af.S.field() == ps.field()))
    throw Error(Errc::dimension_mismatch, "form does not live on the code's space");
  const LineTable& lt = ps.lines();
  Codeword c;
  c.values.resize(lt.size());
  for (std::size_t l = 0; l < lt.size(); ++l) {
    c.values[l] = bilinear(af.S, ps.point(lt.p1[l]), ps.point(lt.p2[l]));
    if (!c.values[l].is_zero()) ++c.weight;
  }
  return c;
}

Codeword encode(const PolarCode& code, std::span<const Elem> m) {
  if (m.size() != code.lines().K) throw Error(Errc::dimension_mismatch, "message length is not C(2n+1,2)");
  Codeword c;
  c.weight = weight_impl(code, m, &c.values);
  return c;
}

std::uint64_t weight_of_message(const PolarCode& code, std::span<const Elem> m) {
  if (m.size() != code.lines().K) throw Error(Errc::dimension_mismatch, "message length is not C(2n+1,2)");
  if (std::all_of(m.begin(), m.end(), [](Elem x) { return x.is_zero(); }))
    throw Error(Errc::zero_message, "the zero message has no weight to report");
  return weight_impl(code, m, nullptr);
}

AlternatingForm canonical_min_weight_form(const PolarCode& code) {
  const Field& f = code.field();
  const int n = code.n;
  const QuadraticSpace can = build_M(f, n, 2 * n - 1, 1, 1);
  const AlternatingForm s = build_S(f, n, 2 * n - 1, 1, 1);
  return transport_form(s, can, code.space->space());
}

std::uint64_t exact_search_cost(const PolarCode& code) {
  const std::uint64_t q = code.field().q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.lines().K; ++i) total = sat_mul(total, q);
  if (total == std::numeric_limits<std::uint64_t>::max()) return total;
  return (total - 1) / (q - 1);
}

ExactResult min_distance_exact(const PolarCode& code, std::uint64_t budget, unsigned workers) {
  const std::uint64_t cost = exact_search_cost(code);
  if (cost > budget) throw BudgetExceeded(cost, budget);

  const Field& f = code.field();
  const LineTable& lt = code.lines();
  const std::size_t K = lt.K;
  const std::size_t L = lt.size();
  const unsigned q = f.q();
  const std::size_t k1 = K / 2;
  const std::size_t k2 = K - k1;

  // table[code * L + l] = sum over the digits of code (digit t -> coordinate off + t) of the
  // digit times that Pluecker coordinate of line l.
  auto make_table = [&](std::size_t off, std::size_t k, bool negate) {
    const std::uint64_t count = ipow(q, static_cast<unsigned>(k));
    std::vector<Elem> t(count * L);
    std::uint64_t top = 1;
    unsigned digit_pos = 0;
    for (std::uint64_t c = 1; c < count; ++c) {
      if (c == top * q) {
        top *= q;
        ++digit_pos;
      }
      const Elem a{static_cast<std::uint8_t>(c / top)};
      const std::uint64_t rest = c % top;
      for (std::size_t l = 0; l < L; ++l) {
        const Elem x = f.mul(a, lt.plucker[l * K + off + digit_pos]);
        t[c * L + l] = f.add(t[rest * L + l], x);
      }
    }
    if (negate)
      for (Elem& x : t) x = f.neg(x);
    return t;
  };
  const std::vector<Elem> T1 = make_table(0, k1, false);
  const std::vector<Elem> T2 = make_table(k1, k2, true);
  const std::uint64_t n1 = ipow(q, static_cast<unsigned>(k1));
  const std::uint64_t n2 = ipow(q, static_cast<unsigned>(k2));

  auto lowest_digit_is_one = [q](std::uint64_t c) {
    while (c % q == 0) c /= q;
    return c % q == 1;
  };

  struct Local {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t messages = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> words;
  };
  const std::size_t blocks = static_cast<std::size_t>(std::min<std::uint64_t>(n1, 256));
  std::vector<Local> locals(blocks);
  parallel_blocks(n1, blocks, workers, [&](std::size_t blk, std::size_t begin, std::size_t end) {
    Local& loc = locals[blk];
    for (std::uint64_t a = begin; a < end; ++a) {
      if (a != 0 && !lowest_digit_is_one(a)) continue;
      const Elem* ra = T1.data() + a * L;
      for (std::uint64_t b = 0; b < n2; ++b) {
        if (a == 0 && (b == 0 || !lowest_digit_is_one(b))) continue;
        const Elem* rb = T2.data() + b * L;
        std::uint64_t w = 0;
        for (std::size_t l = 0; l < L; ++l) w += ra[l].v != rb[l].v;
        ++loc.messages;
        if (w < loc.best) {
          loc.best = w;
          loc.words.clear();
        }
        if (w == loc.best) loc.words.emplace_back(a, b);
      }
    }
  });

  ExactResult res;
  res.d_min = std::numeric_limits<std::uint64_t>::max();
  for (const Local& loc : locals) {
    res.messages += loc.messages;
    res.d_min = std::min(res.d_min, loc.best);
  }
  auto decode = [&](std::uint64_t c, std::size_t k, Vec& out) {
    for (std::size_t t = 0; t < k; ++t, c /= q) out.push_back(Elem{static_cast<std::uint8_t>(c % q)});
  };
  for (const Local& loc : locals) {
    if (loc.best != res.d_min) continue;
    for (const auto& [a, b] : loc.words) {
      Vec m;
      m.reserve(K);
      decode(a, k1, m);
      decode(b, k2, m);
      res.min_words.push_back(std::move(m));
    }
  }
  return res;
}

MinWeightStats min_weight_stats(const PolarCode& code, const ExactResult& exact) {
  const PolarSpace& ps = *code.space;
  MinWeightStats st;
  std::set<int> dims;
  std::set<std::array<std::uint64_t, 4>> cens;
  for (const Vec& m : exact.min_words) {
    const AlternatingForm af = make_alternating_form(form_from_message(ps.field(), ps.dim(), m));
    dims.insert(af.r);
    const ResidueClassifier rc(ps.space(), af);
    std::array<std::uint64_t, 4> c{};
    for (std::size_t i = 0; i < ps.point_count(); ++i) {
      switch (rc.classify(ps.point(i))) {
        case ResidueClass::p_a:
        case ResidueClass::p_b: ++c[0]; break;
        case ResidueClass::zero: ++c[1]; break;
        case ResidueClass::plus: ++c[2]; break;
        case ResidueClass::minus: ++c[3]; break;
      }
    }
    cens.insert(c);
    ++st.words;
  }
  st.radical_dims.assign(dims.begin(), dims.end());
  st.censuses.assign(cens.begin(), cens.end());
  return st;
}

CounterexampleFound::CounterexampleFound(Matrix witness, std::uint64_t weight, std::uint64_t claimed)
    : Error(Errc::counterexample_found,
            "form of weight " + std::to_string(weight) + " below claimed " + std::to_string(claimed)),
      witness_(std::move(witness)),
      weight_(weight) {}

Matrix sample_alternating(const Field& f, std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(splitmix64(splitmix64(seed) ^ index));
  const std::uint64_t q = f.q();
  // Rejection keeps the draw uniform and independent of the library's distributions.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % q;
  auto draw = [&] {
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return Elem{static_cast<std::uint8_t>(x % q)};
  };
  for (;;) {
    Matrix S(f, dim, dim);
    bool zero = true;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        const Elem a = draw();
        S(i, j) = a;
        S(j, i) = f.neg(a);
        zero = zero && a.is_zero();
      }
    if (!zero) return S;
  }
}

CertifiedResult min_distance_certified(const PolarCode& code, std::uint64_t samples, std::uint64_t seed,
                                       unsigned workers) {
  CertifiedResult res;
  res.claimed = code.params.d_claimed;
  res.upper_bound = codeword_from_form(code, canonical_min_weight_form(code)).weight;
  res.min_sampled = std::numeric_limits<std::uint64_t>::max();

  const std::size_t dim = code.space->dim();
  const std::uint64_t chunks = (samples + sample_chunk - 1) / sample_chunk;
  struct Local {
    std::uint64_t min = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> witness_index;
  };
  std::vector<Local> locals(chunks);
  parallel_blocks(chunks, chunks, workers, [&](std::size_t c, std::size_t, std::size_t) {
    Local& loc = locals[c];
    const std::uint64_t end = std::min<std::uint64_t>(samples, (c + 1) * sample_chunk);
    for (std::uint64_t i = c * sample_chunk; i < end; ++i) {
      const Matrix S = sample_alternating(code.field(), dim, seed, i);
      const std::uint64_t w = weight_impl(code, message_from_form(S), nullptr);
      ++loc.checked;
      loc.min = std::min(loc.min, w);
      if (w < res.claimed && !loc.witness_index) loc.witness_index = i;
    }
  });
  for (const Local& loc : locals) {
    res.samples_checked += loc.checked;
    res.min_sampled = std::min(res.min_sampled, loc.min);
  }
  for (const Local& loc : locals) {
    if (loc.witness_index) {
      Matrix S = sample_alternating(code.field(), dim, seed, *loc.witness_index);
      const std::uint64_t w = weight_impl(code, message_from_form(S), nullptr);
      throw CounterexampleFound(std::move(S), w, res.claimed);
    }
  }
  if (res.upper_bound < res.claimed)
    throw CounterexampleFound(canonical_min_weight_form(code).S, res.upper_bound, res.claimed);
  return res;
}

void export_code(std::ostream& out, const PolarCode& code, ExportFormat format) {
  const LineTable& lt = code.lines();
  const std::size_t K = lt.K;
  const unsigned q = code.field().q();
  if (format == ExportFormat::text) {
    out << code.params.N << ' ' << code.params.K << ' ' << q << ' ' << code.n << '\n';
    std::string row;
    for (std::size_t t = 0; t < K; ++t) {
      row.clear();
      for (std::size_t l = 0; l < lt.size(); ++l) {
        if (l) row += ' ';
        row += std::to_string(lt.plucker[l * K + t].v);
      }
      out << row << '\n';
    }
    out << "# d_claimed " << code.params.d_claimed << '\n';
  } else {
    nlohmann::ordered_json j;
    j["N"] = code.params.N;
    j["K"] = code.params.K;
    j["q"] = q;
    j["n"] = code.n;
    j["d_claimed"] = code.params.d_claimed;
    nlohmann::ordered_json g = nlohmann::ordered_json::array();
    for (std::size_t t = 0; t < K; ++t) {
      std::vector<unsigned> row(lt.size());
      for (std::size_t l = 0; l < lt.size(); ++l) row[l] = lt.plucker[l * K + t].v;
      g.push_back(row);
    }
    j["G"] = std::move(g);
    out << j.dump() << '\n';
  }
  if (!out) throw Error(Errc::io_error, "write failed");
}

ParsedCode parse_code(std::istream& in, ExportFormat format) {
  ParsedCode pc;
  auto check_row = [&](const std::vector<unsigned>& vals) {
    if (vals.size() != pc.N) throw Error(Errc::parse_error, "row length differs from N");
    Vec row(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (vals[i] >= pc.q) throw Error(Errc::parse_error, "entry out of range");
      row[i] = Elem{static_cast<std::uint8_t>(vals[i])};
    }
    pc.rows.push_back(std::move(row));
  };
  auto expected_rows = [&] { return plucker_length(static_cast<std::size_t>(2 * pc.n + 1)); };
  if (format == ExportFormat::text) {
    std::string line;
    if (!std::getline(in, line)) throw Error(Errc::parse_error, "missing header");
    std::istringstream hs(line);
    if (!(hs >> pc.N >> pc.K >> pc.q >> pc.n)) throw Error(Errc::parse_error, "bad header");
    for (std::size_t t = 0; t < expected_rows(); ++t) {
      if (!std::getline(in, line)) throw Error(Errc::parse_error, "missing generator row");
      std::istringstream rs(line);
      std::vector<unsigned> vals;
      unsigned x;
      while (rs >> x) vals.push_back(x);
      if (!rs.eof()) throw Error(Errc::parse_error, "bad entry in generator row");
      check_row(vals);
    }
    if (!std::getline(in, line) || line.rfind("# d_claimed ", 0) != 0) throw Error(Errc::parse_error, "missing trailer");
    pc.d_claimed = std::stoull(line.substr(12));
  } else {
    try {
      const nlohmann::ordered_json j = nlohmann::ordered_json::parse(in);
      pc.N = j.at("N").get<std::uint64_t>();
      pc.K = j.at("K").get<std::uint64_t>();
      pc.q = j.at("q").get<unsigned>();
      pc.n = j.at("n").get<int>();
      pc.d_claimed = j.at("d_claimed").get<std::uint64_t>();
      const auto& g = j.at("G");
      if (g.size() != expected_rows()) throw Error(Errc::parse_error, "wrong number of generator rows");
      for (const auto& row : g) check_row(row.get<std::vector<unsigned>>());
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, e.what());
    }
  }
  return pc;
}

}  // namespace polar
