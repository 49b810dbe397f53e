#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "polar/code.hpp"
#include "polar/error.hpp"

using namespace polar;

TEST_CASE("code parameters") {
  struct Row {
    unsigned q;
    int n;
    std::uint64_t N, K, d;
  };
  for (const Row& r : {Row{3, 2, 40, 10, 18}, Row{3, 3, 3640, 21, 1944}, Row{5, 2, 156, 10, 100}}) {
    const PolarCode c = build_code(Field::of_order(r.q), r.n);
    CHECK(c.params.N == r.N);
    CHECK(c.params.K == r.K);
    CHECK(c.params.d_claimed == r.d);
    CHECK(line_count(r.n, r.q) == r.N);
    CHECK(claimed_min_distance(r.n, r.q) == r.d);
  }
  CHECK(claimed_min_distance(4, 3) == 170586);
}

TEST_CASE("generator matrix has full rank C(2n+1,2)") {
  const PolarCode c = build_code(Field::of_order(3), 2);
  oracle::IMat G;
  for (std::size_t l = 0; l < c.lines().size(); ++l) G.push_back(th::to_ints(c.lines().row(l)));
  // Rank of the columns, computed on the transpose by the span oracle in two halves.
  oracle::IMat T(10, oracle::IVec(G.size()));
  for (std::size_t l = 0; l < G.size(); ++l)
    for (int k = 0; k < 10; ++k) T[k][l] = G[l][k];
  CHECK(oracle::rank_by_span(T, 3) == 10);
}

TEST_CASE("form and message views give the same weight") {
  for (auto [q, n] : {std::pair{3u, 2}, std::pair{5u, 2}, std::pair{3u, 3}}) {
    const Field f = Field::of_order(q);
    const PolarCode code = build_code(f, n);
    const oracle::Lines L = oracle::singular_lines(static_cast<int>(q), n);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const AlternatingForm af = make_alternating_form(sample_alternating(f, code.space->dim(), 3, s));
      const Codeword cw = codeword_from_form(code, af);
      const Vec m = message_from_form(af.S);
      CHECK(cw.weight == weight_of_message(code, m));
      CHECK(cw.weight == encode(code, m).weight);
      CHECK(cw.weight == oracle::form_weight(L, th::to_ints(af.S), static_cast<int>(q)));
      CHECK(form_from_message(f, code.space->dim(), m) == af.S);
      // Scaling the message keeps the zero pattern.
      Vec m2 = m;
      for (Elem& x : m2) x = f.mul(x, f.from_int(2));
      CHECK(weight_of_message(code, m2) == cw.weight);
    }
  }
}

TEST_CASE("first coordinate functional") {
  const PolarCode code = build_code(Field::of_order(3), 2);
  Vec e1(10);
  e1[0] = Elem{1};
  std::uint64_t zeros = 0;
  for (std::size_t l = 0; l < code.lines().size(); ++l) zeros += code.lines().row(l)[0].is_zero();
  CHECK(weight_of_message(code, e1) == code.params.N - zeros);
  CHECK_THROWS_AS(weight_of_message(code, Vec(10)), Error);
}

TEST_CASE("weights agree with the punctured full Grassmann code") {
  const int p = 3, n = 2;
  const PolarCode code = build_code(Field::of_order(p), n);
  const auto cols = oracle::punctured_grassmann_columns(p, n);
  REQUIRE(cols.size() == code.params.N);
  for (std::uint64_t s = 0; s < 25; ++s) {
    const Vec m = message_from_form(sample_alternating(code.field(), 5, 21, s));
    CHECK(weight_of_message(code, m) == oracle::message_weight(cols, th::to_ints(m), p));
  }
}

TEST_CASE("exhaustive minimum distance at n=2, q=3 against the oracle") {
  const PolarCode code = build_code(Field::of_order(3), 2);
  const ExactResult ex = min_distance_exact(code);
  CHECK(ex.d_min == 18);
  CHECK(ex.messages == 29524);
  CHECK(oracle::min_distance(oracle::punctured_grassmann_columns(3, 2), 3) == 18);
  for (const Vec& m : ex.min_words) CHECK(weight_of_message(code, m) == 18);
  const ExactResult again = min_distance_exact(code, default_budget, 3);
  CHECK(again.min_words == ex.min_words);
}

TEST_CASE("budget guard") {
  const PolarCode code = build_code(Field::of_order(3), 3);
  CHECK(exact_search_cost(code) == (ipow(3, 21) - 1) / 2);
  CHECK_THROWS_AS(min_distance_exact(code), BudgetExceeded);
  const PolarCode small = build_code(Field::of_order(3), 2);
  CHECK_THROWS_AS(min_distance_exact(small, 1000), BudgetExceeded);
}

TEST_CASE("canonical minimum-weight form reaches the claimed distance") {
  for (auto [q, n] : {std::pair{3u, 2}, std::pair{5u, 2}, std::pair{3u, 3}, std::pair{9u, 2}}) {
    const PolarCode code = build_code(Field::of_order(q), n);
    const AlternatingForm af = canonical_min_weight_form(code);
    CHECK(af.r == 2 * n - 1);
    CHECK(codeword_from_form(code, af).weight == code.params.d_claimed);
  }
}

TEST_CASE("canonical forms on their own quadrics") {
  const Field f = Field::of_order(3);
  FormPair fp = build_canonical(CanonicalDescriptor{3, 3, 1, 2, 3, 1, 1});
  CHECK(codeword_from_form(build_code(fp.qs), fp.af).weight == 18);
  fp = build_canonical(CanonicalDescriptor{3, 3, 1, 3, 5, 0, 3});
  const PolarCode c3 = build_code(fp.qs);
  CHECK(codeword_from_form(c3, fp.af).weight > 1944);
  // Transport to the standard quadric keeps the weight.
  const PolarCode st = build_code(f, 3);
  CHECK(codeword_from_form(st, transport_form(fp.af, fp.qs, st.space->space())).weight ==
        codeword_from_form(c3, fp.af).weight);
}

TEST_CASE("sampling is seeded and independent of the worker count") {
  const Field f = Field::of_order(3);
  const Matrix a = sample_alternating(f, 7, 42, 5), b = sample_alternating(f, 7, 42, 5);
  CHECK(a == b);
  CHECK(a.is_alternating());
  CHECK_FALSE(a.is_zero());
  CHECK_FALSE(sample_alternating(f, 7, 42, 6) == a);
  CHECK_FALSE(sample_alternating(f, 7, 43, 5) == a);

  const PolarCode code = build_code(f, 2);
  const CertifiedResult r1 = min_distance_certified(code, 700, 9, 1);
  const CertifiedResult r4 = min_distance_certified(code, 700, 9, 4);
  CHECK(r1.upper_bound == 18);
  CHECK(r1.samples_checked == 700);
  CHECK(r1.min_sampled >= 18);
  CHECK(r1.min_sampled == r4.min_sampled);
  CHECK(r1.upper_bound == r4.upper_bound);
}

TEST_CASE("export round trip") {
  const PolarCode code = build_code(Field::of_order(3), 2);
  for (ExportFormat fmt : {ExportFormat::text, ExportFormat::json}) {
    std::stringstream s;
    export_code(s, code, fmt);
    const std::string text = s.str();
    if (fmt == ExportFormat::text) {
      CHECK(text.substr(0, text.find('\n')) == "40 10 3 2");
      CHECK(text.find("# d_claimed 18") != std::string::npos);
    }
    const ParsedCode pc = parse_code(s, fmt);
    CHECK(pc.N == 40);
    CHECK(pc.K == 10);
    CHECK(pc.q == 3);
    CHECK(pc.n == 2);
    CHECK(pc.d_claimed == 18);
    REQUIRE(pc.rows.size() == 10);
    for (std::size_t t = 0; t < 10; ++t)
      for (std::size_t l = 0; l < 40; ++l) CHECK(pc.rows[t][l] == code.lines().row(l)[t]);
  }
  std::stringstream bad("40 10 3\n");
  CHECK_THROWS_AS(parse_code(bad, ExportFormat::text), Error);
}
