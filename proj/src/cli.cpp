#include "polar/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "polar/code.hpp"
#include "polar/counting.hpp"
#include "polar/error.hpp"
#include "polar/forms.hpp"
#include "polar/geometry.hpp"
#include "polar/verify.hpp"

namespace polar {

namespace {

using json = nlohmann::ordered_json;

int exit_for(Errc c) {
  switch (c) {
    case Errc::io_error:
      return exit_io;
    case Errc::counterexample_found:
    case Errc::table_mismatch:
    case Errc::type_not_in_table:
    case Errc::rank_deficient:
    case Errc::non_integer_result:
      return exit_mismatch;
    default:
      return exit_input;
  }
}

struct Common {
  unsigned q = 0;
  std::optional<unsigned> e;
  int n = 0;
  unsigned workers = 1;
  std::string format = "text";
  std::string output;
};

Field make_field(const Common& c) {
  if (c.q == 0) throw Error(Errc::inadmissible_params, "--q is required");
  return c.e ? Field::make(c.q, *c.e) : Field::of_order(c.q);
}

void require_n(const Common& c) {
  if (c.n < 2) throw Error(Errc::inadmissible_params, "n must be at least 2");
}

// Writes the whole payload or throws IoError.
void write_file(const std::string& path, const std::string& payload) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::io_error, "cannot open '" + path + "' for writing");
  f << payload;
  f.flush();
  if (!f) throw Error(Errc::io_error, "write to '" + path + "' failed");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::io_error, "cannot open '" + path + "'");
  return f;
}

std::uint64_t effective_budget(std::uint64_t flag) {
  const char* env = std::getenv("POLAR_BUDGET");
  if (!env || !*env) return flag;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || env[0] == '-')
    throw Error(Errc::parse_error, std::string("POLAR_BUDGET is not a non-negative integer: ") + env);
  return v;
}

ExportFormat parse_format(const std::string& s) { return s == "json" ? ExportFormat::json : ExportFormat::text; }

void emit(const Common& c, std::ostream& out, const std::string& payload) {
  if (c.output.empty())
    out << payload;
  else
    write_file(c.output, payload);
}

int cmd_build(const Common& c, std::ostream& out) {
  const Field f = make_field(c);
  require_n(c);
  const PolarCode code = build_code(f, c.n, c.workers);
  if (!c.output.empty()) {
    std::ostringstream s;
    export_code(s, code, parse_format(c.format));
    write_file(c.output, s.str());
  }
  out << code.params.N << ' ' << code.params.K << ' ' << code.params.d_claimed << '\n';
  return exit_ok;
}

struct VerifyArgs {
  std::string check = "all";
  std::uint64_t samples = 100;
  std::uint64_t seed = 1;
  std::uint64_t budget = default_budget;
};

int cmd_verify(const Common& c, const VerifyArgs& v, std::ostream& out) {
  VerifyConfig cfg{make_field(c), c.n, v.samples, v.seed, effective_budget(v.budget), c.workers};
  require_n(c);
  const std::vector<CheckReport> reps = run_checks(v.check, cfg);
  const json rep = report_json(reps, cfg);
  emit(c, out, rep.dump(2) + "\n");
  if (rep["status"] == "fail") return exit_mismatch;
  return exit_ok;
}

struct WeightArgs {
  std::string form;
  std::string gram;
  std::optional<int> case_tag;
  std::optional<int> r;
  std::optional<int> d;
};

int cmd_weight(const Common& c, const WeightArgs& w, std::ostream& out) {
  std::ifstream in = open_input(w.form);
  Matrix S = c.q ? read_matrix(in, make_field(c)) : read_matrix(in);
  const Field f = S.field();
  if (S.rows() % 2 == 0 || S.rows() < 5 || S.rows() != S.cols())
    throw Error(Errc::dimension_mismatch, "form must be (2n+1)x(2n+1) with n >= 2");
  const int n = static_cast<int>(S.rows() / 2);
  if (c.n != 0 && c.n != n) throw Error(Errc::dimension_mismatch, "form size does not match --n");
  const AlternatingForm af = make_alternating_form(std::move(S));

  std::optional<QuadraticSpace> qs;
  if (!w.gram.empty()) {
    std::ifstream g = open_input(w.gram);
    Matrix M = read_matrix(g, f);
    if (M.rows() != af.S.rows()) throw Error(Errc::dimension_mismatch, "gram and form sizes differ");
    qs = make_quadratic_space(std::move(M));
  } else if (w.case_tag || w.r || w.d) {
    if (!(w.case_tag && w.r && w.d)) throw Error(Errc::inadmissible_params, "--case, --r and --d go together");
    qs = build_M(f, n, *w.r, *w.d, *w.case_tag);
  } else {
    qs = standard_space(f, n);
  }
  const PolarCode code = build_code(*qs, c.workers);
  const Codeword cw = codeword_from_form(code, af);
  const ClassCensus cen = point_census(*qs, af);
  if (c.format == "json") {
    json j;
    j["weight"] = cw.weight;
    j["r"] = af.r;
    j["N"] = code.params.N;
    j["census"] = {{"A_R", cen.A_R}, {"A_V", cen.A_V}, {"A", cen.A},         {"N0", cen.N0},
                   {"Nplus", cen.Nplus}, {"Nminus", cen.Nminus}, {"f", cen.f}};
    emit(c, out, j.dump(2) + "\n");
  } else {
    std::ostringstream s;
    s << "weight " << cw.weight << " r " << af.r << '\n';
    s << "census A_R " << cen.A_R << " A_V " << cen.A_V << " A " << cen.A << " N0 " << cen.N0 << " Nplus "
      << cen.Nplus << " Nminus " << cen.Nminus << " f " << cen.f << '\n';
    emit(c, out, s.str());
  }
  return exit_ok;
}

struct SearchArgs {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
};

int cmd_search(const Common& c, const SearchArgs& a, std::ostream& out, std::ostream& err) {
  const Field f = make_field(c);
  require_n(c);
  const PolarCode code = build_code(f, c.n, c.workers);
  try {
    const CertifiedResult r = min_distance_certified(code, a.samples, a.seed, c.workers);
    if (c.format == "json") {
      json j;
      j["n"] = c.n;
      j["q"] = f.q();
      j["seed"] = a.seed;
      j["upper_bound"] = r.upper_bound;
      j["claimed"] = r.claimed;
      j["samples_checked"] = r.samples_checked;
      j["min_sampled"] = r.min_sampled;
      emit(c, out, j.dump(2) + "\n");
    } else {
      std::ostringstream s;
      s << "upper_bound " << r.upper_bound << " claimed " << r.claimed << " samples_checked " << r.samples_checked
        << " min_sampled " << r.min_sampled << '\n';
      emit(c, out, s.str());
    }
    return exit_ok;
  } catch (const CounterexampleFound& e) {
    const std::string path = c.output.empty() ? "counterexample.txt" : c.output;
    std::ostringstream s;
    write_matrix(s, e.witness());
    write_file(path, s.str());
    err << e.what() << "; witness written to " << path << '\n';
    return exit_mismatch;
  }
}

struct CanonicalArgs {
  int case_tag = 1;
  int r = 0;
  int d = 0;
  unsigned alpha = 1;
  bool u_minor = false;
};

int cmd_canonical(const Common& c, const CanonicalArgs& a, std::ostream& out) {
  const Field f = make_field(c);
  require_n(c);
  CanonicalDescriptor desc;
  desc.q = f.q();
  desc.p = f.p();
  desc.e = f.e();
  desc.n = c.n;
  desc.r = a.r;
  desc.d = a.d;
  desc.case_tag = a.case_tag;
  desc.alpha = a.alpha;
  desc.u_minor = a.u_minor;
  const FormPair fp = build_canonical(desc);
  if (!c.output.empty()) {
    std::ostringstream m, s;
    write_matrix(m, fp.qs.M);
    write_matrix(s, fp.af.S);
    write_file(c.output + ".gram.txt", m.str());
    write_file(c.output + ".form.txt", s.str());
    write_file(c.output + ".json", descriptor_to_json(desc).dump(2) + "\n");
  }
  out << descriptor_to_json(desc).dump(2) << '\n';
  return exit_ok;
}

int cmd_lines(const Common& c, std::ostream& out) {
  const Field f = make_field(c);
  require_n(c);
  const PolarSpace ps(standard_space(f, c.n), c.workers);
  std::ostringstream s;
  write_lines(s, ps);
  emit(c, out, s.str());
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line polar Grassmann codes over odd finite fields"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool need_n) {
    sub->add_option("--q", common.q, "field order (the prime when --e is given)");
    sub->add_option("--e", common.e, "extension degree; --q is then the characteristic");
    auto* n = sub->add_option("--n", common.n, "rank of the quadric; ambient dimension is 2n+1");
    if (need_n) n->required();
    sub->add_option("--workers", common.workers, "worker threads (0 = hardware); never changes output")
        ->capture_default_str();
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("-o,--output", common.output, "output path");
  };

  auto* build = app.add_subcommand("build", "build the code and export its generator matrix");
  add_common(build, true);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run named verification checks, JSON report");
  add_common(verify, true);
  std::vector<std::string> names = check_names();
  names.push_back("all");
  verify->add_option("--check", va.check, "check name or 'all'")->check(CLI::IsMember(names))->capture_default_str();
  verify->add_option("--samples", va.samples, "random forms for sampled checks")->capture_default_str();
  verify->add_option("--seed", va.seed, "seed of the random form stream")->capture_default_str();
  verify->add_option("--budget", va.budget, "exact search budget (POLAR_BUDGET overrides)")->capture_default_str();

  WeightArgs wa;
  auto* weight = app.add_subcommand("weight", "weight of the codeword of an alternating form");
  add_common(weight, false);
  weight->add_option("--form", wa.form, "alternating form file")->required();
  weight->add_option("--gram", wa.gram, "Gram matrix file of the quadric");
  weight->add_option("--case", wa.case_tag, "canonical quadric case");
  weight->add_option("--r", wa.r, "canonical radical dimension");
  weight->add_option("--d", wa.d, "canonical d");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "seeded search for low-weight codewords");
  add_common(search, true);
  search->add_option("--samples", sa.samples, "random forms")->capture_default_str();
  search->add_option("--seed", sa.seed, "seed")->capture_default_str();

  CanonicalArgs ca;
  auto* canonical = app.add_subcommand("canonical", "canonical (M, S) pair; -o PREFIX writes both matrices");
  add_common(canonical, true);
  canonical->add_option("--case", ca.case_tag, "case 1..4")->check(CLI::Range(1, 4))->capture_default_str();
  canonical->add_option("--r", ca.r, "radical dimension")->required();
  canonical->add_option("--d", ca.d, "d")->required();
  canonical->add_option("--alpha", ca.alpha, "case 4 alpha")->capture_default_str();
  canonical->add_flag("--u-minor", ca.u_minor, "case 4: identity minor in U");

  auto* lines = app.add_subcommand("lines", "list the totally singular lines");
  add_common(lines, true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*build) return cmd_build(common, out);
    if (*verify) return cmd_verify(common, va, out);
    if (*weight) return cmd_weight(common, wa, out);
    if (*search) return cmd_search(common, sa, out, err);
    if (*canonical) return cmd_canonical(common, ca, out);
    if (*lines) return cmd_lines(common, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace polar
