#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "polar/cli.hpp"
#include "polar/forms.hpp"
#include "polar/matrix.hpp"
#include "json.hpp"

using namespace polar;

namespace {

struct Result {
  int rc;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int rc = run(args, o, e);
  return {rc, o.str(), e.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("build prints N K d and writes the generator matrix") {
  Result r = call({"build", "--q", "3", "--n", "2", "-o", "cli_code.txt"});
  CHECK(r.rc == 0);
  CHECK(r.out == "40 10 18\n");
  const std::string text = slurp("cli_code.txt");
  CHECK(text.substr(0, text.find('\n')) == "40 10 3 2");
  r = call({"build", "--q", "3", "--n", "3"});
  CHECK(r.out == "3640 21 1944\n");
  r = call({"build", "--q", "3", "--n", "2", "--format", "json", "-o", "cli_code.json"});
  CHECK(nlohmann::json::parse(slurp("cli_code.json"))["d_claimed"] == 18);
}

TEST_CASE("even q and bad parameters exit 2") {
  Result r = call({"build", "--q", "4", "--n", "2"});
  CHECK(r.rc == 2);
  CHECK(r.err.find("q must be odd") != std::string::npos);
  CHECK(call({"build", "--q", "6", "--n", "2"}).rc == 2);
  CHECK(call({"build", "--q", "3", "--n", "1"}).rc == 2);
  CHECK(call({"build", "--n", "2"}).rc == 2);
  CHECK(call({"frobnicate"}).rc == 2);
  CHECK(call({"verify", "--q", "3", "--n", "2", "--check", "nope"}).rc == 2);
  CHECK(call({"canonical", "--q", "3", "--n", "3", "--case", "1", "--r", "5", "--d", "3"}).rc == 2);
}

TEST_CASE("prime plus extension degree") {
  CHECK(call({"build", "--q", "3", "--e", "2", "--n", "2"}).out == call({"build", "--q", "9", "--n", "2"}).out);
}

TEST_CASE("unwritable output exits 3") {
  CHECK(call({"build", "--q", "3", "--n", "2", "-o", "/nonexistent-dir/x.txt"}).rc == 3);
  CHECK(call({"weight", "--form", "/nonexistent-dir/form.txt"}).rc == 3);
}

TEST_CASE("verify exit statuses and report") {
  Result r = call({"verify", "--q", "3", "--n", "3", "--check", "prop-c1p1"});
  CHECK(r.rc == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "pass");
  r = call({"verify", "--q", "3", "--n", "2", "--check", "min-distance-exact"});
  CHECK(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["checks"][0]["observed"]["d_min"] == 18);
  r = call({"verify", "--q", "3", "--n", "3", "--check", "lemma-ldel", "--samples", "100", "--seed", "7"});
  CHECK(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["checks"][0]["observed"]["identity_holds"] ==
        nlohmann::json::parse(r.out)["checks"][0]["expected"]["identity_holds"]);
}

TEST_CASE("POLAR_BUDGET overrides --budget") {
  setenv("POLAR_BUDGET", "100", 1);
  CHECK(call({"verify", "--q", "3", "--n", "2", "--check", "min-distance-exact"}).rc == 2);
  setenv("POLAR_BUDGET", "junk", 1);
  CHECK(call({"verify", "--q", "3", "--n", "2", "--check", "min-distance-exact"}).rc == 2);
  unsetenv("POLAR_BUDGET");
  CHECK(call({"verify", "--q", "3", "--n", "2", "--check", "min-distance-exact", "--budget", "100"}).rc == 2);
}

TEST_CASE("canonical and weight") {
  Result r = call({"canonical", "--q", "3", "--n", "3", "--case", "1", "--r", "5", "--d", "1", "-o", "cli_c1"});
  CHECK(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["r"] == 5);
  r = call({"weight", "--form", "cli_c1.form.txt", "--case", "1", "--r", "5", "--d", "1"});
  CHECK(r.rc == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) == "weight 1944 r 5");
  r = call({"weight", "--form", "cli_c1.form.txt", "--gram", "cli_c1.gram.txt"});
  CHECK(r.out.substr(0, r.out.find('\n')) == "weight 1944 r 5");

  CHECK(call({"canonical", "--q", "3", "--n", "3", "--case", "3", "--r", "5", "--d", "0", "-o", "cli_c3"}).rc == 0);
  r = call({"weight", "--form", "cli_c3.form.txt", "--gram", "cli_c3.gram.txt", "--format", "json"});
  CHECK(r.rc == 0);
  CHECK(nlohmann::json::parse(r.out)["weight"].get<std::uint64_t>() > 1944);
}

TEST_CASE("weight rejects symmetric and malformed forms") {
  {
    std::ofstream f("cli_sym.txt");
    write_matrix(f, Matrix::identity(Field::of_order(3), 5));
  }
  CHECK(call({"weight", "--form", "cli_sym.txt"}).rc == 2);
  {
    std::ofstream f("cli_bad.txt");
    f << "5 5 3\n0 1 2\n";
  }
  CHECK(call({"weight", "--form", "cli_bad.txt"}).rc == 2);
  {
    std::ofstream f("cli_even.txt");
    write_matrix(f, Matrix(Field::of_order(3), 4, 4));
  }
  CHECK(call({"weight", "--form", "cli_even.txt"}).rc == 2);
}

TEST_CASE("search is deterministic across worker counts") {
  const Result a = call({"search", "--q", "3", "--n", "2", "--samples", "1000", "--seed", "1"});
  const Result b = call({"search", "--q", "3", "--n", "2", "--samples", "1000", "--seed", "1", "--workers", "3"});
  CHECK(a.rc == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("upper_bound 18 ", 0) == 0);
  const Result c = call({"search", "--q", "5", "--n", "2", "--samples", "1000", "--seed", "1", "--format", "json"});
  CHECK(nlohmann::json::parse(c.out)["upper_bound"] == 100);
}

TEST_CASE("lines export") {
  const Result a = call({"lines", "--q", "3", "--n", "2"});
  CHECK(a.rc == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 40);
}
