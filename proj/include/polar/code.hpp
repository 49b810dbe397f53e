#pragma once

// The line polar Grassmann code: columns are the Pluecker vectors of the totally singular lines.
// A message m in F_q^K (K = C(2n+1,2), coordinates indexed by pairs i<j in lexicographic
// order) is the same thing as the alternating form with S_ij = m_(i,j).

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polar/error.hpp"
#include "polar/forms.hpp"
#include "polar/geometry.hpp"

namespace polar {

struct CodeParams {
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  std::uint64_t d_claimed = 0;
};

struct PolarCode {
  int n = 0;
  std::shared_ptr<const PolarSpace> space;
  CodeParams params;

  const Field& field() const { return space->field(); }
  const LineTable& lines() const { return space->lines(); }
};

// q^{4n-5} - q^{3n-4}.
std::uint64_t claimed_min_distance(int n, unsigned q);
// (q^{2n-2}-1)(q^{2n}-1) / ((q^2-1)(q-1)).
std::uint64_t line_count(int n, unsigned q);

// Throws RankDeficient when the Pluecker columns do not span F_q^K.
PolarCode build_code(const QuadraticSpace& qs, unsigned workers = 1);
// On the quadric of standard_space.
PolarCode build_code(const Field& f, int n, unsigned workers = 1);

struct Codeword {
  Vec values;
  std::uint64_t weight = 0;
};

Vec message_from_form(const Matrix& S);
Matrix form_from_message(const Field& f, std::size_t dim, std::span<const Elem> m);

// The form is read on the code's own quadric.
Codeword codeword_from_form(const PolarCode& code, const AlternatingForm& af);
Codeword encode(const PolarCode& code, std::span<const Elem> m);
// Throws ZeroMessage for m = 0.
std::uint64_t weight_of_message(const PolarCode& code, std::span<const Elem> m);

// The alternating form of maximal radical (case 1, r = 2n-1, d = 1) carried to the code's quadric.
AlternatingForm canonical_min_weight_form(const PolarCode& code);

constexpr std::uint64_t default_budget = 10'000'000;

// Messages up to scalar: (q^K - 1)/(q - 1), saturating at UINT64_MAX.
std::uint64_t exact_search_cost(const PolarCode& code);

struct ExactResult {
  std::uint64_t d_min = 0;
  std::uint64_t messages = 0;
  // Normalized messages (first nonzero coordinate 1) of weight d_min, in enumeration order.
  std::vector<Vec> min_words;
};

// Meet-in-the-middle over every message up to scalar. Throws BudgetExceeded.
ExactResult min_distance_exact(const PolarCode& code, std::uint64_t budget = default_budget, unsigned workers = 1);

// Consistency statistics for the minimum-weight words found by the exact search.
struct MinWeightStats {
  std::uint64_t words = 0;
  std::vector<int> radical_dims;  // distinct values, ascending
  // Distinct (A, N0, N+, N-) censuses, ascending.
  std::vector<std::array<std::uint64_t, 4>> censuses;
};
MinWeightStats min_weight_stats(const PolarCode& code, const ExactResult& exact);

struct CertifiedResult {
  std::uint64_t upper_bound = 0;
  std::uint64_t claimed = 0;
  std::uint64_t samples_checked = 0;
  std::uint64_t min_sampled = 0;
};

class CounterexampleFound : public Error {
 public:
  CounterexampleFound(Matrix witness, std::uint64_t weight, std::uint64_t claimed);
  const Matrix& witness() const { return witness_; }
  std::uint64_t weight() const { return weight_; }

 private:
  Matrix witness_;
  std::uint64_t weight_;
};

// Random alternating matrices (uniform strict upper triangle, zero rejected). Sample i comes from
// its own generator seeded from (seed, i); chunks of sample_chunk are the unit of parallel work,
// so the result does not depend on the worker count.
constexpr std::uint64_t sample_chunk = 256;
CertifiedResult min_distance_certified(const PolarCode& code, std::uint64_t samples, std::uint64_t seed,
                                       unsigned workers = 1);

// Uniform random nonzero alternating matrix for sample index `index` of the stream `seed`.
Matrix sample_alternating(const Field& f, std::size_t dim, std::uint64_t seed, std::uint64_t index);

enum class ExportFormat { text, json };

void export_code(std::ostream& out, const PolarCode& code, ExportFormat format);

struct ParsedCode {
  std::uint64_t N = 0;
  std::uint64_t K = 0;
  unsigned q = 0;
  int n = 0;
  std::uint64_t d_claimed = 0;
  std::vector<Vec> rows;  // C(2n+1,2) rows of length N
};
ParsedCode parse_code(std::istream& in, ExportFormat format);

}  // namespace polar
