#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polar {

enum class Errc {
  even_characteristic,
  not_prime,
  field_too_large,
  division_by_zero,
  dimension_mismatch,
  singular_matrix,
  inadmissible_params,
  radical_mismatch,
  zero_vector,
  singular_point,
  not_on_quadric,
  type_not_in_table,
  rank_deficient,
  zero_message,
  budget_exceeded,
  counterexample_found,
  non_integer_result,
  case4_no_closed_form,
  table_mismatch,
  parse_error,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown by exhaustive scans whose work estimate exceeds the caller's budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error(Errc::budget_exceeded, "scan needs " + std::to_string(required) +
                                         " evaluations, budget is " + std::to_string(budget) +
                                         "; use the certified search instead"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace polar
