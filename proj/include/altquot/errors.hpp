#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace altquot {

enum class Errc {
  invalid_character,
  generator_out_of_range,
  already_covering,
  plan_mismatch,
  rank_too_small,
  verification_exhausted,
  not_a_covering,
  degree_mismatch,
  not_transitive,
  gamma_in_subgroup,
  finite_index_subgroup,
  empty_gamma_list,
};

const char* errc_name(Errc code);

// Every failure the library reports on bad input or unmet preconditions.
// `index()` carries the offending position when one exists (a byte offset
// for parse errors, the element index for gamma_in_subgroup).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  Errc code_;
  std::optional<std::size_t> index_;
};

}  // namespace altquot
