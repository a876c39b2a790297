#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nearprim {

enum class Errc {
  invalid_order,
  not_a_group,
  bad_labeling,
  invalid_argument,
  resource_limit,
  invalid_recipe,
  internal_inconsistency,
  not_type_1,
  not_embeddable,
  not_isomorphic,
  theorem_mismatch,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message holds the concrete witness when there is one.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace nearprim
