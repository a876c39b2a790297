#include "nearprim/error.hpp"

namespace nearprim {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::not_a_group: return "not-a-group";
    case Errc::bad_labeling: return "bad-labeling";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::resource_limit: return "resource-limit";
    case Errc::invalid_recipe: return "invalid-recipe";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::not_type_1: return "not-type-1";
    case Errc::not_embeddable: return "not-embeddable";
    case Errc::not_isomorphic: return "not-isomorphic";
    case Errc::theorem_mismatch: return "theorem-mismatch";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

}  // namespace nearprim
