#pragma once

#include <cstddef>

namespace nearprim {

/// Size caps shared by every brute-force routine in the library.
struct Limits {
  /// Largest group order accepted by subgroup and automorphism enumeration.
  std::size_t max_group_order = 64;
  /// Largest automorphism group that automorphism_group() will materialize.
  std::size_t max_automorphisms = 2048;
  /// Largest near-ring that will be materialized.
  std::size_t max_elements = 4096;
  /// Largest near-ring for which full operation tables are built.
  std::size_t max_table_elements = 1024;
  /// Pairwise (|N|^2) re-verifications run exhaustively up to this many
  /// pairs; above it they run against a deterministic strided probe set.
  std::size_t pair_budget = std::size_t{1} << 16;
  /// Same for triple laws (|N|^3) in axiom verification.
  std::size_t triple_budget = std::size_t{1} << 24;
};

}  // namespace nearprim
