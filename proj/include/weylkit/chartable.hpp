#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylkit/classfun.hpp"

namespace weylkit {

inline constexpr int kMaxClassesForTable = 200;

struct CharacterTable {
  Ctx ctx;
  long conductor = 1;  // group exponent
  std::vector<ClassFunction> irreducibles;  // sorted by degree, then values

  int degree(int i) const;
};

// Exact table over Q(zeta_N), N = exponent(G).  Computed by the class-algebra
// eigenvector method modulo a prime p = 1 (mod N) with p > 2 sqrt(|G|) maxclass,
// then lifted to Z[zeta_N] through the eigenvalue-count discrete logarithm.
CharacterTable compute_character_table(Ctx ctx);

// Both orthogonality relations and sum of squared degrees; throws on failure.
void verify_character_table(const CharacterTable& table);

// --- cache -----------------------------------------------------------------
// One JSON file per group fingerprint under the cache directory
// ($WEYLKIT_CACHE_DIR, default $HOME/.cache/weylkit).

std::optional<std::string> cache_directory();
std::string group_fingerprint(const FiniteGroup& g);
std::string table_to_json(const CharacterTable& table);
CharacterTable table_from_json(Ctx ctx, const std::string& text);

// Cached front end: loads when a valid cache entry exists, else computes and
// stores (best effort; IO failures fall back to computing).
CharacterTable character_table(Ctx ctx, bool use_cache = true);

}  // namespace weylkit
