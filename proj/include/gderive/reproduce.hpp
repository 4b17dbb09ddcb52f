#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gderive/io.hpp"

namespace gderive {

struct ReproRow {
  std::string key;
  std::string title;
  bool passed = false;
  std::string detail;
};

// Keys in run order.
const std::vector<std::string>& reproduce_keys();

// Runs every golden check, or only the one named by `only` (UnknownName).
std::vector<ReproRow> reproduce(const std::optional<std::string>& only = std::nullopt);
ReproRow reproduce_row(const std::string& key);

Json to_json(const std::vector<ReproRow>& rows);
std::string rows_text(const std::vector<ReproRow>& rows);

// Shared fixtures.
Matrix heisenberg_sigma();     // B = [[1,-1],[0,1]], B' = 0
Matrix solvable_sigma();       // a sample of the lower-triangular automorphism family
std::vector<Matrix> sl2_family_samples();  // exp(D_b), exp(D_c), exp(D_ab) at small parameters

// Random ideals in x, y, z, w for self-checks; deterministic for a given seed.
std::vector<Ideal> random_ideals(std::size_t count, unsigned long seed);

}  // namespace gderive
