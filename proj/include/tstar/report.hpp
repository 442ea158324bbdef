#pragma once

#include <optional>
#include <ostream>

#include <json.hpp>

#include "tstar/fast.hpp"
#include "tstar/inference.hpp"

namespace tstar::report {

struct PermutationSummary {
  double p_value = 1.0;
  std::uint64_t permutations = 0;
  std::uint64_t seed = 0;
};

/// Fields in fixed order: n, m_x, m_y, n_c, n_d, numerator, denominator,
/// tstar, method, [p_value, permutations, seed,] elapsed_ms.
nlohmann::ordered_json to_json(const TauStarResult& r,
                               const std::optional<PermutationSummary>& perm,
                               double elapsed_ms);

void write_text(std::ostream& out, const TauStarResult& r,
                const std::optional<PermutationSummary>& perm, double elapsed_ms);

}  // namespace tstar::report
