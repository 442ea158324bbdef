#include "tstar/report.hpp"

#include <iomanip>

namespace tstar::report {

nlohmann::ordered_json to_json(const TauStarResult& r,
                               const std::optional<PermutationSummary>& perm,
                               double elapsed_ms) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["m_x"] = r.m_x;
  j["m_y"] = r.m_y;
  j["n_c"] = r.n_c;
  j["n_d"] = r.n_d;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["tstar"] = r.tstar;
  j["method"] = method_label(r.method);
  if (perm) {
    j["p_value"] = perm->p_value;
    j["permutations"] = perm->permutations;
    j["seed"] = perm->seed;
  }
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

void write_text(std::ostream& out, const TauStarResult& r,
                const std::optional<PermutationSummary>& perm, double elapsed_ms) {
  out << "method       " << method_label(r.method) << '\n'
      << "n            " << r.n << '\n'
      << "m_x, m_y     " << r.m_x << ", " << r.m_y << '\n'
      << "concordant   " << r.n_c << '\n'
      << "discordant   " << r.n_d << '\n'
      << "t*           " << r.numerator << " / " << r.denominator << " = "
      << std::setprecision(17) << r.tstar << '\n' << std::setprecision(6);
  if (perm) {
    out << "p-value      " << perm->p_value << " (" << perm->permutations
        << " permutations, seed " << perm->seed << ")\n";
  }
  out << "elapsed      " << elapsed_ms << " ms\n";
}

}  // namespace tstar::report
