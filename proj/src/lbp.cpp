#include "lbp/lbp.hpp"

#include <string>

namespace lbp {

std::string_view to_string(MomentRoute r) {
  switch (r) {
    case MomentRoute::kMatrixInverse: return "matrix_inverse";
    case MomentRoute::kCatalanSum: return "catalan_sum";
    case MomentRoute::kLagrange: return "lagrange";
    case MomentRoute::kShiftedTFraction: return "shifted_tfraction";
    case MomentRoute::kGfExpansion: return "gf_expansion";
  }
  return "unknown";
}

MomentRoute parse_moment_route(std::string_view name) {
  for (auto r : kAllMomentRoutes)
    if (to_string(r) == name) return r;
  throw UsageError("unknown moment route '" + std::string(name) + "'");
}

}  // namespace lbp
