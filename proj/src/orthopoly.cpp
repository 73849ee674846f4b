#include "lbp/orthopoly.hpp"

namespace lbp {

std::string_view to_string(OrthoKind k) {
  switch (k) {
    case OrthoKind::kQ: return "Q";
    case OrthoKind::kQTilde: return "Q_tilde";
    case OrthoKind::kQHat: return "Q_hat";
  }
  return "unknown";
}

OrthoKind parse_ortho_kind(std::string_view name) {
  for (auto k : {OrthoKind::kQ, OrthoKind::kQTilde, OrthoKind::kQHat})
    if (to_string(k) == name) return k;
  throw UsageError("unknown orthogonal family '" + std::string(name) + "' (expected Q, Q_tilde or Q_hat)");
}

}  // namespace lbp
