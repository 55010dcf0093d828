#pragma once

#include "ribbonforge/hopf.hpp"

namespace ribbonforge {

/// H* on the dual basis: product = transpose of Delta_H, coproduct = transpose
/// of m_H, unit = eps_H, counit = evaluation at 1_H, antipode = transpose of S.
/// Labels are "(label)*"; the result pairs with H.
HopfPtr dual_hopf(const HopfPtr& h, std::vector<NamedElement> generators = {});

/// Same algebra, flipped coproduct, antipode S^-1 (and inverse S).
HopfPtr coopposite(const HopfPtr& h);

}  // namespace ribbonforge
