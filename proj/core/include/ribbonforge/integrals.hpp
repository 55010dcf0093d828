#pragma once

#include <vector>

#include "ribbonforge/hopf.hpp"
#include "ribbonforge/verify.hpp"

namespace ribbonforge {

/// Basis (reduced echelon form) of {t : h t = eps(h) t}. Full depth imposes the
/// equation for every basis h, generator depth for the generating set only
/// (equivalent, since both sides are multiplicative in h).
std::vector<SparseVec> left_integrals(const HopfAlgebra& h, Depth depth = Depth::Full);
/// Basis of {t : t h = eps(h) t}.
std::vector<SparseVec> right_integrals(const HopfAlgebra& h, Depth depth = Depth::Full);

/// The spanning vector of a one-dimensional integral space; any other
/// dimension is a VerificationFailure.
SparseVec left_integral(const HopfAlgebra& h, Depth depth = Depth::Full);
SparseVec right_integral(const HopfAlgebra& h, Depth depth = Depth::Full);

/// Right integral T of H* in dual-basis coordinates, solved directly from
/// Delta_H: sum T(h_1) h_2 = T(h) 1 for all basis h. Avoids building H*.
SparseVec dual_right_integral(const HopfAlgebra& h);

/// alpha~ in H*: t h = alpha~(h) t for all basis h. Returns dual-basis
/// coordinates; checks proportionality and that alpha~ is an algebra character
/// (on all basis pairs at full depth, generator x basis otherwise).
SparseVec distinguished_grouplike_dual(const HopfAlgebra& h, const SparseVec& left_integral,
                                       Depth depth = Depth::Full);

/// g~ in H: p T = p(g~) T for all p in H*, i.e. sum h_1 T(h_2) = T(h) g~ for
/// every basis h. Checks proportionality and that g~ is grouplike.
SparseVec distinguished_grouplike(const HopfAlgebra& h, const SparseVec& dual_right_integral);

}  // namespace ribbonforge
