#pragma once

#include "sullivan/morphisms.hpp"

#include <utility>
#include <vector>

namespace sullivan {

// Incremental minimal model of a Sullivan algebra together with a full
// algebra contraction onto it. Throws InvalidInput if the algebra fails
// validate_sullivan and InternalError if a final invariant does not hold.
FullContraction compute_minimal_model(const DGAlgebra& dga);

// (m_i, d m_i) for every recorded pair.
std::vector<std::pair<GenIndex, Element>> contractible_summand(const FullContraction& c);

}  // namespace sullivan
