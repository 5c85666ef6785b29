#pragma once

#include "netloc/detector.hpp"
#include "netloc/network.hpp"

namespace netloc {

// Trilateration-protocol baseline: anchors start localizable, an agent
// becomes localizable once dimension+1 of its raw-graph neighbors are,
// iterated to the fixpoint. A sufficient condition only; the comparison
// suite checks it against the flow detector.
LocalizabilityReport tp_detect(const Network& net, int dimension = 2);

}  // namespace netloc
