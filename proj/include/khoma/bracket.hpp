#ifndef KHOMA_BRACKET_HPP
#define KHOMA_BRACKET_HPP

#include "khoma/diagram.hpp"
#include "khoma/laurent.hpp"

namespace khoma {

// State weights of an enhanced state: sigma = #A - #B over markers,
// tau = #(+) - #(-) over circles.  The bigrade is (sigma, sigma + 2 tau).
struct StateWeights {
    int sigma = 0;
    int tau = 0;
};

// <D> = sum over states of A^sigma (-A^2-A^-2)^(|D_s|-1).  Normalized so the
// bare circle has bracket 1; rejects the empty diagram.
Laurent bracket_reduced(const Diagram& d);

// [D] = sum over states of A^sigma (-A^2-A^-2)^|D_s|; [empty] = 1.
Laurent bracket_unreduced(const Diagram& d);

// [D] recomputed from enhanced states: sum of (-1)^|D_s| A^(sigma + 2 tau).
Laurent bracket_enhanced(const Diagram& d);

// Independent evaluator: recursive skein expansion
//   <crossing> = A <A-smoothing> + A^-1 <B-smoothing>
// with <circle> = 1 and <D u circle> = (-A^2-A^-2) <D>.  Exponential in the
// crossing number; intended for small diagrams.
Laurent bracket_skein_oracle(const Diagram& d);

} // namespace khoma

#endif
