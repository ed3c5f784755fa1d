#ifndef KHOMA_TORUS_HPP
#define KHOMA_TORUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khoma/diagram.hpp"
#include "khoma/homology.hpp"

namespace khoma {

// Homology of T(2,n) in closed form: Z at (n,n) and (-n,-3n); Z at
// (n-2s, n-4s+4) for even s in [0,n]; Z at (n-2s, n-4s) for odd s in [3,n];
// Z_2 at (n-2s, n-4s+4) for odd s in [3,n].  For odd n the odd-s clause at
// s = n names the same group as (-n,-3n) and is counted once; n = 1 is the
// positive-kink base case with Z at (1, 3 +- 2) only.
HomologyTable closed_form_t2n(int n);

// Homology of the unknot with framing f: Z at (f, 3f+2) and (f, 3f-2).
HomologyTable closed_form_unknot_framed(int f);

// A diagram with one crossing kept, A-smoothed, and B-smoothed.  In the long
// exact sequence the B side enters with grades shifted by (+1,+1) and the A
// side by (-1,-1).
struct LesTriple {
    Diagram whole;
    Diagram a_smoothed;
    Diagram b_smoothed;
    int v = 0;
};

LesTriple les_triple(const Diagram& d, int v);

// Alternating free-rank sums along
//   ... -> H_{a+1,b+1}(D_B) -> H_{a,b}(D) -> H_{a-1,b-1}(D_A) ->
//          H_{a-1,b+1}(D_B) -> H_{a-2,b}(D) -> ...
// per fixed b.  Every sum vanishes when the sequence is exact.
std::map<int, std::int64_t> les_rank_sums(const HomologyTable& whole,
                                          const HomologyTable& a_side,
                                          const HomologyTable& b_side);

struct LesReport {
    bool ok = true;
    std::vector<std::string> lines;
};

LesReport les_rank_check(const Diagram& d, int v);

// Where both flanking B-side groups H_{a+1,b+1}(D_B) and H_{a-1,b+1}(D_B)
// vanish, the sequence forces H_{a,b}(D) = H_{a-1,b-1}(D_A); reports every
// bigrade violating that isomorphism.
LesReport corollary_iso_check(const Diagram& d, int v);

} // namespace khoma

#endif
