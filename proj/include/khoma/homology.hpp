#ifndef KHOMA_HOMOLOGY_HPP
#define KHOMA_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "khoma/khovanov.hpp"
#include "khoma/laurent.hpp"
#include "khoma/snf.hpp"

namespace khoma {

// Finitely generated abelian group: free rank plus invariant factors
// (ascending divisibility chain, every factor >= 2).
struct AbelianGroup {
    std::int64_t free_rank = 0;
    std::vector<std::int64_t> torsion;

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianGroup&) const = default;
};

// Bigraded homology; only nontrivial groups are stored, so table equality is
// equality of the nontrivial entries.
class HomologyTable {
  public:
    void set(Bigrade g, AbelianGroup group);
    // Direct-sum accumulation at a bigrade.
    void add(Bigrade g, const AbelianGroup& group);

    const AbelianGroup& at(Bigrade g) const;
    const std::map<Bigrade, AbelianGroup>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    HomologyTable shifted(int da, int db) const;

    bool operator==(const HomologyTable&) const = default;

  private:
    std::map<Bigrade, AbelianGroup> entries_;
};

// ker(d_out) / im(d_in) for one bigrade: the free rank is
// nullity(d_out) - rank(d_in) and the torsion comes from the Smith divisors
// of d_in.  Requires matching bases and d_out after d_in composing to zero.
AbelianGroup homology_group(const DifferentialMatrix& d_out, const DifferentialMatrix& d_in);

// Full framed Khovanov homology H_{a,b} = ker d_{a,b} / im d_{a+2,b}.
HomologyTable homology_table(const Diagram& d);
HomologyTable homology_table(const Complex& cx);

SparseIntMatrix to_sparse(const DifferentialMatrix& m);

// Graded Euler characteristic of a table: sum over entries of
// (-1)^((b-a)/2) * free_rank * A^b.  Torsion contributes nothing; the result
// equals the unreduced bracket of the underlying diagram.
Laurent euler_characteristic(const HomologyTable& t);

struct R1ShiftReport {
    bool ok = true;
    std::vector<std::string> mismatches;
};

// Checks that adding a kink of the given sign on each strand in turn shifts
// the homology table by (+1,+3) (positive) or (-1,-3) (negative).
R1ShiftReport verify_r1_shift(const Diagram& d, int sign);

} // namespace khoma

#endif
