#ifndef KHOMA_SNF_HPP
#define KHOMA_SNF_HPP

#include <cstdint>
#include <vector>

#include "khoma/checked.hpp"

namespace khoma {

struct Triplet {
    int row = 0;
    int col = 0;
    std::int64_t value = 0;
};

// Exact integer matrix in triplet form (one entry per position).
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Triplet> entries;

    static SparseIntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& dense);
};

// Invariant factors d1 | d2 | ... | dr of a matrix; r is the rank.
struct SmithResult {
    std::vector<std::int64_t> divisors;

    int rank() const { return static_cast<int>(divisors.size()); }
    std::vector<std::int64_t> torsion() const;
};

// Smith normal form structure of an integer matrix.  Entries of absolute
// value one are eliminated sparsely first; the remaining core is diagonalized
// densely with minimal-absolute-value pivoting.  All arithmetic is checked
// 64-bit: overflow raises instead of wrapping.
SmithResult smith_normal_form(const SparseIntMatrix& m);

} // namespace khoma

#endif
