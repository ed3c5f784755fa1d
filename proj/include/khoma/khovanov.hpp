#ifndef KHOMA_KHOVANOV_HPP
#define KHOMA_KHOVANOV_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "khoma/diagram.hpp"

namespace khoma {

struct Bigrade {
    int a = 0;
    int b = 0;
    auto operator<=>(const Bigrade&) const = default;
};

// Kauffman state plus a sign per circle of its resolution.  Signs are packed
// over the canonical circle order (circles sorted by smallest slot, then the
// diagram's free circles); a set bit is a '-' circle.  The bigrade is cached:
// a = sigma, b = sigma + 2 tau.
struct EnhancedState {
    std::uint32_t markers = 0;
    std::uint32_t signs = 0;
    std::int16_t a = 0;
    std::int16_t b = 0;

    bool operator==(const EnhancedState&) const = default;
};

// Basis of the chain group at one bigrade, in canonical order: lexicographic
// on the marker vector, then on the sign vector (index 0 first, A/+ low).
struct ChainBasis {
    Bigrade bigrade;
    std::vector<EnhancedState> elements;

    int dim() const { return static_cast<int>(elements.size()); }
    // Position of s in the canonical order, or -1.
    int index_of(const EnhancedState& s, int crossings) const;
};

struct MatrixEntry {
    int row = 0;
    int col = 0;
    std::int8_t value = 0; // always +1 or -1 for a differential
};

// Matrix of the differential from the basis at (a,b) to the basis at (a-2,b):
// entry(S', S) = (-1)^{t(S,S')} (S,S').
struct DifferentialMatrix {
    Bigrade source;
    Bigrade target;
    int rows = 0; // dim of target basis
    int cols = 0; // dim of source basis
    std::vector<MatrixEntry> entries;
};

// The enhanced-state chain complex of a diagram.  Resolutions of all 2^n
// states are computed once; bases are grouped by bigrade in canonical order.
class Complex {
  public:
    explicit Complex(const Diagram& d);

    const Diagram& diagram() const { return d_; }
    const std::map<Bigrade, ChainBasis>& bases() const { return bases_; }
    const Resolution& resolution(std::uint32_t markers) const {
        return resolutions_[markers];
    }

    int dim(Bigrade g) const;
    std::size_t total_states() const;

    DifferentialMatrix differential(int a, int b) const;

    // Per b-degree, the differentials along descending a (step 2), covering
    // every bigrade with a nonempty basis.
    std::map<int, std::vector<DifferentialMatrix>> full_complex() const;

  private:
    Diagram d_;
    std::vector<Resolution> resolutions_;
    std::map<Bigrade, ChainBasis> bases_;
};

// Convenience wrappers matching the operation names used throughout.
std::map<Bigrade, ChainBasis> enumerate_bases(const Diagram& d);
DifferentialMatrix differential(const Diagram& d, int a, int b);
std::map<int, std::vector<DifferentialMatrix>> full_complex(const Diagram& d);

// t(S,S') for the A->B flip at crossing v: the number of B-markers of S at
// crossings after v in the diagram order.  Requires marker A at v.
int sign_exponent(const EnhancedState& s, int v);

// Incidence number (S,S') in {0,1}: the states differ at exactly one crossing
// (A in S, B in S'), tau rises by one, circles away from that crossing keep
// their signs, and the circles at it transform by the merge/split rule.
int incidence(const EnhancedState& s, const EnhancedState& t, const Complex& cx);

// True when every composition of consecutive differentials vanishes.
bool differentials_compose_to_zero(const Complex& cx);

} // namespace khoma

#endif
