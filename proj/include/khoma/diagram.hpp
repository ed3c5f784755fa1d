#ifndef KHOMA_DIAGRAM_HPP
#define KHOMA_DIAGRAM_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "khoma/checked.hpp"

namespace khoma {

// Strand label in a planar-diagram code.  Labels are arbitrary non-negative
// integers; every label must occur exactly twice in a closed diagram.
using EdgeId = int;

enum class Marker : std::uint8_t { A = 0, B = 1 };

inline Marker opposite(Marker m) { return m == Marker::A ? Marker::B : Marker::A; }

// One 4-valent crossing.  Slots hold the incident strand labels in
// counterclockwise cyclic order; the under-strand is the pair (e0, e2) and
// the over-strand is (e1, e3).  Rotating by two slots represents the same
// crossing.
struct Crossing {
    std::array<EdgeId, 4> e;

    bool operator==(const Crossing&) const = default;
};

// Assignment of a marker to every crossing, packed with crossing i at bit i
// (set bit = marker B).  Diagrams processed state-by-state are capped at
// kMaxCrossings crossings.
struct KauffmanState {
    std::uint32_t bits = 0;
    int size = 0;

    Marker marker(int v) const { return (bits >> v) & 1u ? Marker::B : Marker::A; }
    int b_count() const { return __builtin_popcount(bits); }
    int sigma() const { return size - 2 * b_count(); } // #A - #B

    bool operator==(const KauffmanState&) const = default;
};

inline constexpr int kMaxCrossings = 25;

class Diagram {
  public:
    Diagram() = default;
    Diagram(std::vector<Crossing> crossings, int free_circles);

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const Crossing& crossing(int v) const { return crossings_.at(static_cast<size_t>(v)); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    int free_circles() const { return free_circles_; }

    bool empty() const { return crossings_.empty() && free_circles_ == 0; }

    // Distinct strand labels, ascending.
    std::vector<EdgeId> edges() const;

    // Slot s of crossing v has global id 4*v + s.  partner(slot) is the other
    // slot carrying the same strand label.
    int slot_count() const { return 4 * crossing_count(); }
    const std::vector<int>& edge_partner() const { return edge_partner_; }

    // Number of link components (closed strands plus free circles).
    int component_count() const;

    bool operator==(const Diagram&) const = default;

  private:
    std::vector<Crossing> crossings_;
    int free_circles_ = 0;
    std::vector<int> edge_partner_;

    void validate_and_index();
};

// ---- Parsing ---------------------------------------------------------------

// Grammar: diagram := token (ws token)* | "" ;
//          token   := "X(" int "," int "," int "," int ")" | "O"
// "O" contributes one crossing-free circle.
Diagram parse_pd(const std::string& text);

std::string to_pd_string(const Diagram& d);

// ---- State resolution ------------------------------------------------------

// The circles obtained by replacing every crossing with the two arcs selected
// by its marker.  Marker A joins slots (0,3) and (1,2); marker B joins (0,1)
// and (2,3).  This orientation of the A/B convention is pinned by the bracket
// value of the reference trefoil diagram.
struct Resolution {
    KauffmanState state;
    int circle_count = 0;          // traced circles + free circles
    int traced_circles = 0;        // circles passing through at least one crossing
    std::vector<int> circle_of_slot;   // size 4n, canonical circle ids
    std::vector<int> first_slot;       // per traced circle, its smallest slot id

    // ids of the (one or two) distinct circles meeting crossing v
    std::array<int, 2> circles_at(int v) const;
    int circles_at_count(int v) const;
};

Resolution resolve(const Diagram& d, const KauffmanState& s);

// Replace crossing v by the arcs of marker m, producing an (n-1)-crossing
// diagram with strands renumbered 1..2(n-1) in first-occurrence order.  An
// arc closing up into a crossing-free loop increments free_circles.
Diagram smooth_crossing(const Diagram& d, int v, Marker m);

// ---- Generators ------------------------------------------------------------

// Standard n-crossing diagram of the torus link T(2,n): the closed 2-strand
// braid with crossings ordered along the braid.
Diagram torus_2n(int n);

// Unknot with |f| kinks of sign(f); f = 0 is the bare circle.
Diagram unknot_framed(int f);

// Insert a single kink of the given sign on strand e.
Diagram add_r1_kink(const Diagram& d, EdgeId e, int sign);

// Same, placed on one of the diagram's crossing-free circles.
Diagram add_r1_kink_on_free_circle(const Diagram& d, int sign);

Diagram disjoint_union(const Diagram& d1, const Diagram& d2);

// Closure of a braid word on `strands` strands.  Letter +i (1-based,
// i < strands) crosses strands i and i+1 with the same chirality as the
// torus generator; -i gives the mirror crossing.  Unused strands close into
// free circles.
Diagram braid_closure(int strands, const std::vector<int>& word);

// Reorder the crossing list; strand labels are untouched.
Diagram permute_crossings(const Diagram& d, const std::vector<int>& perm);

// Relabels strands 1..2n in scan order and normalizes each crossing's
// two-slot rotation, so equal diagrams-up-to-relabelling compare equal.
Diagram canonical_pd(const Diagram& d);

bool equal_up_to_relabel(const Diagram& a, const Diagram& b);

// Random planar diagram with at most max_crossings crossings, built as the
// closure of a random braid word (occasionally with an extra kink).
Diagram random_diagram(std::mt19937& rng, int max_crossings);

} // namespace khoma

#endif
