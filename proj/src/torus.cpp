#include "khoma/torus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace khoma {

namespace {

const AbelianGroup kZ{1, {}};
const AbelianGroup kZ2{0, {2}};

} // namespace

HomologyTable closed_form_t2n(int n) {
    if (n < 1)
        throw error("closed_form_t2n requires n >= 1");
    HomologyTable t;
    if (n == 1) {
        t.add(Bigrade{1, 5}, kZ);
        t.add(Bigrade{1, 1}, kZ);
        return t;
    }
    t.add(Bigrade{n, n}, kZ);
    t.add(Bigrade{-n, -3 * n}, kZ);
    for (int s = 0; s <= n; s += 2)
        t.add(Bigrade{n - 2 * s, n - 4 * s + 4}, kZ);
    for (int s = 3; s <= n; s += 2) {
        if (s != n) // at s = n this clause names (-n,-3n), already counted
            t.add(Bigrade{n - 2 * s, n - 4 * s}, kZ);
        t.add(Bigrade{n - 2 * s, n - 4 * s + 4}, kZ2);
    }
    return t;
}

HomologyTable closed_form_unknot_framed(int f) {
    HomologyTable t;
    t.add(Bigrade{f, 3 * f + 2}, kZ);
    t.add(Bigrade{f, 3 * f - 2}, kZ);
    return t;
}

LesTriple les_triple(const Diagram& d, int v) {
    LesTriple triple;
    triple.whole = d;
    triple.a_smoothed = smooth_crossing(d, v, Marker::A);
    triple.b_smoothed = smooth_crossing(d, v, Marker::B);
    triple.v = v;
    return triple;
}

std::map<int, std::int64_t> les_rank_sums(const HomologyTable& whole,
                                          const HomologyTable& a_side,
                                          const HomologyTable& b_side) {
    // Classes are indexed by the b-degree of the whole-diagram terms.
    std::set<int> classes;
    int a_min = 0, a_max = 0;
    bool any = false;
    auto note = [&](int a, int b) {
        classes.insert(b);
        if (!any || a < a_min)
            a_min = a;
        if (!any || a > a_max)
            a_max = a;
        any = true;
    };
    for (const auto& [g, grp] : whole.entries())
        note(g.a, g.b);
    for (const auto& [g, grp] : b_side.entries())
        note(g.a - 1, g.b - 1); // B term at level a sits at (a+1, b+1)
    for (const auto& [g, grp] : a_side.entries())
        note(g.a + 1, g.b + 1); // A term at level a sits at (a-1, b-1)

    std::map<int, std::int64_t> sums;
    for (int b : classes) {
        std::int64_t sum = 0;
        int sign = 1;
        for (int a = a_max + 2; a >= a_min - 2; a -= 2) {
            sum += sign * b_side.at(Bigrade{a + 1, b + 1}).free_rank;
            sign = -sign;
            sum += sign * whole.at(Bigrade{a, b}).free_rank;
            sign = -sign;
            sum += sign * a_side.at(Bigrade{a - 1, b - 1}).free_rank;
            sign = -sign;
        }
        sums[b] = sum;
    }
    return sums;
}

LesReport les_rank_check(const Diagram& d, int v) {
    LesTriple triple = les_triple(d, v);
    HomologyTable whole = homology_table(triple.whole);
    HomologyTable a_side = homology_table(triple.a_smoothed);
    HomologyTable b_side = homology_table(triple.b_smoothed);
    LesReport report;
    for (const auto& [b, sum] : les_rank_sums(whole, a_side, b_side)) {
        if (sum != 0) {
            report.ok = false;
            std::ostringstream os;
            os << "alternating rank sum " << sum << " at b=" << b << ", crossing " << v;
            report.lines.push_back(os.str());
        }
    }
    return report;
}

LesReport corollary_iso_check(const Diagram& d, int v) {
    LesTriple triple = les_triple(d, v);
    HomologyTable whole = homology_table(triple.whole);
    HomologyTable a_side = homology_table(triple.a_smoothed);
    HomologyTable b_side = homology_table(triple.b_smoothed);

    std::set<Bigrade> candidates;
    for (const auto& [g, grp] : whole.entries())
        candidates.insert(g);
    for (const auto& [g, grp] : a_side.entries())
        candidates.insert(Bigrade{g.a + 1, g.b + 1});

    LesReport report;
    for (const Bigrade& g : candidates) {
        if (!b_side.at(Bigrade{g.a + 1, g.b + 1}).trivial())
            continue;
        if (!b_side.at(Bigrade{g.a - 1, g.b + 1}).trivial())
            continue;
        if (!(whole.at(g) == a_side.at(Bigrade{g.a - 1, g.b - 1}))) {
            report.ok = false;
            std::ostringstream os;
            os << "corollary isomorphism fails at (a,b)=(" << g.a << "," << g.b
               << "), crossing " << v;
            report.lines.push_back(os.str());
        }
    }
    return report;
}

} // namespace khoma
