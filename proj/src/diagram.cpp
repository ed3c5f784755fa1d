#include "khoma/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace khoma {

namespace {

// Smoothing arcs inside one crossing, as slot pairings.
// Marker A joins slots (0,3),(1,2); marker B joins (0,1),(2,3).
int arc_partner(Marker m, int slot) {
    if (m == Marker::A) {
        static constexpr int pa[4] = {3, 2, 1, 0};
        return pa[slot];
    }
    static constexpr int pb[4] = {1, 0, 3, 2};
    return pb[slot];
}

} // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_circles)
    : crossings_(std::move(crossings)), free_circles_(free_circles) {
    if (free_circles_ < 0)
        throw validation_error("free_circles must be non-negative");
    validate_and_index();
}

void Diagram::validate_and_index() {
    std::map<EdgeId, std::vector<int>> occurrences;
    for (int v = 0; v < crossing_count(); ++v)
        for (int s = 0; s < 4; ++s) {
            EdgeId e = crossings_[static_cast<size_t>(v)].e[static_cast<size_t>(s)];
            if (e < 0)
                throw validation_error("negative strand label");
            occurrences[e].push_back(4 * v + s);
        }
    edge_partner_.assign(static_cast<size_t>(slot_count()), -1);
    for (const auto& [e, slots] : occurrences) {
        if (slots.size() != 2)
            throw validation_error("strand label " + std::to_string(e) + " occurs " +
                                   std::to_string(slots.size()) + " times, expected 2");
        edge_partner_[static_cast<size_t>(slots[0])] = slots[1];
        edge_partner_[static_cast<size_t>(slots[1])] = slots[0];
    }
}

std::vector<EdgeId> Diagram::edges() const {
    std::vector<EdgeId> out;
    for (const auto& c : crossings_)
        for (EdgeId e : c.e)
            out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Diagram::component_count() const {
    // Strands continue through a crossing: slot 0 <-> 2 and 1 <-> 3.
    int n = slot_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int comps = free_circles_;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)])
            continue;
        ++comps;
        int u = start;
        while (!seen[static_cast<size_t>(u)]) {
            seen[static_cast<size_t>(u)] = true;
            int through = (u & ~3) | ((u & 3) ^ 2); // other slot of the same strand-pass
            seen[static_cast<size_t>(through)] = true;
            u = edge_partner_[static_cast<size_t>(through)];
        }
    }
    return comps;
}

// ---- Parsing ---------------------------------------------------------------

namespace {

Crossing parse_x_token(const std::string& tok) {
    // "X(" int "," int "," int "," int ")"
    auto fail = [&]() -> Crossing {
        throw parse_error("malformed token '" + tok + "'");
    };
    if (tok.size() < 2 || tok[0] != 'X' || tok[1] != '(' || tok.back() != ')')
        return fail();
    Crossing c{};
    size_t pos = 2;
    for (int i = 0; i < 4; ++i) {
        size_t start = pos;
        while (pos < tok.size() - 1 && std::isdigit(static_cast<unsigned char>(tok[pos])))
            ++pos;
        if (pos == start)
            return fail();
        c.e[static_cast<size_t>(i)] = std::stoi(tok.substr(start, pos - start));
        char expect = i < 3 ? ',' : ')';
        if (pos >= tok.size() || tok[pos] != expect)
            return fail();
        ++pos;
    }
    if (pos != tok.size())
        return fail();
    return c;
}

} // namespace

Diagram parse_pd(const std::string& text) {
    std::vector<Crossing> crossings;
    int free_circles = 0;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "O") {
            ++free_circles;
        } else if (tok[0] == 'X') {
            crossings.push_back(parse_x_token(tok));
        } else {
            throw parse_error("unexpected token '" + tok + "'");
        }
    }
    return Diagram(std::move(crossings), free_circles);
}

std::string to_pd_string(const Diagram& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& c : d.crossings()) {
        if (!first)
            out << ' ';
        first = false;
        out << "X(" << c.e[0] << ',' << c.e[1] << ',' << c.e[2] << ',' << c.e[3] << ')';
    }
    for (int i = 0; i < d.free_circles(); ++i) {
        if (!first)
            out << ' ';
        first = false;
        out << 'O';
    }
    return out.str();
}

// ---- Resolution ------------------------------------------------------------

Resolution resolve(const Diagram& d, const KauffmanState& s) {
    if (s.size != d.crossing_count())
        throw error("marker vector length mismatch");
    Resolution r;
    r.state = s;
    int n = d.slot_count();
    r.circle_of_slot.assign(static_cast<size_t>(n), -1);
    const std::vector<int>& ep = d.edge_partner();
    for (int start = 0; start < n; ++start) {
        if (r.circle_of_slot[static_cast<size_t>(start)] >= 0)
            continue;
        int id = r.traced_circles++;
        r.first_slot.push_back(start);
        // Alternate smoothing arcs and strand edges until the cycle closes.
        int u = start;
        do {
            r.circle_of_slot[static_cast<size_t>(u)] = id;
            int v = u >> 2;
            int w = 4 * v + arc_partner(s.marker(v), u & 3);
            r.circle_of_slot[static_cast<size_t>(w)] = id;
            u = ep[static_cast<size_t>(w)];
        } while (u != start);
    }
    r.circle_count = r.traced_circles + d.free_circles();
    return r;
}

std::array<int, 2> Resolution::circles_at(int v) const {
    std::array<int, 2> out{-1, -1};
    int k = 0;
    for (int s = 0; s < 4; ++s) {
        int c = circle_of_slot[static_cast<size_t>(4 * v + s)];
        if (k == 0 || (k == 1 && c != out[0])) {
            out[static_cast<size_t>(k++)] = c;
        }
    }
    if (k == 2 && out[0] > out[1])
        std::swap(out[0], out[1]);
    return out;
}

int Resolution::circles_at_count(int v) const {
    return circles_at(v)[1] >= 0 ? 2 : 1;
}

// ---- Smoothing one crossing ------------------------------------------------

Diagram smooth_crossing(const Diagram& d, int v, Marker m) {
    int n = d.crossing_count();
    if (v < 0 || v >= n)
        throw std::out_of_range("crossing index out of range");
    const std::vector<int>& ep = d.edge_partner();

    auto in_v = [&](int slot) { return slot >> 2 == v; };
    // Follow the strand from a slot of another crossing, passing through the
    // arcs at v, until it reaches a slot of another crossing again.
    auto walk = [&](int slot) {
        int u = ep[static_cast<size_t>(slot)];
        while (in_v(u)) {
            u = 4 * v + arc_partner(m, u & 3);
            u = ep[static_cast<size_t>(u)];
        }
        return u;
    };

    // New strands: pair up the slots of the surviving crossings.
    std::map<std::pair<int, int>, EdgeId> new_edges;
    EdgeId next = 1;
    std::vector<Crossing> out;
    out.reserve(static_cast<size_t>(n - 1));
    for (int c = 0; c < n; ++c) {
        if (c == v)
            continue;
        Crossing nc{};
        for (int s = 0; s < 4; ++s) {
            int here = 4 * c + s;
            int there = walk(here);
            auto key = std::minmax(here, there);
            auto [it, inserted] = new_edges.try_emplace({key.first, key.second}, next);
            if (inserted)
                ++next;
            nc.e[static_cast<size_t>(s)] = it->second;
        }
        out.push_back(nc);
    }

    // Cycles confined to the slots of v become free circles.
    int free = d.free_circles();
    std::array<bool, 4> used{};
    for (int s = 0; s < 4; ++s) {
        if (used[static_cast<size_t>(s)])
            continue;
        // Does this v-slot lead back into v without visiting another crossing?
        bool confined = true;
        int u = 4 * v + s;
        std::vector<int> cycle;
        do {
            cycle.push_back(u & 3);
            int w = 4 * v + arc_partner(m, u & 3);
            cycle.push_back(w & 3);
            u = ep[static_cast<size_t>(w)];
            if (!in_v(u)) {
                confined = false;
                break;
            }
        } while ((u & 3) != s);
        if (confined) {
            ++free;
            for (int slot : cycle)
                used[static_cast<size_t>(slot)] = true;
        } else {
            used[static_cast<size_t>(s)] = true;
        }
    }

    return Diagram(std::move(out), free);
}

// ---- Generators ------------------------------------------------------------

Diagram torus_2n(int n) {
    if (n < 1)
        throw error("torus_2n requires n >= 1");
    // Closed 2-strand braid: l_i / r_i are the left/right strands between
    // crossing i and crossing i+1 (cyclically).  Crossing i reads, in ccw
    // slot order, (r_{i-1}, l_{i-1}, l_i, r_i).
    auto l = [&](int i) { return 2 * (i % n) + 1; };
    auto r = [&](int i) { return 2 * (i % n) + 2; };
    std::vector<Crossing> cr;
    cr.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        cr.push_back({{r(i - 1), l(i - 1), l(i), r(i)}});
    return Diagram(std::move(cr), 0);
}

Diagram unknot_framed(int f) {
    if (f == 0)
        return Diagram({}, 1);
    int k = f > 0 ? f : -f;
    // A circle through k kinks: strand i runs from kink i to kink i+1, and
    // kink i carries loop strand k+i.
    std::vector<Crossing> cr;
    cr.reserve(static_cast<size_t>(k));
    for (int i = 1; i <= k; ++i) {
        EdgeId in = i, out = i % k + 1, loop = k + i;
        if (f > 0)
            cr.push_back({{in, loop, loop, out}});
        else
            cr.push_back({{in, out, loop, loop}});
    }
    return Diagram(std::move(cr), 0);
}

namespace {

EdgeId next_label(const Diagram& d) {
    EdgeId m = 0;
    for (const auto& c : d.crossings())
        for (EdgeId e : c.e)
            m = std::max(m, e + 1);
    return std::max(m, 1);
}

Crossing kink_crossing(EdgeId in, EdgeId out, EdgeId loop, int sign) {
    if (sign > 0)
        return {{in, loop, loop, out}};
    return {{in, out, loop, loop}};
}

} // namespace

Diagram add_r1_kink(const Diagram& d, EdgeId e, int sign) {
    int first = -1, second = -1;
    for (int slot = 0; slot < d.slot_count(); ++slot)
        if (d.crossing(slot >> 2).e[static_cast<size_t>(slot & 3)] == e) {
            (first < 0 ? first : second) = slot;
        }
    if (first < 0)
        throw error("strand label " + std::to_string(e) + " does not occur in diagram");
    EdgeId x = next_label(d), y = x + 1, loop = x + 2;
    std::vector<Crossing> cr = d.crossings();
    cr[static_cast<size_t>(first >> 2)].e[static_cast<size_t>(first & 3)] = x;
    cr[static_cast<size_t>(second >> 2)].e[static_cast<size_t>(second & 3)] = y;
    cr.push_back(kink_crossing(x, y, loop, sign));
    return Diagram(std::move(cr), d.free_circles());
}

Diagram add_r1_kink_on_free_circle(const Diagram& d, int sign) {
    if (d.free_circles() < 1)
        throw error("diagram has no free circle");
    EdgeId x = next_label(d), loop = x + 1;
    std::vector<Crossing> cr = d.crossings();
    cr.push_back(kink_crossing(x, x, loop, sign));
    return Diagram(std::move(cr), d.free_circles() - 1);
}

Diagram disjoint_union(const Diagram& d1, const Diagram& d2) {
    EdgeId offset = next_label(d1);
    std::vector<Crossing> cr = d1.crossings();
    for (const auto& c : d2.crossings()) {
        Crossing shifted = c;
        for (auto& e : shifted.e)
            e += offset;
        cr.push_back(shifted);
    }
    return Diagram(std::move(cr), d1.free_circles() + d2.free_circles());
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 2)
        throw error("braid_closure requires at least 2 strands");
    std::vector<EdgeId> start(static_cast<size_t>(strands));
    std::vector<EdgeId> cur(static_cast<size_t>(strands));
    EdgeId next = 1;
    for (int p = 0; p < strands; ++p)
        start[static_cast<size_t>(p)] = cur[static_cast<size_t>(p)] = next++;

    std::vector<Crossing> cr;
    cr.reserve(word.size());
    std::vector<bool> crossed(static_cast<size_t>(strands), false);
    for (int letter : word) {
        int pos = std::abs(letter);
        if (pos < 1 || pos >= strands)
            throw error("braid letter out of range");
        EdgeId a = cur[static_cast<size_t>(pos - 1)]; // in-left
        EdgeId b = cur[static_cast<size_t>(pos)];     // in-right
        EdgeId c = next++;                            // out-left
        EdgeId d = next++;                            // out-right
        if (letter > 0)
            cr.push_back({{b, a, c, d}});
        else
            cr.push_back({{a, c, d, b}});
        cur[static_cast<size_t>(pos - 1)] = c;
        cur[static_cast<size_t>(pos)] = d;
        crossed[static_cast<size_t>(pos - 1)] = crossed[static_cast<size_t>(pos)] = true;
    }

    // Close up: identify each strand's bottom label with its top label.
    std::vector<EdgeId> rep(static_cast<size_t>(next));
    std::iota(rep.begin(), rep.end(), 0);
    std::function<EdgeId(EdgeId)> find = [&](EdgeId x) {
        while (rep[static_cast<size_t>(x)] != x)
            x = rep[static_cast<size_t>(x)] = rep[static_cast<size_t>(rep[static_cast<size_t>(x)])];
        return x;
    };
    int free = 0;
    for (int p = 0; p < strands; ++p) {
        if (!crossed[static_cast<size_t>(p)]) {
            ++free;
            continue;
        }
        EdgeId u = find(cur[static_cast<size_t>(p)]);
        EdgeId w = find(start[static_cast<size_t>(p)]);
        rep[static_cast<size_t>(u)] = w;
    }
    for (auto& c : cr)
        for (auto& e : c.e)
            e = find(e);
    return canonical_pd(Diagram(std::move(cr), free));
}

Diagram permute_crossings(const Diagram& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.crossing_count())
        throw error("permutation size mismatch");
    std::vector<Crossing> cr;
    cr.reserve(perm.size());
    for (int v : perm)
        cr.push_back(d.crossing(v));
    return Diagram(std::move(cr), d.free_circles());
}

// ---- Canonical form --------------------------------------------------------

Diagram canonical_pd(const Diagram& d) {
    std::map<EdgeId, EdgeId> relabel;
    EdgeId next = 1;
    std::vector<Crossing> out;
    out.reserve(d.crossings().size());
    for (const auto& c : d.crossings()) {
        // Rotation by two slots is the same crossing; greedily pick the
        // rotation whose relabelled tuple is lexicographically smaller.
        Crossing rot0 = c;
        Crossing rot2 = {{c.e[2], c.e[3], c.e[0], c.e[1]}};
        auto apply = [&](const Crossing& cand, std::map<EdgeId, EdgeId>& map, EdgeId& counter) {
            Crossing res{};
            for (int s = 0; s < 4; ++s) {
                auto [it, inserted] = map.try_emplace(cand.e[static_cast<size_t>(s)], counter);
                if (inserted)
                    ++counter;
                res.e[static_cast<size_t>(s)] = it->second;
            }
            return res;
        };
        auto map0 = relabel;
        auto map2 = relabel;
        EdgeId n0 = next, n2 = next;
        Crossing c0 = apply(rot0, map0, n0);
        Crossing c2 = apply(rot2, map2, n2);
        if (c2.e < c0.e) {
            out.push_back(c2);
            relabel = std::move(map2);
            next = n2;
        } else {
            out.push_back(c0);
            relabel = std::move(map0);
            next = n0;
        }
    }
    return Diagram(std::move(out), d.free_circles());
}

bool equal_up_to_relabel(const Diagram& a, const Diagram& b) {
    if (a.crossing_count() != b.crossing_count() || a.free_circles() != b.free_circles())
        return false;
    return canonical_pd(a).crossings() == canonical_pd(b).crossings();
}

Diagram random_diagram(std::mt19937& rng, int max_crossings) {
    if (max_crossings < 1)
        throw error("max_crossings must be positive");
    std::uniform_int_distribution<int> strand_dist(2, 4);
    int strands = strand_dist(rng);
    std::uniform_int_distribution<int> len_dist(1, max_crossings);
    int len = len_dist(rng);
    std::vector<int> word;
    word.reserve(static_cast<size_t>(len));
    std::uniform_int_distribution<int> pos_dist(1, strands - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < len; ++i) {
        int letter = pos_dist(rng);
        word.push_back(coin(rng) ? letter : -letter);
    }
    Diagram d = braid_closure(strands, word);
    if (d.crossing_count() < max_crossings && coin(rng) == 0) {
        auto es = d.edges();
        if (!es.empty()) {
            std::uniform_int_distribution<size_t> edge_dist(0, es.size() - 1);
            d = add_r1_kink(d, es[edge_dist(rng)], coin(rng) ? 1 : -1);
        }
    }
    return d;
}

} // namespace khoma
