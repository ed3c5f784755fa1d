#include "khoma/khovanov.hpp"

#include <algorithm>

#include "khoma/parallel.hpp"

namespace khoma {

namespace {

constexpr std::uint32_t bitrev32(std::uint32_t x) {
    x = ((x & 0x55555555u) << 1) | ((x >> 1) & 0x55555555u);
    x = ((x & 0x33333333u) << 2) | ((x >> 2) & 0x33333333u);
    x = ((x & 0x0f0f0f0fu) << 4) | ((x >> 4) & 0x0f0f0f0fu);
    x = ((x & 0x00ff00ffu) << 8) | ((x >> 8) & 0x00ff00ffu);
    return (x << 16) | (x >> 16);
}

// Canonical order: lexicographic on the marker vector then the sign vector,
// reading index 0 first with A/+ low.  Encoded so numeric order matches.
inline std::uint64_t canonical_key(const EnhancedState& s) {
    return (static_cast<std::uint64_t>(bitrev32(s.markers)) << 32) | bitrev32(s.signs);
}

inline std::uint32_t nth_in_lex_order(std::uint32_t j, int width) {
    return width == 0 ? 0u : bitrev32(j) >> (32 - width);
}

inline int sign_bit(std::uint32_t signs, int circle) { return (signs >> circle) & 1; }

// Maps a circle of the flipped resolution back to the matching circle of the
// source resolution.  Only valid for circles not passing through the flipped
// crossing, whose slot sets are identical in both resolutions.
inline int matching_circle(const Resolution& from, const Resolution& to, int circle) {
    if (circle >= to.traced_circles) // free circle
        return from.traced_circles + (circle - to.traced_circles);
    return from.circle_of_slot[static_cast<size_t>(to.first_slot[static_cast<size_t>(circle)])];
}

} // namespace

int ChainBasis::index_of(const EnhancedState& s, int /*crossings*/) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), s,
                               [](const EnhancedState& x, const EnhancedState& y) {
                                   return canonical_key(x) < canonical_key(y);
                               });
    if (it == elements.end() || !(*it == s))
        return -1;
    return static_cast<int>(it - elements.begin());
}

Complex::Complex(const Diagram& d) : d_(d) {
    int n = d.crossing_count();
    if (n > 20)
        throw error("chain complex construction limited to 20 crossings");
    std::uint32_t states = 1u << n;
    resolutions_.resize(states);
    parallel_for(states, [&](size_t bits) {
        resolutions_[bits] = resolve(d_, KauffmanState{static_cast<std::uint32_t>(bits), n});
    });

    for (std::uint32_t j = 0; j < states; ++j) {
        std::uint32_t markers = nth_in_lex_order(j, n);
        const Resolution& r = resolutions_[markers];
        int c = r.circle_count;
        if (c > 30)
            throw error("enhanced-state enumeration limited to 30 circles");
        int sigma = r.state.sigma();
        for (std::uint32_t t = 0; t < (1u << c); ++t) {
            std::uint32_t signs = nth_in_lex_order(t, c);
            int tau = c - 2 * __builtin_popcount(signs);
            Bigrade g{sigma, sigma + 2 * tau};
            auto [it, inserted] = bases_.try_emplace(g);
            if (inserted)
                it->second.bigrade = g;
            it->second.elements.push_back(EnhancedState{
                markers, signs, static_cast<std::int16_t>(g.a), static_cast<std::int16_t>(g.b)});
        }
    }
}

int Complex::dim(Bigrade g) const {
    auto it = bases_.find(g);
    return it == bases_.end() ? 0 : it->second.dim();
}

std::size_t Complex::total_states() const {
    std::size_t total = 0;
    for (const auto& [g, basis] : bases_)
        total += basis.elements.size();
    return total;
}

DifferentialMatrix Complex::differential(int a, int b) const {
    DifferentialMatrix m;
    m.source = Bigrade{a, b};
    m.target = Bigrade{a - 2, b};
    auto src = bases_.find(m.source);
    auto dst = bases_.find(m.target);
    m.cols = src == bases_.end() ? 0 : src->second.dim();
    m.rows = dst == bases_.end() ? 0 : dst->second.dim();
    if (m.cols == 0 || m.rows == 0)
        return m;

    int n = d_.crossing_count();
    const ChainBasis& target = dst->second;
    for (int col = 0; col < m.cols; ++col) {
        const EnhancedState& s = src->second.elements[static_cast<size_t>(col)];
        const Resolution& res = resolutions_[s.markers];
        for (int v = 0; v < n; ++v) {
            if ((s.markers >> v) & 1u)
                continue; // marker B already
            std::uint32_t flipped = s.markers | (1u << v);
            const Resolution& res2 = resolutions_[flipped];
            int delta = res2.circle_count - res.circle_count;
            std::int8_t coef = (__builtin_popcount(s.markers >> (v + 1)) & 1) ? -1 : 1;

            auto emit = [&](std::uint32_t signs2) {
                EnhancedState t{flipped, signs2, static_cast<std::int16_t>(a - 2),
                                static_cast<std::int16_t>(b)};
                int row = target.index_of(t, n);
                if (row < 0)
                    throw error("differential target missing from basis");
                m.entries.push_back(MatrixEntry{row, col, coef});
            };

            // Signs carried by circles away from the flipped crossing.
            auto untouched_signs = [&](int skip1, int skip2) {
                std::uint32_t signs2 = 0;
                for (int c = 0; c < res2.circle_count; ++c) {
                    if (c == skip1 || c == skip2)
                        continue;
                    if (sign_bit(s.signs, matching_circle(res, res2, c)))
                        signs2 |= 1u << c;
                }
                return signs2;
            };

            if (delta == -1) {
                auto [c1, c2] = res.circles_at(v);
                int s1 = sign_bit(s.signs, c1), s2 = sign_bit(s.signs, c2);
                if (s1 == 0 && s2 == 0)
                    continue; // merging two + circles leaves no incident state
                int merged = res2.circle_of_slot[static_cast<size_t>(4 * v)];
                std::uint32_t signs2 = untouched_signs(merged, -1);
                if (s1 & s2) // (-,-) merges to -
                    signs2 |= 1u << merged;
                emit(signs2);
            } else if (delta == 1) {
                int split = res.circle_of_slot[static_cast<size_t>(4 * v)];
                auto [p, q] = res2.circles_at(v);
                std::uint32_t base = untouched_signs(p, q);
                if (sign_bit(s.signs, split) == 0) {
                    emit(base); // + splits to (+,+)
                } else {
                    emit(base | (1u << q)); // - splits to (+,-) and (-,+)
                    emit(base | (1u << p));
                }
            }
            // |D_s| unchanged would mean a non-planar code; no incidence.
        }
    }
    return m;
}

std::map<int, std::vector<DifferentialMatrix>> Complex::full_complex() const {
    std::map<int, std::vector<int>> levels; // b -> descending a with support
    for (const auto& [g, basis] : bases_)
        levels[g.b].push_back(g.a);
    std::map<int, std::vector<DifferentialMatrix>> out;
    for (auto& [b, as] : levels) {
        std::sort(as.begin(), as.end(), std::greater<int>());
        auto& chain = out[b];
        for (int a : as)
            chain.push_back(differential(a, b));
    }
    return out;
}

std::map<Bigrade, ChainBasis> enumerate_bases(const Diagram& d) {
    return Complex(d).bases();
}

DifferentialMatrix differential(const Diagram& d, int a, int b) {
    return Complex(d).differential(a, b);
}

std::map<int, std::vector<DifferentialMatrix>> full_complex(const Diagram& d) {
    return Complex(d).full_complex();
}

int sign_exponent(const EnhancedState& s, int v) {
    if ((s.markers >> v) & 1u)
        throw error("sign_exponent requires marker A at the flipped crossing");
    return __builtin_popcount(s.markers >> (v + 1));
}

int incidence(const EnhancedState& s, const EnhancedState& t, const Complex& cx) {
    int n = cx.diagram().crossing_count();
    std::uint32_t mask = n == 32 ? ~0u : (1u << n) - 1u;
    if ((s.markers & ~mask) || (t.markers & ~mask))
        throw error("incidence: state does not belong to this diagram");
    if (t.a != s.a - 2 || t.b != s.b)
        return 0;
    std::uint32_t diff = s.markers ^ t.markers;
    if (__builtin_popcount(diff) != 1)
        return 0;
    int v = __builtin_ctz(diff);
    if ((s.markers >> v) & 1u)
        return 0; // flip must go A -> B

    const Resolution& res = cx.resolution(s.markers);
    const Resolution& res2 = cx.resolution(t.markers);
    if (s.signs >= (1u << res.circle_count) || t.signs >= (1u << res2.circle_count))
        throw error("incidence: sign vector does not match resolution");

    int delta = res2.circle_count - res.circle_count;
    if (delta != -1 && delta != 1)
        return 0;

    // Circles away from v must keep their signs.
    auto [p2, q2] = res2.circles_at(v);
    for (int c = 0; c < res2.circle_count; ++c) {
        if (c == p2 || c == q2)
            continue;
        if (sign_bit(t.signs, c) != sign_bit(s.signs, matching_circle(res, res2, c)))
            return 0;
    }

    if (delta == -1) {
        auto [c1, c2] = res.circles_at(v);
        int s1 = sign_bit(s.signs, c1), s2 = sign_bit(s.signs, c2);
        int merged = res2.circle_of_slot[static_cast<size_t>(4 * v)];
        if (s1 == 0 && s2 == 0)
            return 0;
        int expected = s1 & s2;
        return sign_bit(t.signs, merged) == expected ? 1 : 0;
    }
    int split = res.circle_of_slot[static_cast<size_t>(4 * v)];
    int tp = sign_bit(t.signs, p2), tq = sign_bit(t.signs, q2);
    if (sign_bit(s.signs, split) == 0)
        return (tp == 0 && tq == 0) ? 1 : 0;
    return (tp + tq == 1) ? 1 : 0;
}

bool differentials_compose_to_zero(const Complex& cx) {
    auto chains = cx.full_complex();
    for (const auto& [b, chain] : chains) {
        for (size_t i = 0; i + 1 < chain.size(); ++i) {
            const DifferentialMatrix& first = chain[i];
            const DifferentialMatrix& second = chain[i + 1];
            if (second.source != first.target)
                continue; // gap in support: composition through zero group
            // column-indexed view of the second matrix
            std::vector<std::vector<MatrixEntry>> by_col(static_cast<size_t>(second.cols));
            for (const auto& e : second.entries)
                by_col[static_cast<size_t>(e.col)].push_back(e);
            std::vector<std::vector<MatrixEntry>> first_by_col(static_cast<size_t>(first.cols));
            for (const auto& e : first.entries)
                first_by_col[static_cast<size_t>(e.col)].push_back(e);
            std::vector<std::int64_t> acc(static_cast<size_t>(second.rows), 0);
            std::vector<int> touched;
            for (int col = 0; col < first.cols; ++col) {
                for (const auto& e1 : first_by_col[static_cast<size_t>(col)])
                    for (const auto& e2 : by_col[static_cast<size_t>(e1.row)]) {
                        if (acc[static_cast<size_t>(e2.row)] == 0)
                            touched.push_back(e2.row);
                        acc[static_cast<size_t>(e2.row)] += static_cast<int>(e1.value) * e2.value;
                    }
                for (int r : touched)
                    if (acc[static_cast<size_t>(r)] != 0)
                        return false;
                for (int r : touched)
                    acc[static_cast<size_t>(r)] = 0;
                touched.clear();
            }
        }
    }
    return true;
}

} // namespace khoma
