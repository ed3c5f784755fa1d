#include <doctest.h>

#include <random>

#include "khoma/bracket.hpp"
#include "khoma/khovanov.hpp"

using namespace khoma;

namespace {

const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

std::size_t expected_state_total(const Diagram& d) {
    std::size_t total = 0;
    int n = d.crossing_count();
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        total += 1ull << resolve(d, KauffmanState{bits, n}).circle_count;
    return total;
}

} // namespace

TEST_CASE("basis sizes for the trefoil") {
    Diagram trefoil = parse_pd(kTrefoilPd);
    Complex cx(trefoil);
    CHECK(cx.total_states() == expected_state_total(trefoil));

    // paper: the kernel generators x, y, z
    CHECK(cx.dim(Bigrade{-3, -5}) == 3);
    // all-B state has three circles, hence eight enhanced states
    int bbb = 0;
    for (const auto& [g, basis] : cx.bases())
        for (const auto& s : basis.elements)
            if (s.markers == 0b111u)
                ++bbb;
    CHECK(bbb == 8);
}

TEST_CASE("bases of the bare circle") {
    Complex cx(parse_pd("O"));
    CHECK(cx.bases().size() == 2);
    CHECK(cx.dim(Bigrade{0, 2}) == 1);
    CHECK(cx.dim(Bigrade{0, -2}) == 1);
}

TEST_CASE("bases of the empty diagram") {
    Complex cx(parse_pd(""));
    CHECK(cx.total_states() == 1);
    CHECK(cx.dim(Bigrade{0, 0}) == 1);
}

TEST_CASE("sign exponent counts later B markers") {
    // marker word AAB on crossings 0,1,2
    EnhancedState aab{0b100u, 0, 0, 0};
    CHECK(sign_exponent(aab, 0) == 1);
    CHECK(sign_exponent(aab, 1) == 1);
    EnhancedState aaa{0, 0, 0, 0};
    CHECK(sign_exponent(aaa, 0) == 0);
    EnhancedState abb{0b110u, 0, 0, 0};
    CHECK(sign_exponent(abb, 0) == 2);
    CHECK_THROWS(sign_exponent(abb, 1)); // marker B at the flip
}

TEST_CASE("incidence table for a merge, brute force over all signs") {
    // positive kink: state A has two circles, flipping to B merges them
    Diagram kink = parse_pd("X(1,2,2,1)");
    Complex cx(kink);
    auto src_state = [&](int s0, int s1, int tau) {
        return EnhancedState{0u, static_cast<std::uint32_t>(s0 | (s1 << 1)), 1,
                             static_cast<std::int16_t>(1 + 2 * tau)};
    };
    auto dst_state = [&](int s0, int tau) {
        return EnhancedState{1u, static_cast<std::uint32_t>(s0), -1,
                             static_cast<std::int16_t>(-1 + 2 * tau)};
    };
    // sign bit 1 = '-'; merge rule: (+,-),(-,+) -> +, (-,-) -> -, (+,+) -> none
    CHECK(incidence(src_state(0, 0, 2), dst_state(0, 1), cx) == 0);
    CHECK(incidence(src_state(0, 0, 2), dst_state(1, 1), cx) == 0);
    CHECK(incidence(src_state(0, 1, 0), dst_state(0, 1), cx) == 1);
    CHECK(incidence(src_state(0, 1, 0), dst_state(1, -1), cx) == 0);
    CHECK(incidence(src_state(1, 0, 0), dst_state(0, 1), cx) == 1);
    CHECK(incidence(src_state(1, 1, -2), dst_state(1, -1), cx) == 1);
    CHECK(incidence(src_state(1, 1, -2), dst_state(0, 1), cx) == 0);
}

TEST_CASE("all-B states have no outgoing incidences") {
    Diagram trefoil = parse_pd(kTrefoilPd);
    Complex cx(trefoil);
    for (const auto& [g, basis] : cx.bases())
        for (const auto& s : basis.elements) {
            if (s.markers != 0b111u)
                continue;
            for (const auto& [g2, basis2] : cx.bases())
                for (const auto& t : basis2.elements)
                    CHECK(incidence(s, t, cx) == 0);
        }
}

TEST_CASE("trefoil differential at (-1,-5) spans the paper's relations") {
    Diagram trefoil = parse_pd(kTrefoilPd);
    DifferentialMatrix m = differential(trefoil, -1, -5);
    CHECK(m.rows == 3);
    CHECK(m.cols == 3);
    CHECK(m.entries.size() == 6);
    // each column is +-(e_i + e_j): two entries of the same sign
    std::int64_t dense[3][3] = {};
    for (const auto& e : m.entries)
        dense[e.row][e.col] = e.value;
    for (int col = 0; col < 3; ++col) {
        int nonzero = 0, sum = 0;
        for (int row = 0; row < 3; ++row) {
            if (dense[row][col] != 0)
                ++nonzero;
            sum += static_cast<int>(dense[row][col]);
        }
        CHECK(nonzero == 2);
        CHECK(std::abs(sum) == 2);
    }
    // the column lattice is the even-sum sublattice: |det| = 2
    std::int64_t det = dense[0][0] * (dense[1][1] * dense[2][2] - dense[1][2] * dense[2][1]) -
                       dense[0][1] * (dense[1][0] * dense[2][2] - dense[1][2] * dense[2][0]) +
                       dense[0][2] * (dense[1][0] * dense[2][1] - dense[1][1] * dense[2][0]);
    CHECK(std::abs(det) == 2);
}

TEST_CASE("differential with empty source is the zero-dimensional matrix") {
    Diagram trefoil = parse_pd(kTrefoilPd);
    DifferentialMatrix m = differential(trefoil, 99, 99);
    CHECK(m.cols == 0);
    CHECK(m.entries.empty());
}

TEST_CASE("differential matches the pairwise incidence definition") {
    std::mt19937 rng(37);
    std::vector<Diagram> corpus = {parse_pd(kTrefoilPd), torus_2n(2), unknot_framed(-2)};
    for (int i = 0; i < 6; ++i)
        corpus.push_back(random_diagram(rng, 4));
    for (const Diagram& d : corpus) {
        Complex cx(d);
        for (const auto& [g, basis] : cx.bases()) {
            DifferentialMatrix m = cx.differential(g.a, g.b);
            auto target = cx.bases().find(Bigrade{g.a - 2, g.b});
            std::vector<std::vector<int>> dense(
                static_cast<size_t>(m.rows), std::vector<int>(static_cast<size_t>(m.cols), 0));
            for (const auto& e : m.entries)
                dense[static_cast<size_t>(e.row)][static_cast<size_t>(e.col)] = e.value;
            if (target == cx.bases().end())
                continue;
            for (int col = 0; col < m.cols; ++col) {
                const EnhancedState& s = basis.elements[static_cast<size_t>(col)];
                for (int row = 0; row < m.rows; ++row) {
                    const EnhancedState& t = target->second.elements[static_cast<size_t>(row)];
                    int inc = incidence(s, t, cx);
                    int expected = 0;
                    if (inc == 1) {
                        int v = __builtin_ctz(s.markers ^ t.markers);
                        expected = sign_exponent(s, v) % 2 == 0 ? 1 : -1;
                    }
                    CHECK(dense[static_cast<size_t>(row)][static_cast<size_t>(col)] == expected);
                }
            }
        }
    }
}

TEST_CASE("differentials square to zero") {
    CHECK(differentials_compose_to_zero(Complex(torus_2n(4))));
    CHECK(differentials_compose_to_zero(Complex(torus_2n(5))));
    CHECK(differentials_compose_to_zero(Complex(parse_pd(kTrefoilPd))));
    std::mt19937 rng(41);
    for (int i = 0; i < 20; ++i)
        CHECK(differentials_compose_to_zero(Complex(random_diagram(rng, 6))));
}

TEST_CASE("chain dimensions categorify the unreduced bracket") {
    std::mt19937 rng(43);
    std::vector<Diagram> corpus = {parse_pd(kTrefoilPd), torus_2n(4), parse_pd("O"), parse_pd("")};
    for (int i = 0; i < 10; ++i)
        corpus.push_back(random_diagram(rng, 6));
    for (const Diagram& d : corpus) {
        Complex cx(d);
        Laurent graded;
        for (const auto& [g, basis] : cx.bases()) {
            int sign = ((g.b - g.a) / 2) % 2 == 0 ? 1 : -1;
            graded.add_term(sign * basis.dim(), g.b);
        }
        CHECK(graded == bracket_unreduced(d));
    }
}

TEST_CASE("incidence of a pair keeps untouched circles") {
    // negative kink: state A has one circle, flipping splits it in two
    Diagram kink = parse_pd("X(1,1,2,2)");
    Complex cx(kink);
    EnhancedState plus{0u, 0u, 1, 3};
    EnhancedState target_pp{1u, 0u, -1, 3};
    CHECK(incidence(plus, target_pp, cx) == 1);
    EnhancedState minus{0u, 1u, 1, -1};
    EnhancedState target_pm{1u, 2u, -1, -1};
    EnhancedState target_mp{1u, 1u, -1, -1};
    EnhancedState target_mm{1u, 3u, -1, -5};
    CHECK(incidence(minus, target_pm, cx) == 1);
    CHECK(incidence(minus, target_mp, cx) == 1);
    CHECK(incidence(minus, target_mm, cx) == 0);
}
