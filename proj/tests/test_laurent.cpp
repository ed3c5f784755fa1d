#include <doctest.h>

#include <random>

#include "khoma/laurent.hpp"

using khoma::Laurent;

namespace {

Laurent random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp_dist(-6, 6);
    std::uniform_int_distribution<int> coeff_dist(-5, 5);
    std::uniform_int_distribution<int> len_dist(0, 5);
    Laurent p;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i)
        p.add_term(coeff_dist(rng), exp_dist(rng));
    return p;
}

} // namespace

TEST_CASE("laurent basics") {
    Laurent p = Laurent::monomial(1, -7);
    p.add_term(-1, -3);
    p.add_term(-1, 5);
    CHECK(p.coeff(-7) == 1);
    CHECK(p.coeff(-3) == -1);
    CHECK(p.coeff(0) == 0);

    p.add_term(1, -3);
    CHECK(p.coeff(-3) == 0);
    CHECK(p.terms().size() == 2); // cancelled term dropped

    CHECK(Laurent{}.is_zero());
    CHECK((Laurent::monomial(2, 1) - Laurent::monomial(2, 1)).is_zero());
}

TEST_CASE("laurent circle weight") {
    Laurent w = Laurent::circle_weight();
    CHECK(w.coeff(2) == -1);
    CHECK(w.coeff(-2) == -1);
    Laurent sq = w * w;
    CHECK(sq.coeff(4) == 1);
    CHECK(sq.coeff(0) == 2);
    CHECK(sq.coeff(-4) == 1);
    CHECK(w.pow(0) == khoma::laurent_one());
    CHECK(w.pow(2) == sq);
}

TEST_CASE("laurent ring laws on random inputs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Laurent p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * q == q * p);
        CHECK(p * khoma::laurent_one() == p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("laurent overflow is detected") {
    Laurent big = Laurent::monomial(INT64_MAX, 0);
    CHECK_THROWS_AS(big + big, khoma::overflow_error);
    CHECK_THROWS_AS(big * Laurent::monomial(2, 0), khoma::overflow_error);
}
