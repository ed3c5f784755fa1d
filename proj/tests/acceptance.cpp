// Acceptance suite: runs each advertised guarantee of the library end to end
// and prints one PASS/FAIL line per criterion.  Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "khoma/bracket.hpp"
#include "khoma/homology.hpp"
#include "khoma/render.hpp"
#include "khoma/torus.hpp"
#include "khoma/verify.hpp"

using namespace khoma;

namespace {

const AbelianGroup Z{1, {}};
const AbelianGroup Z2{0, {2}};

HomologyTable table_of(std::initializer_list<std::pair<Bigrade, AbelianGroup>> items) {
    HomologyTable t;
    for (const auto& [g, grp] : items)
        t.set(g, grp);
    return t;
}

HomologyTable trefoil_table() {
    return table_of({{{3, 7}, Z}, {{3, 3}, Z}, {{-1, -1}, Z}, {{-3, -5}, Z2}, {{-3, -9}, Z}});
}

HomologyTable hopf_table() {
    return table_of({{{2, 6}, Z}, {{2, 2}, Z}, {{-2, -2}, Z}, {{-2, -6}, Z}});
}

HomologyTable t2_11_table() {
    return table_of({{{11, 15}, Z},   {{11, 11}, Z},   {{7, 7}, Z},     {{5, 3}, Z2},
                     {{3, -1}, Z},    {{5, -1}, Z},    {{1, -5}, Z2},   {{-1, -9}, Z},
                     {{1, -9}, Z},    {{-3, -13}, Z2}, {{-5, -17}, Z},  {{-3, -17}, Z},
                     {{-7, -21}, Z2}, {{-9, -25}, Z},  {{-7, -25}, Z},  {{-11, -29}, Z2},
                     {{-11, -33}, Z}});
}

HomologyTable t2_12_table() {
    return table_of({{{12, 16}, Z},   {{12, 12}, Z},   {{8, 8}, Z},      {{6, 4}, Z2},
                     {{4, 0}, Z},     {{6, 0}, Z},     {{2, -4}, Z2},    {{0, -8}, Z},
                     {{2, -8}, Z},    {{-2, -12}, Z2}, {{-4, -16}, Z},   {{-2, -16}, Z},
                     {{-6, -20}, Z2}, {{-8, -24}, Z},  {{-6, -24}, Z},   {{-10, -28}, Z2},
                     {{-12, -32}, Z}, {{-10, -32}, Z}, {{-12, -36}, Z}});
}

Laurent trefoil_reduced_expected() {
    Laurent p;
    p.add_term(1, -7);
    p.add_term(-1, -3);
    p.add_term(-1, 5);
    return p;
}

Laurent trefoil_unreduced_expected() {
    Laurent p;
    p.add_term(-1, -9);
    p.add_term(1, -1);
    p.add_term(1, 3);
    p.add_term(1, 7);
    return p;
}

struct Harness {
    int failures = 0;
    // shared across criteria
    std::map<int, HomologyTable> torus_tables;
    std::vector<Diagram> random7;

    void run(int number, const std::string& name, double budget_seconds,
             const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (budget_seconds > 0 && elapsed >= budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
        }
        std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                    name.c_str(), elapsed, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
};

} // namespace

int main() {
    Harness h;

    std::mt19937 rng(0x5eed0001u);
    for (int i = 0; i < 100; ++i)
        h.random7.push_back(random_diagram(rng, 7));

    h.run(1, "trefoil bracket via all three evaluators", 1.0, [](std::string& detail) {
        Diagram trefoil = reference_trefoil();
        bool ok = bracket_reduced(trefoil) == trefoil_reduced_expected() &&
                  bracket_unreduced(trefoil) == trefoil_unreduced_expected() &&
                  bracket_enhanced(trefoil) == trefoil_unreduced_expected() &&
                  bracket_skein_oracle(trefoil) == trefoil_reduced_expected();
        if (!ok)
            detail = "bracket value mismatch";
        return ok;
    });

    h.run(2, "trefoil homology equals Table 1", 1.0, [](std::string& detail) {
        if (!(homology_table(reference_trefoil()) == trefoil_table())) {
            detail = "table mismatch";
            return false;
        }
        return true;
    });

    h.run(3, "Hopf link homology table", 0, [](std::string& detail) {
        if (!(homology_table(torus_2n(2)) == hopf_table())) {
            detail = "table mismatch";
            return false;
        }
        return true;
    });

    h.run(4, "torus tables equal the closed form for n=1..12", 60.0, [&](std::string& detail) {
        for (int n = 1; n <= 12; ++n) {
            h.torus_tables[n] = homology_table(torus_2n(n));
            if (!(h.torus_tables[n] == closed_form_t2n(n))) {
                detail = "mismatch at n=" + std::to_string(n);
                return false;
            }
        }
        if (!(h.torus_tables[11] == t2_11_table()) || !(h.torus_tables[12] == t2_12_table())) {
            detail = "published T(2,11)/T(2,12) tables not reproduced";
            return false;
        }
        return true;
    });

    h.run(5, "d o d = 0 for T(2,n) n<=12 and 100 random diagrams", 0, [&](std::string& detail) {
        for (int n = 1; n <= 12; ++n)
            if (!differentials_compose_to_zero(Complex(torus_2n(n)))) {
                detail = "T(2," + std::to_string(n) + ")";
                return false;
            }
        for (size_t i = 0; i < h.random7.size(); ++i)
            if (!differentials_compose_to_zero(Complex(h.random7[i]))) {
                detail = "random diagram #" + std::to_string(i);
                return false;
            }
        return true;
    });

    h.run(6, "Euler characteristic equals the unreduced bracket", 0, [&](std::string& detail) {
        std::vector<std::pair<std::string, Diagram>> corpus;
        corpus.emplace_back("trefoil", reference_trefoil());
        for (size_t i = 0; i < h.random7.size(); ++i)
            corpus.emplace_back("random #" + std::to_string(i), h.random7[i]);
        for (const auto& [name, d] : corpus)
            if (!(euler_characteristic(homology_table(d)) == bracket_unreduced(d))) {
                detail = name;
                return false;
            }
        for (int n = 1; n <= 12; ++n) {
            const HomologyTable& cached = h.torus_tables[n];
            if (!(euler_characteristic(cached) == bracket_unreduced(torus_2n(n)))) {
                detail = "T(2," + std::to_string(n) + ")";
                return false;
            }
        }
        return true;
    });

    h.run(7, "skein recursion equals the state sum (torus <=8 + 200 random)", 0,
          [](std::string& detail) {
              CheckReport r = verify_skein(8);
              if (!r.passed && !r.lines.empty())
                  detail = r.lines.front();
              return r.passed;
          });

    h.run(8, "R1 kinks shift homology by (+-1,+-3) on O, Hopf, trefoil", 0,
          [](std::string& detail) {
              CheckReport r = verify_r1(0);
              if (!r.passed && !r.lines.empty())
                  detail = r.lines.front();
              return r.passed;
          });

    h.run(9, "long-exact-sequence rank sums and corollary isomorphisms, T(2,2..8)", 0,
          [](std::string& detail) {
              CheckReport r = verify_les(8);
              if (!r.passed && !r.lines.empty())
                  detail = r.lines.front();
              return r.passed;
          });

    h.run(10, "homology invariant under crossing reordering", 0, [](std::string& detail) {
        CheckReport r = verify_order(6);
        if (!r.passed && !r.lines.empty())
            detail = r.lines.front();
        return r.passed;
    });

    if (h.failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
}
