#include "khoma/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>

#include "khoma/bracket.hpp"
#include "khoma/homology.hpp"
#include "khoma/parallel.hpp"
#include "khoma/torus.hpp"

namespace khoma {

Diagram reference_trefoil() {
    return parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
}

Diagram trefoil_r2() {
    // torus_2n(3) with the left closure strand pushed across the right one
    // through the outer face (strand pieces 7-9, 10-12).
    return parse_pd("X(12,9,3,4) X(4,3,5,6) X(6,5,7,10) X(10,8,11,7) X(11,8,12,9)");
}

Diagram hopf_r2() {
    return parse_pd("X(10,7,3,4) X(4,3,5,8) X(8,6,9,5) X(9,6,10,7)");
}

namespace {

constexpr unsigned kD2Seed = 0x5eed0001u;
constexpr unsigned kSkeinSeed = 0x5eed0002u;
constexpr unsigned kOrderSeed = 0x5eed0003u;

std::string describe(const std::string& what, int i) {
    return what + " #" + std::to_string(i);
}

// Diagrams every suite can assume exist: the named fixtures plus torus links.
std::vector<std::pair<std::string, Diagram>> small_corpus(int max_crossings) {
    std::vector<std::pair<std::string, Diagram>> out;
    out.emplace_back("unknot O", parse_pd("O"));
    for (int n = 1; n <= max_crossings; ++n)
        out.emplace_back("T(2," + std::to_string(n) + ")", torus_2n(n));
    out.emplace_back("reference trefoil", reference_trefoil());
    if (max_crossings >= 4)
        out.emplace_back("Hopf R2 variant", hopf_r2());
    if (max_crossings >= 5)
        out.emplace_back("trefoil R2 variant", trefoil_r2());
    for (int f : {-2, 2})
        if (std::abs(f) <= max_crossings)
            out.emplace_back("unknot framed " + std::to_string(f), unknot_framed(f));
    return out;
}

} // namespace

CheckReport verify_d2(int max_n) {
    if (max_n <= 0)
        max_n = 12;
    CheckReport report;
    report.suite = "d2";
    std::vector<std::pair<std::string, Diagram>> items;
    for (int n = 1; n <= max_n; ++n)
        items.emplace_back("T(2," + std::to_string(n) + ")", torus_2n(n));
    std::mt19937 rng(kD2Seed);
    for (int i = 0; i < 100; ++i)
        items.emplace_back(describe("random diagram", i), random_diagram(rng, 7));

    std::vector<std::string> failures(items.size());
    parallel_for(items.size(), [&](size_t i) {
        Complex cx(items[i].second);
        if (!differentials_compose_to_zero(cx))
            failures[i] = items[i].first;
    });
    int checked = 0;
    for (const auto& f : failures) {
        ++checked;
        if (!f.empty())
            report.fail("d^2 != 0 on " + f);
    }
    report.note("d o d = 0 on " + std::to_string(checked) + " diagrams (torus n<=" +
                std::to_string(max_n) + ", 100 random)");
    return report;
}

CheckReport verify_euler(int max_n) {
    if (max_n <= 0)
        max_n = 8;
    CheckReport report;
    report.suite = "euler";
    std::vector<std::pair<std::string, Diagram>> items;
    for (int n = 1; n <= max_n; ++n)
        items.emplace_back("T(2," + std::to_string(n) + ")", torus_2n(n));
    items.emplace_back("reference trefoil", reference_trefoil());
    items.emplace_back("unknot O", parse_pd("O"));
    std::mt19937 rng(kD2Seed);
    for (int i = 0; i < 100; ++i)
        items.emplace_back(describe("random diagram", i), random_diagram(rng, 7));

    std::vector<std::string> failures(items.size());
    parallel_for(items.size(), [&](size_t i) {
        const Diagram& d = items[i].second;
        if (euler_characteristic(homology_table(d)) != bracket_unreduced(d))
            failures[i] = items[i].first;
    });
    for (const auto& f : failures)
        if (!f.empty())
            report.fail("Euler characteristic != unreduced bracket on " + f);
    report.note("Euler characteristic matches the unreduced bracket on " +
                std::to_string(items.size()) + " diagrams");
    return report;
}

CheckReport verify_r1(int max_n) {
    (void)max_n;
    CheckReport report;
    report.suite = "r1";
    std::vector<std::pair<std::string, Diagram>> items;
    items.emplace_back("unknot O", parse_pd("O"));
    items.emplace_back("Hopf link", torus_2n(2));
    items.emplace_back("trefoil", reference_trefoil());
    for (const auto& [name, d] : items)
        for (int sign : {+1, -1}) {
            R1ShiftReport r = verify_r1_shift(d, sign);
            if (!r.ok)
                for (const auto& m : r.mismatches)
                    report.fail(name + (sign > 0 ? " (+kink): " : " (-kink): ") + m);
        }
    report.note("R1 shift (+1,+3)/(-1,-3) verified on O, Hopf, trefoil over every strand");
    return report;
}

CheckReport verify_les(int max_n) {
    if (max_n <= 0)
        max_n = 8;
    CheckReport report;
    report.suite = "les";
    std::vector<std::pair<int, int>> cases; // (n, crossing)
    for (int n = 2; n <= max_n; ++n)
        for (int v = 0; v < n; ++v)
            cases.emplace_back(n, v);
    std::vector<std::vector<std::string>> failures(cases.size());
    parallel_for(cases.size(), [&](size_t i) {
        auto [n, v] = cases[i];
        Diagram d = torus_2n(n);
        LesReport ranks = les_rank_check(d, v);
        if (!ranks.ok)
            for (const auto& line : ranks.lines)
                failures[i].push_back("T(2," + std::to_string(n) + ") " + line);
        LesReport iso = corollary_iso_check(d, v);
        if (!iso.ok)
            for (const auto& line : iso.lines)
                failures[i].push_back("T(2," + std::to_string(n) + ") " + line);
    });
    for (const auto& batch : failures)
        for (const auto& line : batch)
            report.fail(line);
    report.note("exact-sequence rank sums and corollary isomorphisms hold for T(2,n), n=2.." +
                std::to_string(max_n) + ", at every crossing");
    return report;
}

CheckReport verify_closedform(int max_n) {
    if (max_n <= 0)
        max_n = 12;
    CheckReport report;
    report.suite = "closedform";
    std::vector<std::string> failures(static_cast<size_t>(max_n));
    parallel_for(static_cast<size_t>(max_n), [&](size_t i) {
        int n = static_cast<int>(i) + 1;
        if (!(homology_table(torus_2n(n)) == closed_form_t2n(n)))
            failures[i] = "T(2," + std::to_string(n) + ")";
    });
    for (const auto& f : failures)
        if (!f.empty())
            report.fail("homology differs from closed form for " + f);
    report.note("computed tables equal the closed form for T(2,n), n=1.." + std::to_string(max_n));
    for (int f = -6; f <= 6; ++f)
        if (!(homology_table(unknot_framed(f)) == closed_form_unknot_framed(f)))
            report.fail("framed unknot table differs at f=" + std::to_string(f));
    report.note("framed-unknot tables equal (f, 3f+-2) for |f| <= 6");
    return report;
}

CheckReport verify_skein(int max_n) {
    if (max_n <= 0)
        max_n = 8;
    CheckReport report;
    report.suite = "skein";
    std::vector<std::pair<std::string, Diagram>> items;
    for (int n = 1; n <= max_n; ++n)
        items.emplace_back("T(2," + std::to_string(n) + ")", torus_2n(n));
    std::mt19937 rng(kSkeinSeed);
    for (int i = 0; i < 200; ++i)
        items.emplace_back(describe("random diagram", i), random_diagram(rng, 8));
    std::vector<std::string> failures(items.size());
    parallel_for(items.size(), [&](size_t i) {
        const Diagram& d = items[i].second;
        if (bracket_skein_oracle(d) != bracket_reduced(d))
            failures[i] = items[i].first;
    });
    for (const auto& f : failures)
        if (!f.empty())
            report.fail("skein recursion != state sum on " + f);
    report.note("skein recursion equals the state sum on " + std::to_string(items.size()) +
                " diagrams (torus n<=" + std::to_string(max_n) + ", 200 random)");
    return report;
}

CheckReport verify_order(int max_n) {
    if (max_n <= 0)
        max_n = 6;
    CheckReport report;
    report.suite = "order";
    auto corpus = small_corpus(max_n);
    std::mt19937 rng(kOrderSeed);
    for (int i = 0; i < 5; ++i)
        corpus.emplace_back(describe("random diagram", i), random_diagram(rng, max_n));

    std::vector<std::vector<std::string>> failures(corpus.size());
    std::vector<std::vector<std::vector<int>>> perms(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) {
        int n = corpus[i].second.crossing_count();
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 5; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            perms[i].push_back(perm);
        }
    }
    parallel_for(corpus.size(), [&](size_t i) {
        const Diagram& d = corpus[i].second;
        HomologyTable base = homology_table(d);
        for (const auto& perm : perms[i]) {
            if (!(homology_table(permute_crossings(d, perm)) == base)) {
                std::ostringstream os;
                os << "homology changed under crossing permutation of " << corpus[i].first;
                failures[i].push_back(os.str());
            }
        }
    });
    for (const auto& batch : failures)
        for (const auto& line : batch)
            report.fail(line);
    report.note("homology invariant under 5 random crossing orderings per diagram (" +
                std::to_string(corpus.size()) + " diagrams)");
    return report;
}

CheckReport run_suite(const std::string& name, int max_n) {
    if (name == "d2")
        return verify_d2(max_n);
    if (name == "euler")
        return verify_euler(max_n);
    if (name == "r1")
        return verify_r1(max_n);
    if (name == "les")
        return verify_les(max_n);
    if (name == "closedform")
        return verify_closedform(max_n);
    if (name == "skein")
        return verify_skein(max_n);
    if (name == "order")
        return verify_order(max_n);
    throw error("unknown verification suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"d2", "euler", "r1", "les", "closedform", "skein", "order"};
}

} // namespace khoma
