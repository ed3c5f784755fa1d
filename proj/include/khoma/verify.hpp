#ifndef KHOMA_VERIFY_HPP
#define KHOMA_VERIFY_HPP

#include <string>
#include <vector>

#include "khoma/diagram.hpp"

namespace khoma {

struct CheckReport {
    std::string suite;
    bool passed = true;
    std::vector<std::string> lines;

    void note(std::string line) { lines.push_back(std::move(line)); }
    void fail(std::string line) {
        passed = false;
        lines.push_back("FAIL: " + std::move(line));
    }
};

// Fixture diagrams.
Diagram reference_trefoil(); // the 3-crossing diagram pinning the A/B convention
Diagram trefoil_r2();        // trefoil with one strand pushed across another
Diagram hopf_r2();           // Hopf link with the same move applied

// Verification suites.  max_n <= 0 selects the per-suite default.
CheckReport verify_d2(int max_n);         // d o d = 0, torus family + random diagrams
CheckReport verify_euler(int max_n);      // Euler characteristic vs unreduced bracket
CheckReport verify_r1(int max_n);         // homology shift under kink insertion
CheckReport verify_les(int max_n);        // rank sums + corollary isomorphisms
CheckReport verify_closedform(int max_n); // computed tables vs closed form
CheckReport verify_skein(int max_n);      // skein recursion vs state sum
CheckReport verify_order(int max_n);      // crossing-order invariance

// Dispatch by suite name (d2, euler, r1, les, closedform, skein, order).
CheckReport run_suite(const std::string& name, int max_n);

std::vector<std::string> suite_names();

} // namespace khoma

#endif
