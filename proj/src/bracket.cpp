#include "khoma/bracket.hpp"

#include <unordered_map>
#include <vector>

#include "khoma/parallel.hpp"

namespace khoma {

namespace {

void check_state_space(const Diagram& d) {
    if (d.crossing_count() > kMaxCrossings)
        throw error("state enumeration limited to " + std::to_string(kMaxCrossings) +
                    " crossings");
}

// Sum over all Kauffman states of A^sigma * weight^(|D_s| - offset).
Laurent state_sum(const Diagram& d, int offset) {
    check_state_space(d);
    int n = d.crossing_count();
    std::uint32_t states = 1u << n;

    int chunks = std::min<std::uint32_t>(static_cast<std::uint32_t>(4 * thread_count()), states);
    std::vector<Laurent> partial(static_cast<size_t>(chunks));
    Laurent weight = Laurent::circle_weight();
    parallel_for(static_cast<size_t>(chunks), [&](size_t chunk) {
        std::uint32_t lo = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(states) * chunk) / static_cast<std::uint64_t>(chunks));
        std::uint32_t hi = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(states) * (chunk + 1)) / static_cast<std::uint64_t>(chunks));
        Laurent acc;
        for (std::uint32_t bits = lo; bits < hi; ++bits) {
            KauffmanState s{bits, n};
            Resolution r = resolve(d, s);
            acc += Laurent::monomial(1, s.sigma()) * weight.pow(r.circle_count - offset);
        }
        partial[chunk] = std::move(acc);
    });
    Laurent total;
    for (const auto& p : partial)
        total += p;
    return total;
}

} // namespace

Laurent bracket_reduced(const Diagram& d) {
    if (d.empty())
        throw error("reduced bracket of the empty diagram is undefined");
    return state_sum(d, 1);
}

Laurent bracket_unreduced(const Diagram& d) {
    return state_sum(d, 0);
}

Laurent bracket_enhanced(const Diagram& d) {
    check_state_space(d);
    int n = d.crossing_count();
    std::uint32_t states = 1u << n;
    Laurent total;
    for (std::uint32_t bits = 0; bits < states; ++bits) {
        KauffmanState s{bits, n};
        Resolution r = resolve(d, s);
        int circles = r.circle_count;
        if (circles > 30)
            throw error("enhanced-state enumeration limited to 30 circles");
        int sign = circles % 2 == 0 ? 1 : -1;
        int sigma = s.sigma();
        for (std::uint32_t eps = 0; eps < (1u << circles); ++eps) {
            int minus = __builtin_popcount(eps);
            int tau = circles - 2 * minus;
            total.add_term(sign, sigma + 2 * tau);
        }
    }
    return total;
}

namespace {

Laurent skein(const Diagram& d, std::unordered_map<std::string, Laurent>& memo) {
    if (d.crossing_count() == 0)
        return Laurent::circle_weight().pow(d.free_circles() - 1);
    std::string key = to_pd_string(d);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    int last = d.crossing_count() - 1;
    Laurent value =
        Laurent::monomial(1, 1) * skein(canonical_pd(smooth_crossing(d, last, Marker::A)), memo) +
        Laurent::monomial(1, -1) * skein(canonical_pd(smooth_crossing(d, last, Marker::B)), memo);
    memo.emplace(std::move(key), value);
    return value;
}

} // namespace

Laurent bracket_skein_oracle(const Diagram& d) {
    if (d.empty())
        throw error("reduced bracket of the empty diagram is undefined");
    std::unordered_map<std::string, Laurent> memo;
    return skein(canonical_pd(d), memo);
}

} // namespace khoma
