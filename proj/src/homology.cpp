#include "khoma/homology.hpp"

#include <algorithm>
#include <sstream>

#include "khoma/parallel.hpp"

namespace khoma {

void HomologyTable::set(Bigrade g, AbelianGroup group) {
    if (group.trivial())
        entries_.erase(g);
    else
        entries_[g] = std::move(group);
}

void HomologyTable::add(Bigrade g, const AbelianGroup& group) {
    if (group.trivial())
        return;
    AbelianGroup& slot = entries_[g];
    slot.free_rank += group.free_rank;
    slot.torsion.insert(slot.torsion.end(), group.torsion.begin(), group.torsion.end());
    std::sort(slot.torsion.begin(), slot.torsion.end());
}

const AbelianGroup& HomologyTable::at(Bigrade g) const {
    static const AbelianGroup trivial_group;
    auto it = entries_.find(g);
    return it == entries_.end() ? trivial_group : it->second;
}

HomologyTable HomologyTable::shifted(int da, int db) const {
    HomologyTable out;
    for (const auto& [g, group] : entries_)
        out.set(Bigrade{g.a + da, g.b + db}, group);
    return out;
}

SparseIntMatrix to_sparse(const DifferentialMatrix& m) {
    SparseIntMatrix s;
    s.rows = m.rows;
    s.cols = m.cols;
    s.entries.reserve(m.entries.size());
    for (const auto& e : m.entries)
        s.entries.push_back(Triplet{e.row, e.col, e.value});
    return s;
}

namespace {

bool composes_to_zero(const DifferentialMatrix& d_out, const DifferentialMatrix& d_in) {
    std::vector<std::vector<MatrixEntry>> out_by_col(static_cast<size_t>(d_out.cols));
    for (const auto& e : d_out.entries)
        out_by_col[static_cast<size_t>(e.col)].push_back(e);
    std::vector<std::int64_t> acc(static_cast<size_t>(d_out.rows), 0);
    std::vector<std::vector<MatrixEntry>> in_by_col(static_cast<size_t>(d_in.cols));
    for (const auto& e : d_in.entries)
        in_by_col[static_cast<size_t>(e.col)].push_back(e);
    for (int col = 0; col < d_in.cols; ++col) {
        std::vector<int> touched;
        for (const auto& e1 : in_by_col[static_cast<size_t>(col)])
            for (const auto& e2 : out_by_col[static_cast<size_t>(e1.row)]) {
                if (acc[static_cast<size_t>(e2.row)] == 0)
                    touched.push_back(e2.row);
                acc[static_cast<size_t>(e2.row)] += static_cast<int>(e1.value) * e2.value;
            }
        bool bad = false;
        for (int r : touched) {
            if (acc[static_cast<size_t>(r)] != 0)
                bad = true;
            acc[static_cast<size_t>(r)] = 0;
        }
        if (bad)
            return false;
    }
    return true;
}

AbelianGroup group_from_ranks(int middle_dim, int out_rank, const SmithResult& in_snf) {
    AbelianGroup g;
    g.free_rank = middle_dim - out_rank - in_snf.rank();
    if (g.free_rank < 0)
        throw error("negative free rank: differentials are inconsistent");
    g.torsion = in_snf.torsion();
    return g;
}

} // namespace

AbelianGroup homology_group(const DifferentialMatrix& d_out, const DifferentialMatrix& d_in) {
    if (d_in.target != d_out.source || d_in.rows != d_out.cols)
        throw error("homology_group: basis mismatch between differentials");
    if (!composes_to_zero(d_out, d_in))
        throw error("homology_group: differentials do not compose to zero");
    SmithResult out_snf = smith_normal_form(to_sparse(d_out));
    SmithResult in_snf = smith_normal_form(to_sparse(d_in));
    return group_from_ranks(d_out.cols, out_snf.rank(), in_snf);
}

HomologyTable homology_table(const Complex& cx) {
    auto chains = cx.full_complex();
    std::vector<std::pair<int, std::vector<DifferentialMatrix>>> work;
    work.reserve(chains.size());
    for (auto& [b, chain] : chains)
        work.emplace_back(b, std::move(chain));

    std::vector<std::vector<std::pair<Bigrade, AbelianGroup>>> results(work.size());
    parallel_for(work.size(), [&](size_t i) {
        const auto& chain = work[i].second;
        std::vector<SmithResult> snf(chain.size());
        for (size_t k = 0; k < chain.size(); ++k)
            snf[k] = smith_normal_form(to_sparse(chain[k]));
        for (size_t k = 0; k < chain.size(); ++k) {
            const DifferentialMatrix& d_out = chain[k];
            int in_rank = 0;
            std::vector<std::int64_t> torsion;
            if (k > 0 && chain[k - 1].target == d_out.source) {
                in_rank = snf[k - 1].rank();
                torsion = snf[k - 1].torsion();
            }
            AbelianGroup g;
            g.free_rank = d_out.cols - snf[k].rank() - in_rank;
            if (g.free_rank < 0)
                throw error("negative free rank: differentials are inconsistent");
            g.torsion = std::move(torsion);
            if (!g.trivial())
                results[i].emplace_back(d_out.source, std::move(g));
        }
    });

    HomologyTable table;
    int n = cx.diagram().crossing_count();
    for (const auto& batch : results)
        for (const auto& [g, group] : batch) {
            if (((g.a - n) & 1) || ((g.b - n) & 1))
                throw error("bigrade parity violated");
            table.set(g, group);
        }
    return table;
}

HomologyTable homology_table(const Diagram& d) {
    return homology_table(Complex(d));
}

Laurent euler_characteristic(const HomologyTable& t) {
    Laurent chi;
    for (const auto& [g, group] : t.entries()) {
        int sign = ((g.b - g.a) / 2) % 2 == 0 ? 1 : -1;
        chi.add_term(sign * group.free_rank, g.b);
    }
    return chi;
}

R1ShiftReport verify_r1_shift(const Diagram& d, int sign) {
    R1ShiftReport report;
    int da = sign > 0 ? 1 : -1;
    int db = sign > 0 ? 3 : -3;
    HomologyTable expected = homology_table(d).shifted(da, db);
    auto check = [&](const Diagram& kinked, const std::string& where) {
        HomologyTable actual = homology_table(kinked);
        if (!(actual == expected)) {
            report.ok = false;
            report.mismatches.push_back("R1 shift mismatch at " + where);
        }
    };
    for (EdgeId e : d.edges())
        check(add_r1_kink(d, e, sign), "strand " + std::to_string(e));
    if (d.free_circles() > 0)
        check(add_r1_kink_on_free_circle(d, sign), "free circle");
    return report;
}

} // namespace khoma
