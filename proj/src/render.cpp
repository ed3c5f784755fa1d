#include "khoma/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace khoma {

OutputFormat parse_format(const std::string& name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "markdown")
        return OutputFormat::markdown;
    if (name == "text")
        return OutputFormat::text;
    throw error("unknown output format '" + name + "'");
}

std::string polynomial_text(const Laurent& p) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coeff] : p.terms()) {
        std::int64_t mag = coeff < 0 ? -coeff : coeff;
        if (first) {
            if (coeff < 0)
                os << '-';
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (exp == 0)
            os << mag;
        else if (mag == 1)
            os << "A^" << exp;
        else
            os << mag << "A^" << exp;
    }
    return os.str();
}

std::string polynomial_json(const Laurent& p) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [exp, coeff] : p.terms())
        j[std::to_string(exp)] = coeff;
    return j.dump();
}

std::string group_text(const AbelianGroup& g) {
    if (g.trivial())
        return "";
    std::ostringstream os;
    bool first = true;
    auto piece = [&](const std::string& s) {
        if (!first)
            os << '+';
        os << s;
        first = false;
    };
    if (g.free_rank == 1)
        piece("Z");
    else if (g.free_rank > 1)
        piece("Z^" + std::to_string(g.free_rank));
    for (std::int64_t t : g.torsion)
        piece("Z_" + std::to_string(t));
    return os.str();
}

namespace {

// Entries in display order: b descending, then a ascending.
std::vector<std::pair<Bigrade, AbelianGroup>> display_order(const HomologyTable& t) {
    std::vector<std::pair<Bigrade, AbelianGroup>> out(t.entries().begin(), t.entries().end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.first.b != y.first.b)
            return x.first.b > y.first.b;
        return x.first.a < y.first.a;
    });
    return out;
}

struct Grid {
    std::vector<int> as; // ascending
    std::vector<int> bs; // descending
};

Grid grid_of(const HomologyTable& t) {
    std::set<int> as, bs;
    for (const auto& [g, grp] : t.entries()) {
        as.insert(g.a);
        bs.insert(g.b);
    }
    Grid grid;
    grid.as.assign(as.begin(), as.end());
    grid.bs.assign(bs.rbegin(), bs.rend());
    return grid;
}

} // namespace

std::string table_json(const HomologyTable& t) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [g, grp] : display_order(t)) {
        nlohmann::ordered_json e;
        e["a"] = g.a;
        e["b"] = g.b;
        e["free"] = grp.free_rank;
        e["torsion"] = grp.torsion;
        entries.push_back(std::move(e));
    }
    nlohmann::ordered_json j;
    j["entries"] = std::move(entries);
    return j.dump();
}

std::string table_csv(const HomologyTable& t) {
    Grid grid = grid_of(t);
    std::ostringstream os;
    os << "b\\a";
    for (int a : grid.as)
        os << ',' << a;
    os << '\n';
    for (int b : grid.bs) {
        os << b;
        for (int a : grid.as)
            os << ',' << group_text(t.at(Bigrade{a, b}));
        os << '\n';
    }
    return os.str();
}

std::string table_markdown(const HomologyTable& t) {
    Grid grid = grid_of(t);
    std::ostringstream os;
    os << "| b \\ a |";
    for (int a : grid.as)
        os << ' ' << a << " |";
    os << '\n';
    os << "| --- |";
    for (size_t i = 0; i < grid.as.size(); ++i)
        os << " --- |";
    os << '\n';
    for (int b : grid.bs) {
        os << "| " << b << " |";
        for (int a : grid.as) {
            std::string cell = group_text(t.at(Bigrade{a, b}));
            os << ' ' << (cell.empty() ? " " : cell) << " |";
        }
        os << '\n';
    }
    return os.str();
}

std::string table_text(const HomologyTable& t) {
    if (t.empty())
        return "(trivial)\n";
    Grid grid = grid_of(t);
    size_t width = 7;
    for (const auto& [g, grp] : t.entries())
        width = std::max(width, group_text(grp).size() + 1);
    for (int a : grid.as)
        width = std::max(width, std::to_string(a).size() + 1);
    std::ostringstream os;
    auto cell = [&](const std::string& s) {
        os << s;
        for (size_t i = s.size(); i < width; ++i)
            os << ' ';
    };
    cell("b \\ a");
    for (int a : grid.as)
        cell(std::to_string(a));
    os << '\n';
    for (int b : grid.bs) {
        cell(std::to_string(b));
        for (int a : grid.as)
            cell(group_text(t.at(Bigrade{a, b})));
        os << '\n';
    }
    return os.str();
}

std::string render_table(const HomologyTable& t, OutputFormat format) {
    switch (format) {
    case OutputFormat::json:
        return table_json(t);
    case OutputFormat::csv:
        return table_csv(t);
    case OutputFormat::markdown:
        return table_markdown(t);
    case OutputFormat::text:
        return table_text(t);
    }
    throw error("unreachable");
}

std::string matrix_triplets(const DifferentialMatrix& m) {
    std::vector<MatrixEntry> sorted = m.entries;
    std::sort(sorted.begin(), sorted.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return std::tie(a.row, a.col) < std::tie(b.row, b.col);
    });
    std::ostringstream os;
    for (const auto& e : sorted)
        os << e.row << ' ' << e.col << ' ' << static_cast<int>(e.value) << '\n';
    return os.str();
}

} // namespace khoma
