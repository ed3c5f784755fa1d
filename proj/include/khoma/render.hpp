#ifndef KHOMA_RENDER_HPP
#define KHOMA_RENDER_HPP

#include <string>

#include "khoma/homology.hpp"
#include "khoma/laurent.hpp"

namespace khoma {

enum class OutputFormat { json, csv, markdown, text };

OutputFormat parse_format(const std::string& name);

// Terms ascending by exponent, e.g. "A^-7 - A^-3 - A^5"; the zero polynomial
// prints "0" and a bare constant prints as an integer.
std::string polynomial_text(const Laurent& p);

// JSON object keyed by exponent-as-string, ascending: {"-7":1,"-3":-1,"5":-1}
std::string polynomial_json(const Laurent& p);

// "Z", "Z^2", "Z_2", "Z+Z_2", ...; empty string for the trivial group.
std::string group_text(const AbelianGroup& g);

// Tables mirror the paper layout: rows are b descending, columns a ascending.
std::string table_json(const HomologyTable& t);
std::string table_csv(const HomologyTable& t);
std::string table_markdown(const HomologyTable& t);
std::string table_text(const HomologyTable& t);

std::string render_table(const HomologyTable& t, OutputFormat format);

// Sparse triplet dump, one "row col value" line per entry.
std::string matrix_triplets(const DifferentialMatrix& m);

} // namespace khoma

#endif
