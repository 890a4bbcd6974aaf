#ifndef FARHI_TABLE_HPP
#define FARHI_TABLE_HPP

#include <string>
#include <vector>

#include "farhi/instance.hpp"

namespace farhi::table {

enum class Format { kMarkdown, kCsv, kJson };

/// Grid request: poly_template contains one "{b}" placeholder; both ranges
/// are inclusive and nonempty.
struct TableSpec {
    std::string poly_template;
    long b_from = 1, b_to = 6;
    unsigned k_from = 1, k_to = 6;
    Format format = Format::kMarkdown;
};

struct TableCell {
    long b;
    unsigned k;
    std::string f_text;
    Int T;
    arith::Factorization T_factored;
};

/// "{b}" substitution; normalizes "+-" so negative b keeps the text parseable.
std::string instantiate_template(const std::string& poly_template, long b);

/// All cells, ascending b then ascending k. A failing cell aborts with an
/// error naming (b, k).
std::vector<TableCell> compute_table(const TableSpec& spec);

/// Deterministic rendering; CSV uses header "b,k,T,T_factored" with LF ends.
std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells);

}  // namespace farhi::table

#endif
