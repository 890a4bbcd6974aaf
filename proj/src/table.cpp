#include "farhi/table.hpp"

#include <json.hpp>

#include "farhi/errors.hpp"

namespace farhi::table {

std::string instantiate_template(const std::string& poly_template, long b) {
    const std::string placeholder = "{b}";
    auto at = poly_template.find(placeholder);
    if (at == std::string::npos)
        throw Error("table template must contain the placeholder {b}");
    std::string text = poly_template;
    do {
        text.replace(at, placeholder.size(), std::to_string(b));
        at = text.find(placeholder);
    } while (at != std::string::npos);
    for (auto pos = text.find("+-"); pos != std::string::npos; pos = text.find("+-"))
        text.replace(pos, 2, "-");
    return text;
}

std::vector<TableCell> compute_table(const TableSpec& spec) {
    if (spec.b_from > spec.b_to || spec.k_from > spec.k_to)
        throw Error("table ranges must be nonempty");
    std::vector<TableCell> cells;
    for (long b = spec.b_from; b <= spec.b_to; ++b) {
        for (unsigned k = spec.k_from; k <= spec.k_to; ++k) {
            const std::string where =
                "table cell (b=" + std::to_string(b) + ", k=" + std::to_string(k) + ")";
            try {
                FarhiInstance inst(IntPoly::parse(instantiate_template(spec.poly_template, b)), k);
                PeriodReport report = least_period(inst);
                cells.push_back({b, k, report.f_text, report.T, report.T_factored});
            } catch (const HypothesisViolation& e) {
                throw HypothesisViolation(where + " failed: " + e.what(), e.shift());
            } catch (const Error& e) {
                throw Error(where + " failed: " + e.what());
            }
        }
    }
    return cells;
}

std::string render_table(const TableSpec& spec, const std::vector<TableCell>& cells) {
    const unsigned kcols = spec.k_to - spec.k_from + 1;
    if (spec.format == Format::kCsv) {
        std::string out = "b,k,T,T_factored\n";
        for (const TableCell& c : cells)
            out += std::to_string(c.b) + "," + std::to_string(c.k) + "," + to_decimal(c.T) +
                   "," + c.T_factored.to_string() + "\n";
        return out;
    }
    if (spec.format == Format::kJson) {
        nlohmann::json cells_json = nlohmann::json::array();
        for (const TableCell& c : cells) {
            nlohmann::json factored = nlohmann::json::array();
            for (const auto& [p, e] : c.T_factored.factors())
                factored.push_back(nlohmann::json::array({to_decimal(p), e}));
            cells_json.push_back({{"b", c.b},
                                  {"k", c.k},
                                  {"f", c.f_text},
                                  {"T", to_decimal(c.T)},
                                  {"T_factored", factored}});
        }
        nlohmann::json j{{"template", spec.poly_template},
                         {"b_from", spec.b_from},
                         {"b_to", spec.b_to},
                         {"k_from", spec.k_from},
                         {"k_to", spec.k_to},
                         {"cells", cells_json}};
        return j.dump(2) + "\n";
    }
    // markdown: rows are b, columns are k
    std::string out = "| f \\ k |";
    for (unsigned k = spec.k_from; k <= spec.k_to; ++k)
        out += " " + std::to_string(k) + " |";
    out += "\n|---|";
    for (unsigned k = spec.k_from; k <= spec.k_to; ++k) out += "---|";
    out += "\n";
    for (std::size_t row = 0; row < cells.size() / kcols; ++row) {
        out += "| " + cells[row * kcols].f_text + " |";
        for (unsigned col = 0; col < kcols; ++col)
            out += " " + cells[row * kcols + col].T_factored.to_string() + " |";
        out += "\n";
    }
    return out;
}

}  // namespace farhi::table
