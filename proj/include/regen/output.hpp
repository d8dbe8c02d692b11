#ifndef REGEN_OUTPUT_HPP
#define REGEN_OUTPUT_HPP

#include "regen/rational.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace regen {

/// One emitted tradeoff point. The exact columns always parse back to the
/// identical rationals; the decimal columns are plotting convenience.
struct SeriesPoint {
    std::string series;
    int k_hat = 0;
    Rational alpha;
    Rational gamma;
};

inline void write_points_csv(std::ostream& os, const std::vector<SeriesPoint>& pts,
                             int decimal_digits = 12) {
    os << "series,khat,alpha_exact,gamma_exact,alpha,gamma\n";
    for (const auto& p : pts)
        os << p.series << "," << p.k_hat << "," << to_fraction_string(p.alpha) << ","
           << to_fraction_string(p.gamma) << "," << to_decimal_string(p.alpha, decimal_digits)
           << "," << to_decimal_string(p.gamma, decimal_digits) << "\n";
}

inline nlohmann::json points_to_json(const std::vector<SeriesPoint>& pts,
                                     int decimal_digits = 12) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts)
        arr.push_back({{"series", p.series},
                       {"khat", p.k_hat},
                       {"alpha_exact", to_fraction_string(p.alpha)},
                       {"gamma_exact", to_fraction_string(p.gamma)},
                       {"alpha", to_decimal_string(p.alpha, decimal_digits)},
                       {"gamma", to_decimal_string(p.gamma, decimal_digits)}});
    return arr;
}

inline std::vector<SeriesPoint> read_points_csv(std::istream& is) {
    std::vector<SeriesPoint> out;
    std::string line;
    if (!std::getline(is, line)) return out;  // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        size_t start = 0;
        for (size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                cells.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        }
        if (cells.size() < 4) throw std::invalid_argument("malformed points CSV row: " + line);
        out.push_back({cells[0], std::stoi(cells[1]), parse_fraction(cells[2]),
                       parse_fraction(cells[3])});
    }
    return out;
}

}  // namespace regen

#endif
