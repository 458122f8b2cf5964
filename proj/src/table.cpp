#include "cubeprog/table.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cubeprog/progression.hpp"

namespace cubeprog {

namespace {

struct RawRow {
    const char* D;
    const char* x;
    const char* y;
};

// Infinite-order points on E^D: y^2 = x^3 - 27 D^3, one per D with a
// known witness in |D| <= 30.
constexpr RawRow kRows[] = {
    {"-30", "-54", "756"},
    {"-26", "-26", "676"},
    {"-23", "987505/24336", "-2386987127/3796416"},
    {"-21", "189", "2646"},
    {"-19", "-38", "361"},
    {"-11", "-6", "189"},
    {"-7", "7", "98"},
    {"-6", "9", "81"},
    {"2", "10", "28"},
    {"7", "1785/4", "75411/8"},
    {"10", "946/9", "28756/27"},
    {"11", "178849/400", "-75621007/8000"},
    {"14", "217", "3185"},
    {"19", "1173649/2025", "1270868732/91125"},
    {"21", "126", "-1323"},
    {"22", "22825/36", "-3446443/216"},
    {"23", "4655599441/56851600", "-201357032252761/428661064000"},
    {"26", "28249/100", "4697693/1000"},
};

}  // namespace

const std::vector<TableRow>& witness_table() {
    static const std::vector<TableRow> table = [] {
        std::vector<TableRow> rows;
        rows.reserve(std::size(kRows));
        for (const RawRow& r : kRows) {
            rows.push_back(TableRow{*parse_integer(r.D), *parse_rational(r.x), *parse_rational(r.y)});
        }
        return rows;
    }();
    return table;
}

std::optional<TableRow> witness_for(const Integer& D) {
    for (const TableRow& row : witness_table()) {
        if (row.D == D) return row;
    }
    return std::nullopt;
}

std::vector<TableRow> load_table_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "D,x,y") {
        throw std::invalid_argument("table csv: expected header 'D,x,y'");
    }
    std::vector<TableRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string fd, fx, fy;
        if (!std::getline(ls, fd, ',') || !std::getline(ls, fx, ',') || !std::getline(ls, fy)) {
            throw std::invalid_argument("table csv: malformed line " + std::to_string(lineno));
        }
        auto D = parse_integer(fd);
        auto x = parse_rational(fx);
        auto y = parse_rational(fy);
        if (!D || !x || !y) {
            throw std::invalid_argument("table csv: bad numeric field on line " +
                                        std::to_string(lineno));
        }
        rows.push_back(TableRow{*D, *x, *y});
    }
    return rows;
}

std::vector<TableRow> load_table_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("table csv: cannot open " + path);
    return load_table_csv(in);
}

RowCheck check_row(const TableRow& row) {
    RowCheck out;
    out.D = row.D;
    Curve twist = curve_E_twist(row.D);
    Point<Rational> p = row.point();
    out.on_curve = is_on_curve(twist, p);
    if (!out.on_curve) return out;
    out.infinite_order = !point_order(twist, p).has_value();
    APTriple<QuadElem> ap = ap_from_twist_point(row.D, p);
    out.ap_valid = is_ap(ap);
    out.nontrivial = !is_trivial_ap(ap);
    return out;
}

std::vector<RowCheck> verify_table(int threads) {
    const std::vector<TableRow>& rows = witness_table();
    std::vector<RowCheck> results(rows.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < rows.size(); ++i) results[i] = check_row(rows[i]);
        return results;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), rows.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < rows.size(); i += workers) {
                results[i] = check_row(rows[i]);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace cubeprog
