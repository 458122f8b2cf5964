#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubeprog/arith.hpp"
#include "cubeprog/elliptic.hpp"

namespace cubeprog {

/// One bundled example row: a rational point of infinite order on E^D.
struct TableRow {
    Integer D;
    Rational x, y;

    Point<Rational> point() const { return Point<Rational>(x, y); }
};

// The 18 bundled witness rows (|D| <= 30), compiled in; identical to
// data/table_s5.csv.
const std::vector<TableRow>& witness_table();

std::optional<TableRow> witness_for(const Integer& D);

// Parse "D,x,y" CSV (header required, fractions as p/q).
std::vector<TableRow> load_table_csv(std::istream& in);
std::vector<TableRow> load_table_csv_file(const std::string& path);

struct RowCheck {
    Integer D;
    bool on_curve = false;
    bool infinite_order = false;
    bool ap_valid = false;
    bool nontrivial = false;

    bool pass() const { return on_curve && infinite_order && ap_valid && nontrivial; }
};

RowCheck check_row(const TableRow& row);

// Check every bundled row; `threads` caps the worker count (0 = run
// sequentially). The result order always matches the table.
std::vector<RowCheck> verify_table(int threads = 0);

}  // namespace cubeprog
