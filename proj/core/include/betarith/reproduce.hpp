#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betarith/bounds.hpp"

namespace betarith {

/// A recomputed table: one row per printed row plus a pass flag against the printed value.
struct ReportTable {
    std::string name;
    std::string caption;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<bool> pass;
    std::vector<std::string> notes;  // per row, empty when the row passes
    double seconds = 0;

    bool all_pass() const;
    std::size_t failures() const;
    /// Header plus rows, with a trailing "check" column of PASS/FAIL.
    std::string to_csv() const;
};

struct ReproduceOptions {
    BoundsOptions bounds;
    bool slow = false;  // full product range for the z = 1 family
};

/// Printed bound for one polynomial in the two-positive and small-positive tables.
struct PrintedBound {
    CubicPolynomial poly;
    std::string printed;       // "1", "<=2"
    std::optional<int> exact;  // set for exact rows
    int min_lower = 0;         // lower bound stated alongside the table
    int max_upper = 0;
};

struct PrintedLowerBounds {
    long a = 0;
    int first = 0;
    int second = 0;
    int best = 0;
};

struct PrintedNormRow {
    long a = 0;
    long b = 0;
    double three_h = 0;
    double norm = 0;
    std::string argmin;  // compact form, e.g. "0•05352241"
    int lower = 0;
    int upper = 0;
};

/// Printed rows of tables 1 to 4 (sums and products, two-positive and small-positive families).
const std::vector<PrintedBound>& printed_bounds(int table);
/// Lower bounds for z = 2, a = 3..12.
const std::vector<PrintedLowerBounds>& printed_lower_bounds();
/// Norm-search upper bounds for thirteen two-negative units.
const std::vector<PrintedNormRow>& printed_norm_rows();
inline constexpr double kNormTolerance = 1e-3;

/// Tables 1 to 6. Throws std::out_of_range for other numbers.
ReportTable reproduce_table(int table, const ReproduceOptions& opts = {});
/// Every two-positive and small-positive unit with a <= 30: 1 <= L_add <= 2 and L_mul <= 4,
/// except X^3-2X^2-X+1 with 2 <= L_add <= 3 and 3 <= L_mul <= 5.
ReportTable reproduce_main_theorem(const ReproduceOptions& opts = {}, long a_max = 30);
/// X^3-aX^2-(a-1)X+1: L_add = 1 for 3 <= a <= 35; L_mul = 2 for 3 <= a <= 20 (108 with slow).
ReportTable reproduce_corollary(const ReproduceOptions& opts = {});
/// X^3-aX^2+bX+c for c = -1, 1 and |a|, |b| <= range: unit test, discriminant sign, family, property.
ReportTable classification_grid(long range = 10);

}  // namespace betarith
