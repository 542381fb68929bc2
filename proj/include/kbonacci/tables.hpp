#pragma once

// Embedded reference count tables for k = 4 and their bit-exact
// verification: every cell is recomputed independently by the
// closed-form series and by the block engine and compared against the
// embedded data.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "kbonacci/counting.hpp"
#include "kbonacci/words.hpp"

namespace kbonacci {

struct TableSpec {
    std::string id;
    int k = 4;
    int row_lo = 0;
    int row_hi = 0;
    std::vector<Word> factors;
    std::vector<std::string> labels;
    // Column grouping for rendering: (group label, column span).
    std::vector<std::pair<std::string, int>> groups;
};

// The three embedded tables: digits-k4, B1-k4, len2-mixed-k4.
const std::vector<TableSpec>& appendix_tables();

// Lookup by id; throws OutOfRange for unknown ids.
const TableSpec& table_spec(const std::string& id);

// Embedded reference CSV: header "n,<label>,...", one row per n.
const std::string& golden_csv(const std::string& id);

// Digit rendering used in column labels: 0-9, then a = 10 .. d = 13.
char digit_alias(Digit d);
std::string factor_label(const Word& w);

// values[r][c] = count of factors[c] in the iterate row_lo + r.
std::vector<std::vector<mpz_class>> table_values(const TableSpec& spec,
                                                 Engine engine);

std::string render_table_csv(const TableSpec& spec, Engine engine);
std::string render_table_markdown(const TableSpec& spec, Engine engine);

struct TableVerifyResult {
    std::string id;
    bool pass = false;
    int cells = 0;
    std::vector<std::string> mismatches;
};

// Recomputes the table with both the closed-form and the block engine
// and compares every cell of both against the embedded reference.
TableVerifyResult verify_table(const TableSpec& spec);

}  // namespace kbonacci
