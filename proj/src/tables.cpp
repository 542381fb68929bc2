#include "kbonacci/tables.hpp"

#include <sstream>

namespace kbonacci {

namespace {

const char* kDigitsK4 = R"(n,0,1,2,3,4,5,6,7,8,9,a,b
0,1,0,0,0,0,0,0,0,0,0,0,0
1,1,1,0,0,0,0,0,0,0,0,0,0
2,2,1,1,0,0,0,0,0,0,0,0,0
3,4,2,1,1,0,0,0,0,0,0,0,0
4,7,4,2,1,1,0,0,0,0,0,0,0
5,13,7,4,2,2,1,0,0,0,0,0,0
6,24,13,7,4,5,2,1,0,0,0,0,0
7,44,24,13,7,12,5,2,1,0,0,0,0
8,81,44,24,13,26,12,5,2,1,0,0,0
9,149,81,44,24,56,26,12,5,3,1,0,0
10,274,149,81,44,118,56,26,12,9,3,1,0
11,504,274,149,81,244,118,56,26,25,9,3,1
12,927,504,274,149,499,244,118,56,63,25,9,3
13,1705,927,504,274,1010,499,244,118,153,63,25,9
14,3136,1705,927,504,2027,1010,499,244,359,153,63,25
15,5768,3136,1705,927,4040,2027,1010,499,819,359,153,63
)";

const char* kB1K4 = R"(n,14,24,34,44,58,68,78,88,9c,ac,bc,cc
4,1,0,0,0,0,0,0,0,0,0,0,0
5,1,1,0,0,0,0,0,0,0,0,0,0
6,2,1,1,0,0,0,0,0,0,0,0,0
7,4,2,1,1,0,0,0,0,0,0,0,0
8,7,4,2,1,1,0,0,0,0,0,0,0
9,13,7,4,2,2,1,0,0,0,0,0,0
10,24,13,7,4,5,2,1,0,0,0,0,0
11,44,24,13,7,12,5,2,1,0,0,0,0
12,81,44,24,13,26,12,5,2,1,0,0,0
13,149,81,44,24,56,26,12,5,3,1,0,0
14,274,149,81,44,118,56,26,12,9,3,1,0
15,504,274,149,81,244,118,56,26,25,9,3,1
16,927,504,274,149,499,244,118,56,63,25,9,3
17,1705,927,504,274,1010,499,244,118,153,63,25,9
18,3136,1705,927,504,2027,1010,499,244,359,153,63,25
19,5768,3136,1705,927,4040,2027,1010,499,819,359,153,63
)";

// Three cells here (a8 at n=14, b8 at n=15, c8 at n=16) disagree with
// one widely circulated printing of this data, which shows 38. The
// value 36 is forced twice over: by direct enumeration of W_n, and by
// the columns' own shift structure (each of a8, b8, c8 repeats the 98
// column displaced by one, two, three rows, and 98 at n=13 is 36).
const char* kLen2MixedK4 = R"(n,10,20,30,40,50,54,64,74,84,94,98,a8,b8,c8,d8
1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
2,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0
3,2,1,0,0,0,0,0,0,0,0,0,0,0,0,0
4,3,2,1,0,0,0,0,0,0,0,0,0,0,0,0
5,6,3,2,1,0,0,0,0,0,0,0,0,0,0,0
6,11,6,3,2,1,1,0,0,0,0,0,0,0,0,0
7,20,11,6,3,2,3,1,0,0,0,0,0,0,0,0
8,37,20,11,6,3,8,3,1,0,0,0,0,0,0,0
9,68,37,20,11,6,18,8,3,1,0,0,0,0,0,0
10,125,68,37,20,11,40,18,8,3,1,1,0,0,0,0
11,230,125,68,37,20,86,40,18,8,3,4,1,0,0,0
12,423,230,125,68,37,181,86,40,18,8,13,4,1,0,0
13,778,423,230,125,68,375,181,86,40,18,36,13,4,1,0
14,1431,778,423,230,125,767,375,181,86,40,93,36,13,4,1
15,2632,1431,778,423,230,1553,767,375,181,86,228,93,36,13,4
16,4841,2632,1431,778,423,3118,1553,767,375,181,538,228,93,36,13
)";

std::vector<TableSpec> build_specs() {
    std::vector<TableSpec> specs;
    {
        TableSpec t;
        t.id = "digits-k4";
        t.k = 4;
        t.row_lo = 0;
        t.row_hi = 15;
        for (Digit d = 0; d <= 11; ++d) {
            t.factors.push_back({d});
            t.labels.push_back(factor_label({d}));
        }
        t.groups = {{"m=0", 4}, {"m=1", 4}, {"m=2", 4}};
        specs.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.id = "B1-k4";
        t.k = 4;
        t.row_lo = 4;
        t.row_hi = 19;
        for (long long i = 0; i <= 2; ++i) {
            for (long long a = 1; a <= 4; ++a) {
                const Word w{4 * i + a, 4 * i + 4};
                t.factors.push_back(w);
                t.labels.push_back(factor_label(w));
            }
        }
        t.groups = {{"i=0", 4}, {"i=1", 4}, {"i=2", 4}};
        specs.push_back(std::move(t));
    }
    {
        TableSpec t;
        t.id = "len2-mixed-k4";
        t.k = 4;
        t.row_lo = 1;
        t.row_hi = 16;
        for (long long a = 1; a <= 5; ++a) {
            const Word w{a, 0};
            t.factors.push_back(w);
            t.labels.push_back(factor_label(w));
        }
        for (long long i = 0; i <= 1; ++i) {
            for (long long a = 5; a <= 9; ++a) {
                const Word w{4 * i + a, 4 * i + 4};
                t.factors.push_back(w);
                t.labels.push_back(factor_label(w));
            }
        }
        t.groups = {{"B3", 5}, {"B1 i=0", 5}, {"B1 i=1", 5}};
        specs.push_back(std::move(t));
    }
    return specs;
}

}  // namespace

const std::vector<TableSpec>& appendix_tables() {
    static const std::vector<TableSpec> specs = build_specs();
    return specs;
}

const TableSpec& table_spec(const std::string& id) {
    for (const TableSpec& t : appendix_tables()) {
        if (t.id == id) return t;
    }
    throw OutOfRange("unknown table id '" + id +
                     "' (expected digits-k4, B1-k4, or len2-mixed-k4)");
}

const std::string& golden_csv(const std::string& id) {
    static const std::string digits = kDigitsK4;
    static const std::string b1 = kB1K4;
    static const std::string mixed = kLen2MixedK4;
    if (id == "digits-k4") return digits;
    if (id == "B1-k4") return b1;
    if (id == "len2-mixed-k4") return mixed;
    throw OutOfRange("unknown table id '" + id + "'");
}

char digit_alias(Digit d) {
    if (d < 0 || d > 13) throw OutOfRange("digit_alias: defined for 0..13 only");
    if (d <= 9) return static_cast<char>('0' + d);
    return static_cast<char>('a' + (d - 10));
}

std::string factor_label(const Word& w) {
    std::string out;
    for (Digit d : w) out.push_back(digit_alias(d));
    return out;
}

std::vector<std::vector<mpz_class>> table_values(const TableSpec& spec,
                                                 Engine engine) {
    const int rows = spec.row_hi - spec.row_lo + 1;
    std::vector<std::vector<mpz_class>> out(
        rows, std::vector<mpz_class>(spec.factors.size()));
    if (engine == Engine::block) {
        // One batched pass shares the block summaries across columns.
        BlockCounter bc(KParam(spec.k), spec.factors);
        const auto series = bc.series(spec.row_hi);
        for (int r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < spec.factors.size(); ++c)
                out[r][c] = series[c][spec.row_lo + r];
        return out;
    }
    for (std::size_t c = 0; c < spec.factors.size(); ++c) {
        const CountSeries cs =
            count_series(KParam(spec.k), spec.factors[c], spec.row_hi, engine);
        for (int r = 0; r < rows; ++r) out[r][c] = cs.values[spec.row_lo + r];
    }
    return out;
}

std::string render_table_csv(const TableSpec& spec, Engine engine) {
    const auto values = table_values(spec, engine);
    std::ostringstream oss;
    oss << "n";
    for (const std::string& label : spec.labels) oss << "," << label;
    oss << "\n";
    for (int r = 0; r < static_cast<int>(values.size()); ++r) {
        oss << spec.row_lo + r;
        for (const mpz_class& v : values[r]) oss << "," << v.get_str();
        oss << "\n";
    }
    return oss.str();
}

std::string render_table_markdown(const TableSpec& spec, Engine engine) {
    const auto values = table_values(spec, engine);
    std::ostringstream oss;
    oss << "|    |";
    for (const auto& [label, span] : spec.groups) {
        oss << " " << label << " |";
        for (int i = 1; i < span; ++i) oss << "  |";
    }
    oss << "\n|  n |";
    for (const std::string& label : spec.labels) oss << " " << label << " |";
    oss << "\n|---:|";
    for (std::size_t c = 0; c < spec.labels.size(); ++c) oss << "---:|";
    oss << "\n";
    for (int r = 0; r < static_cast<int>(values.size()); ++r) {
        oss << "| " << spec.row_lo + r << " |";
        for (const mpz_class& v : values[r]) oss << " " << v.get_str() << " |";
        oss << "\n";
    }
    return oss.str();
}

namespace {

std::vector<std::vector<mpz_class>> parse_csv(const std::string& csv) {
    std::vector<std::vector<mpz_class>> out;
    std::istringstream iss(csv);
    std::string line;
    bool header = true;
    while (std::getline(iss, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<mpz_class> row;
        std::istringstream cells(line);
        std::string cell;
        bool first = true;
        while (std::getline(cells, cell, ',')) {
            if (first) {
                first = false;  // the n column
                continue;
            }
            row.emplace_back(cell);
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace

TableVerifyResult verify_table(const TableSpec& spec) {
    TableVerifyResult result;
    result.id = spec.id;
    const auto reference = parse_csv(golden_csv(spec.id));
    const auto closed = table_values(spec, Engine::closed_form);
    const auto block = table_values(spec, Engine::block);
    const int rows = spec.row_hi - spec.row_lo + 1;
    if (static_cast<int>(reference.size()) != rows)
        throw OutOfRange("verify_table: reference row count mismatch");
    for (int r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < spec.factors.size(); ++c) {
            ++result.cells;
            const mpz_class& ref = reference[r][c];
            if (closed[r][c] != ref || block[r][c] != ref) {
                std::ostringstream oss;
                oss << "row n=" << spec.row_lo + r << ", column " << spec.labels[c]
                    << ": reference " << ref.get_str() << ", closed-form "
                    << closed[r][c].get_str() << ", block "
                    << block[r][c].get_str();
                result.mismatches.push_back(oss.str());
            }
        }
    }
    result.pass = result.mismatches.empty();
    return result;
}

}  // namespace kbonacci
