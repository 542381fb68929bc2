// Acceptance gate: seven criteria, one "ACCEPTANCE <n> <name>: PASS/FAIL"
// line each and a final sentinel that CTest keys on. Every criterion also
// enforces its own wall-clock budget. Pass --extended for the large
// conjecture tier (k <= 6, factor length <= 5).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kbonacci/analysis.hpp"
#include "kbonacci/counting.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/factors.hpp"
#include "kbonacci/gf.hpp"
#include "kbonacci/tables.hpp"
#include "kbonacci/words.hpp"

namespace {

using namespace kbonacci;
using Clock = std::chrono::steady_clock;

struct Checker {
    long long checks = 0;
    std::vector<std::string> failures;

    void pass() { ++checks; }
    void fail(const std::string& what) {
        ++checks;
        failures.push_back(what);
    }
    void expect(bool ok, const std::string& what) {
        if (ok) {
            pass();
        } else {
            fail(what);
        }
    }
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

// Counts of every window of length <= max_m, by one scan.
std::map<Word, long> window_counts(const Word& w, int max_m) {
    std::map<Word, long> counts;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t len = 1;
             len <= static_cast<std::size_t>(max_m) && i + len <= w.size();
             ++len)
            ++counts[Word(w.begin() + i, w.begin() + i + len)];
    return counts;
}

// 1. Every embedded reference table is reproduced bit-exactly by both the
// closed-form series and the block engine.
void golden_tables(Checker& c) {
    const std::map<std::string, int> expected_cells{
        {"digits-k4", 192}, {"B1-k4", 192}, {"len2-mixed-k4", 240}};
    for (const TableSpec& spec : appendix_tables()) {
        const TableVerifyResult r = verify_table(spec);
        c.expect(r.pass, spec.id + ": " + (r.mismatches.empty()
                                               ? "verification failed"
                                               : r.mismatches.front()));
        c.expect(r.cells == expected_cells.at(spec.id),
                 spec.id + ": unexpected cell count " + std::to_string(r.cells));
    }
}

// 2. Engine agreement: naive = block on every factor of length <= 3 of
// W_12 for k in {3,4,5}, and block = recurrence = closed-form series on
// digits <= 12 and all family length-2 words with digits <= 3k, n <= 25.
void engine_agreement(Checker& c) {
    for (int k : {3, 4, 5}) {
        std::set<Word> fs;
        for (int m = 1; m <= 3; ++m) {
            const auto f = fac_m_empirical(KParam(k), m, 12);
            fs.insert(f.begin(), f.end());
        }
        const std::vector<Word> factors(fs.begin(), fs.end());
        c.expect(factors.size() >= 20,
                 "k=" + std::to_string(k) + ": suspiciously few factors");
        BlockCounter bc(KParam(k), factors);
        const auto rows = bc.series(12);
        for (int n = 0; n <= 12; ++n) {
            const auto naive = window_counts(iterate(KParam(k), n), 3);
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const auto it = naive.find(factors[i]);
                const long scanned = it == naive.end() ? 0 : it->second;
                if (rows[i][n] == scanned) {
                    c.pass();
                } else {
                    c.fail("naive/block disagree at k=" + std::to_string(k) +
                           ", n=" + std::to_string(n) + ", factor " +
                           to_string(factors[i]));
                }
            }
        }

        for (Digit d = 0; d <= 12; ++d) {
            const auto rec = count_digit_rec(KParam(k), d, 25).values;
            const auto blk = count_block_series(KParam(k), Word{d}, 25).values;
            const auto ogf = series(ogf_digit(KParam(k), d), 25);
            const std::string tag =
                "k=" + std::to_string(k) + ", digit " + std::to_string(d);
            c.expect(rec == blk, tag + ": recurrence != block");
            c.expect(rec == ogf, tag + ": recurrence != closed form");
        }
        for (const EnumeratedFactor& ef : enumerate_fac2(KParam(k), 3 * k)) {
            const auto rec = count_factor2_rec(KParam(k), ef.word, 25).values;
            const auto blk = count_block_series(KParam(k), ef.word, 25).values;
            const auto ogf = series(ogf_factor2(KParam(k), ef.word), 25);
            const std::string tag =
                "k=" + std::to_string(k) + ", factor " + to_string(ef.word);
            c.expect(rec == blk, tag + ": recurrence != block");
            c.expect(rec == ogf, tag + ": recurrence != closed form");
        }
    }
}

// 3. Exact rational-function identities: the G/H relation, the shift
// identity on digits, the second-family reduction to a digit, and the
// first-family closed forms against the embedded mixed table columns.
void identity_suite(Checker& c) {
    for (int k = 2; k <= 8; ++k) {
        const AuxSequences aux = aux_sequences(KParam(k), 40);
        c.expect(series(H(k), 40) == aux.h,
                 "H series mismatch at k=" + std::to_string(k));
        c.expect(series(G(k), 40) == aux.g,
                 "G series mismatch at k=" + std::to_string(k));
        const RationalGF one{IntPoly{1}};
        const RationalGF yk{IntPoly::monomial(1, k)};
        c.expect(gf_equal(G(k), (one - yk) * H(k) - one),
                 "G/H relation fails at k=" + std::to_string(k));
    }
    for (int k = 3; k <= 6; ++k)
        for (Digit d = 0; d <= 12; ++d)
            c.expect(gf_equal(ogf_digit(KParam(k), d + k),
                              ogf_shift(KParam(k), ogf_digit(KParam(k), d))),
                     "shift identity fails at k=" + std::to_string(k) +
                         ", d=" + std::to_string(d));
    for (int k = 3; k <= 6; ++k)
        for (Digit i = 0; i <= 2; ++i)
            for (Digit b = 1; b <= k - 1; ++b)
                c.expect(gf_equal(ogf_factor2(KParam(k), Word{k * i, b + k * i}),
                                  ogf_digit(KParam(k), b + k * i)),
                         "digit reduction fails at k=" + std::to_string(k) +
                             ", i=" + std::to_string(i) +
                             ", b=" + std::to_string(b));

    const TableSpec& spec = table_spec("len2-mixed-k4");
    const auto rows = parse_csv(golden_csv("len2-mixed-k4"));
    for (std::size_t col = 5; col < spec.factors.size(); ++col) {
        const auto vals = series(ogf_factor2(KParam(4), spec.factors[col]),
                                 spec.row_hi);
        for (int r = 0; r <= spec.row_hi - spec.row_lo; ++r) {
            const int n = spec.row_lo + r;
            const mpz_class expected(rows[r + 1][col + 1]);
            c.expect(vals[n] == expected,
                     "closed form for " + to_string(spec.factors[col]) +
                         " off at n=" + std::to_string(n));
        }
    }
}

// 4. The empirical length-2 factor set is exactly the three families:
// everything extracted classifies, and every family member whose witness
// iterate is <= 14 really occurs in W_14.
void length2_characterization(Checker& c) {
    for (int k : {3, 4, 5}) {
        for (int n = 1; n <= 14; ++n)
            for (const Word& w : fac_m_empirical(KParam(k), 2, n))
                c.expect(classify2(KParam(k), w).family != Family::NotAFactor,
                         "unclassified factor " + to_string(w) + " in W_" +
                             std::to_string(n) + " at k=" + std::to_string(k));
        const auto fac14 = fac_m_empirical(KParam(k), 2, 14);
        for (const EnumeratedFactor& ef : enumerate_fac2(KParam(k), 20)) {
            if (!ef.cls.witness || *ef.cls.witness > 14) continue;
            const std::string tag =
                "k=" + std::to_string(k) + ", member " + to_string(ef.word);
            c.expect(fac14.count(ef.word) == 1, tag + " missing from W_14");
            c.expect(count_block({KParam(k), ef.word, 14}) >= 1,
                     tag + " has zero block count in W_14");
        }
    }
}

// One conjecture tier: every factor of W_12 of length <= max_len must
// yield a "holds" verdict, with the exponent cross-checked on digits.
void conjecture_tier(Checker& c, int k, int max_len) {
    const int iterate_n = 12;
    std::set<Word> fs;
    for (int m = 1; m <= max_len; ++m) {
        const auto f = fac_m_empirical(KParam(k), m, iterate_n);
        fs.insert(f.begin(), f.end());
    }
    const std::vector<Word> factors(fs.begin(), fs.end());
    c.expect(factors.size() >= 20,
             "k=" + std::to_string(k) + ": too few factors for a tier");
    const int global_cap = suggested_order_cap(KParam(k), iterate_n, iterate_n);
    const int global_terms = default_term_budget(global_cap);
    BlockCounter bc(KParam(k), factors);
    const auto rows = bc.series(global_terms - 1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const Word& f = factors[i];
        const auto& vals = rows[i];
        int fnz = -1;
        for (std::size_t n = 0; n < vals.size(); ++n)
            if (vals[n] != 0) {
                fnz = static_cast<int>(n);
                break;
            }
        if (fnz < 0 || fnz > iterate_n) {
            c.fail("factor " + to_string(f) + " does not occur by W_12 at k=" +
                   std::to_string(k));
            continue;
        }
        const Digit maxd = *std::max_element(f.begin(), f.end());
        const int cap = suggested_order_cap(KParam(k), maxd, fnz);
        const int terms = std::min(default_term_budget(cap), global_terms);
        const std::vector<mpz_class> prefix(vals.begin(), vals.begin() + terms);
        try {
            const ConjectureVerdict v =
                check_conjecture_series(KParam(k), prefix, cap);
            if (v.status == ConjectureVerdict::Status::holds) {
                c.pass();
                if (f.size() == 1)
                    c.expect(v.s == static_cast<int>(f[0] / k) + 1,
                             "digit " + to_string(f) + " at k=" +
                                 std::to_string(k) + ": unexpected exponent " +
                                 std::to_string(v.s));
            } else {
                c.fail("k=" + std::to_string(k) + " factor " + to_string(f) +
                       ": " + conjecture_status_name(v.status) +
                       (v.reason.empty() ? "" : " (" + v.reason + ")"));
            }
        } catch (const std::exception& e) {
            c.fail("k=" + std::to_string(k) + " factor " + to_string(f) +
                   ": " + e.what());
        }
    }
}

// 5. Desk-scale conjecture verification plus a synthetic negative control.
void conjecture_desk_scale(Checker& c, bool extended) {
    std::vector<mpz_class> geometric;
    mpz_class t = 1;
    for (int i = 0; i < 24; ++i) {
        geometric.push_back(t);
        t *= 2;
    }
    const ConjectureVerdict control = check_conjecture_series(
        KParam(3), geometric, default_order_cap(KParam(3)));
    c.expect(control.status == ConjectureVerdict::Status::fails,
             "negative control did not fail");
    c.expect(control.witness == IntPoly{-2, 1},
             "negative control witness is not x - 2");

    const std::vector<int> ks =
        extended ? std::vector<int>{3, 4, 5, 6} : std::vector<int>{3, 4};
    const int max_len = extended ? 5 : 3;
    for (int k : ks) conjecture_tier(c, k, max_len);
}

// 6. Growth law: the normalized count ratios flatten to within 1% over
// n in [40, 60], and the dominant roots carry 50 trusted digits.
void asymptotics(Checker& c) {
    const struct {
        int k;
        Digit d;
        int s;
    } cases[] = {{3, 0, 1}, {4, 0, 1}, {4, 5, 2}, {4, 8, 3}};
    for (const auto& cs : cases) {
        const AsymptoticReport rep =
            asymptotic_check(KParam(cs.k), cs.d, 40, 60, 0.01);
        const std::string tag =
            "k=" + std::to_string(cs.k) + ", d=" + std::to_string(cs.d);
        c.expect(rep.s == cs.s, tag + ": wrong polynomial exponent");
        c.expect(rep.max_relative_fluctuation < 0.01,
                 tag + ": fluctuation " +
                     std::to_string(rep.max_relative_fluctuation));
        c.expect(rep.converging, tag + ": not converging");
        c.expect(rep.gamma_estimate > 0.0, tag + ": nonpositive constant");
    }
    const DominantRoot r3 = dominant_root(KParam(3), 50);
    c.expect(to_decimal_string(r3.alpha, 15) == "1.61803398874989",
             "k=3 root digits off");
    c.expect(r3.residual < mpf_class("1e-45", 256), "k=3 residual too large");
    const DominantRoot r4 = dominant_root(KParam(4), 50);
    c.expect(to_decimal_string(r4.alpha, 15) == "1.83928675521416",
             "k=4 root digits off");
    c.expect(r4.residual < mpf_class("1e-45", 256), "k=4 residual too large");
}

// 7. Structural invariants over randomized (k, n) in the materializable
// range, fixed seed.
void structural_invariants(Checker& c) {
    std::mt19937_64 rng(0x20260816ULL);
    std::uniform_int_distribution<int> pick_k(2, 6);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = pick_k(rng);
        const auto f = bonacci(KParam(k), 36).values;
        int n_max = 1;
        for (int n = 1; n + k <= 36; ++n) {
            if (f[n + k] > 200000) break;
            n_max = n;
        }
        std::uniform_int_distribution<int> pick_n(1, n_max);
        const int n = pick_n(rng);
        const std::string tag =
            "k=" + std::to_string(k) + ", n=" + std::to_string(n);
        const Word w = iterate(KParam(k), n);

        Word glued;
        for (const BlockDescriptor& b : decompose(KParam(k), n)) {
            const Word part = shift(b.shift, iterate(KParam(k), b.index));
            glued.insert(glued.end(), part.begin(), part.end());
        }
        c.expect(glued == w, tag + ": decomposition does not concatenate back");

        IterateStream st = iterate_stream(KParam(k), n);
        c.expect(st.total_length() == f[n + k], tag + ": stream length wrong");
        Word streamed;
        for (Digit d = 0; st.next(d);) streamed.push_back(d);
        c.expect(streamed == w, tag + ": streamed digits differ");

        c.expect(w.back() == n, tag + ": last digit is not n");
        c.expect(std::count(w.begin(), w.end(), static_cast<Digit>(n)) == 1,
                 tag + ": largest digit not unique");

        const Word w1 = iterate(KParam(k), n + 1);
        c.expect(std::equal(w.begin(), w.end(), w1.begin()),
                 tag + ": not a prefix of the next iterate");

        std::uniform_int_distribution<std::size_t> pick_pos(0, w.size() - 1);
        const std::size_t pos = pick_pos(rng);
        std::uniform_int_distribution<std::size_t> pick_len(
            1, std::min<std::size_t>(3, w.size() - pos));
        const Word b(w.begin() + pos, w.begin() + pos + pick_len(rng));
        std::uniform_int_distribution<int> pick_m(1, k);
        const Digit m = pick_m(rng);
        c.expect(count_naive(shift(m, w), shift(m, b)) == count_naive(w, b),
                 tag + ": shifting changed an occurrence count");

        c.expect(project(KParam(k), w) == finite_kbonacci_iterate(KParam(k), n),
                 tag + ": projection differs from the finite iterate");
    }
}

}  // namespace

int main(int argc, char** argv) {
    bool extended = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--extended") extended = true;

    struct Item {
        int num;
        const char* name;
        std::function<void(Checker&)> body;
        double budget_s;
    };
    const std::vector<Item> items{
        {1, "golden-tables", golden_tables, 10.0},
        {2, "engine-agreement", engine_agreement, 120.0},
        {3, "identity-suite", identity_suite, 5.0},
        {4, "length2-characterization", length2_characterization, 30.0},
        {5, "conjecture-desk-scale",
         [extended](Checker& c) { conjecture_desk_scale(c, extended); },
         extended ? 0.0 : 300.0},
        {6, "asymptotics", asymptotics, 30.0},
        {7, "structural-invariants", structural_invariants, 60.0},
    };

    bool all_ok = true;
    for (const Item& item : items) {
        Checker c;
        const auto t0 = Clock::now();
        try {
            item.body(c);
        } catch (const std::exception& e) {
            c.fail(std::string("unexpected exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(Clock::now() - t0).count();
        if (item.budget_s > 0.0)
            c.expect(secs < item.budget_s,
                     "runtime " + std::to_string(secs) + " s exceeds budget " +
                         std::to_string(item.budget_s) + " s");
        const bool ok = c.failures.empty();
        all_ok = all_ok && ok;
        std::cout << "ACCEPTANCE " << item.num << " " << item.name << ": "
                  << (ok ? "PASS" : "FAIL") << " (" << c.checks << " checks, "
                  << std::fixed << std::setprecision(2) << secs << " s)"
                  << std::endl;
        const std::size_t shown = std::min<std::size_t>(c.failures.size(), 12);
        for (std::size_t i = 0; i < shown; ++i)
            std::cout << "  - " << c.failures[i] << std::endl;
        if (c.failures.size() > shown)
            std::cout << "  - ... and " << (c.failures.size() - shown)
                      << " more" << std::endl;
    }

    if (all_ok) {
        std::cout << "ALL ACCEPTANCE CRITERIA PASSED" << std::endl;
        return 0;
    }
    std::cout << "ACCEPTANCE SUITE FAILED" << std::endl;
    return 1;
}
