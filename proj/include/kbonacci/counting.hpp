#pragma once

// Occurrence counting c(B; n) = |W_n|_B by three independent engines:
// a naive scan over a materialized iterate, a junction-aware block
// decomposition counter that never materializes, and the exact
// per-shape recurrences. Engines agree wherever more than one applies.

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "kbonacci/errors.hpp"
#include "kbonacci/words.hpp"

namespace kbonacci {

enum class Engine { naive, block, recurrence, closed_form };

const char* engine_name(Engine e);

// Parses "naive", "block", "rec"/"recurrence", "ogf"/"closed-form".
Engine parse_engine(const std::string& name);

struct OccurrenceQuery {
    KParam k;
    Word factor;  // non-empty
    int n = 0;
};

struct CountSeries {
    int k;
    Word factor;
    std::vector<mpz_class> values;  // values[n] = c(factor; n), n = 0..upto
    Engine engine;
};

// Number of (possibly overlapping) start positions of b in w.
mpz_class count_naive(const Word& w, const Word& b);

// Exact counts for a batch of factors over any iterate, without
// materializing it. Per block (iterate index, shift offset) a summary
// holds the block's occurrence counts plus the boundary digits needed
// to count occurrences spanning junctions; summaries merge left to
// right and are memoized, so a whole series costs O(upto * k) merges.
class BlockCounter {
public:
    BlockCounter(KParam k, std::vector<Word> factors);  // EmptyFactor

    // counts[i] = c(factors[i]; n).
    std::vector<mpz_class> counts(int n);

    // series[i][n] = c(factors[i]; n) for n = 0..upto.
    std::vector<std::vector<mpz_class>> series(int upto);

private:
    struct Summary {
        Word prefix;  // first min(max_len - 1, length) digits
        Word suffix;  // last  min(max_len - 1, length) digits
        mpz_class length;
        std::vector<mpz_class> counts;  // parallel to factors_
    };

    const Summary& summarize(int index, Digit shift);
    void merge(Summary& acc, const Summary& next) const;

    int k_;
    std::vector<Word> factors_;
    int max_len_;
    Digit max_digit_;
    std::map<std::pair<int, Digit>, Summary> memo_;
};

mpz_class count_block(const OccurrenceQuery& q);

CountSeries count_block_series(KParam k, const Word& b, int upto);

// The unified digit recurrence: window over the previous counts, the
// shifted-digit term for d >= k, and the birth term for d < k.
CountSeries count_digit_rec(KParam k, Digit d, int upto);

// Length-2 recurrences, dispatched by the factor's template shape:
// second digit nonzero mod k delegates to the digit recurrence, (a.0)
// uses its three-case law, (a.k)-family words recurse through the
// shift recurrence, and (a.b) with a >= k < b is certified present by
// the block engine before its recurrence applies. Words matching no
// shape (hence occurring nowhere) yield the all-zero series.
CountSeries count_factor2_rec(KParam k, const Word& b, int upto);

// Uniform dispatcher with engine provenance. The recurrence engine
// accepts factor lengths 1 and 2 only; the closed-form engine accepts
// digits and classified length-2 family members (k >= 3); naive and
// block accept any non-empty factor. Throws EngineInapplicable when
// the engine cannot handle the factor, SizeGuardExceeded when the
// naive engine would materialize past `guard`.
CountSeries count_series(KParam k, const Word& b, int upto, Engine engine,
                         std::uint64_t guard = kDefaultSizeGuard);

}  // namespace kbonacci
