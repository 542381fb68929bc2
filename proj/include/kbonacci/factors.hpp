#pragma once

// Length-2 factor classification into the families B1/B2/B3, enumeration
// with witness iterates, occurrence-position typing, and empirical factor
// extraction from streamed iterates.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "kbonacci/errors.hpp"
#include "kbonacci/words.hpp"

namespace kbonacci {

enum class Family { B1, B2, B3, NotAFactor };

const char* family_name(Family f);

// Verdict for a length-2 word (x.y):
//   B1: (ki) ⊕ (a.k),  a >= 1, i >= 0, witness a+k-1+ik
//   B2: (ki) ⊕ (0.b),  1 <= b <= k-1,  witness b+ik
//   B3: (a.0),         a >= 1,         witness a+1   (k >= 3 only)
// The parameters reconstruct the word exactly.
struct Factor2Class {
    Family family = Family::NotAFactor;
    long long i = 0;
    long long a = 0;
    long long b = 0;
    std::optional<long long> witness;
};

// Template match of a length-2 word. Accepts k = 2 (B3 is rejected there:
// the digit 0 occurs only once in W^(2)). Throws WrongLength unless |b| = 2.
Factor2Class classify2(KParam k, const Word& b);

// Rebuilds the word from a classification (identity check helper).
Word factor_from_class(KParam k, const Factor2Class& cls);

struct EnumeratedFactor {
    Word word;
    Factor2Class cls;
    bool operator<(const EnumeratedFactor& o) const { return word < o.word; }
};

// All family members with every digit <= digit_bound, with witnesses.
std::vector<EnumeratedFactor> enumerate_fac2(KParam k, Digit digit_bound);

// The unique length-2 factor with a straddling occurrence in W_n:
// (0.n) when n < k, else (n-k+1 . k). n >= 1.
Word straddling_factor(KParam k, int n);

enum class OccurrenceTypeTag { included, bordering, straddling };

struct OccurrenceType {
    OccurrenceTypeTag tag;
    int j = -1;  // bordering type; -1 otherwise
};

// Types the length-m window of W_n starting at `position` against the
// top-level block decomposition: inside one block -> included; crossing
// the terminal junction -> straddling; otherwise bordering of type j,
// where W_j is the block containing the window start. OutOfRange when
// the window does not lie inside W_n.
OccurrenceType classify_occurrence(KParam k, int n, const mpz_class& position, int m);

// Exact factor set Fac_m(W_n) via a sliding window over the digit stream.
// Guarded by the same materialization bound as iterate (time, not memory).
std::set<Word> fac_m_empirical(KParam k, int m, int n,
                               std::uint64_t guard = kDefaultSizeGuard);

}  // namespace kbonacci
