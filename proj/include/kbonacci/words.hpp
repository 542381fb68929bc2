#pragma once

// Infinite-alphabet k-Bonacci words: the morphism phi_k, finite iterates
// W_n (materialized and streamed), their block decomposition, the shift
// operator, the mod-k projection, and the numeric companion sequences.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kbonacci/errors.hpp"

namespace kbonacci {

// Digits are semantically unbounded nonnegative integers. Desk-scale
// computations never push a digit past the iterate index (a few hundred),
// so they are stored as 64-bit integers; lengths and counts are mpz.
using Digit = std::int64_t;
using Word = std::vector<Digit>;

// Validated alphabet-block size. k >= 2 always; operations tied to the
// k >= 3 theory check their own bound and raise KTooSmall.
class KParam {
public:
    KParam(int k) : k_(k) {
        if (k < 2) throw OutOfRange("k must be >= 2, got " + std::to_string(k));
    }
    int value() const noexcept { return k_; }

private:
    int k_;
};

inline constexpr std::uint64_t kDefaultSizeGuard = 100'000'000;

struct BonacciNumbers {
    int k;
    std::vector<mpz_class> values;  // f_0 .. f_upto
};

struct AuxSequences {
    int k;
    std::vector<mpz_class> h;  // h_0 = 1, then 2^{n-1}, then k-term sums
    std::vector<mpz_class> g;  // g_0 = 0, same otherwise
};

// One block of the decomposition of W_n: the word shift ⊕ W_index.
// The terminal letter of the n < k branch is encoded as n ⊕ W_0.
struct BlockDescriptor {
    int index;
    Digit shift;
    bool operator==(const BlockDescriptor&) const = default;
};

// Image of a single digit under phi_k.
Word phi(KParam k, Digit d);

// Image of a word under phi_k (letterwise, concatenated).
Word phi_word(KParam k, const Word& w);

// W_n = phi_k^n(0), materialized. Throws SizeGuardExceeded if the length
// f_{n+k} exceeds `guard` digits (checked before allocation).
Word iterate(KParam k, int n, std::uint64_t guard = kDefaultSizeGuard);

// Lazy digit stream over W_n; O(n) memory, no materialization.
// Single consumer.
class IterateStream {
public:
    IterateStream(KParam k, int n);

    // Yields the next digit; returns false when W_n is exhausted.
    bool next(Digit& out);

    const mpz_class& total_length() const noexcept { return total_; }

private:
    int k_;
    mpz_class total_;
    std::vector<std::pair<Digit, int>> stack_;  // (digit, expansions left)
};

IterateStream iterate_stream(KParam k, int n);

// Block decomposition of W_n (n >= 1):
//   n <  k: W_{n-1} ... W_0, then the letter n (= n ⊕ W_0);
//   n >= k: W_{n-1} ... W_{n-k+1}, then k ⊕ W_{n-k}.
// Concatenating the described blocks digit-for-digit reproduces W_n.
std::vector<BlockDescriptor> decompose(KParam k, int n);

// Adds m to every digit; length preserved, occurrence counts transported.
Word shift(Digit m, const Word& w);

// Letterwise reduction mod k (maps W^(k) prefixes onto F^(k) prefixes).
Word project(KParam k, const Word& w);

// f_0 .. f_upto with f_0 = ... = f_{k-2} = 0, f_{k-1} = 1, k-term sums after.
BonacciNumbers bonacci(KParam k, int upto);

// The h/g companion sequences through index upto.
AuxSequences aux_sequences(KParam k, int upto);

// Independent generator of the finite-alphabet k-Bonacci iterate
// F_n = (0 -> 0(i+1), k-1 -> 0)^n (0). Used to validate the projection.
Word finite_kbonacci_iterate(KParam k, int n);

// Rendering: digits concatenated when all are <= 9, "·"-separated otherwise.
std::string to_string(const Word& w);

// Parses "9,8" (comma form) or "98"-style all-single-digit strings.
Word parse_word(const std::string& text);

}  // namespace kbonacci
