#pragma once

// Exact minimal-recurrence fitting, the denominator-power conjecture
// check (characteristic polynomial divides a power of the shifted
// Bonacci polynomial), the dominant root of x^{k-1} - ... - x - 1, and
// numerical growth-law reports for digit count sequences.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "kbonacci/counting.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/gf.hpp"
#include "kbonacci/words.hpp"

namespace kbonacci {

struct RecurrenceFit {
    int order = 0;
    // c_n = sum_{j=1}^{order} coefficients[j-1] * c_{n-j} for n >= order.
    std::vector<mpq_class> coefficients;
    // Primitive integer form of x^order - a_1 x^{order-1} - ... - a_order.
    IntPoly characteristic_polynomial;
    int fitted_from = 0;        // terms used for the fit proper
    int validated_through = 0;  // last index reproduced (held-out terms incl.)
};

// Minimal-order exact fit (Berlekamp-Massey over Q) using all terms,
// validated by requiring that refitting without the last 8 terms finds
// the same recurrence. Throws InsufficientTerms when the supplied terms
// cannot support fit plus validation, NoRecurrenceFound when order_cap
// is >= 0 and the minimal order exceeds it.
RecurrenceFit fit_recurrence(const std::vector<mpz_class>& values,
                             int order_cap = -1);
RecurrenceFit fit_recurrence(const CountSeries& series, int order_cap = -1);

struct ConjectureVerdict {
    enum class Status { holds, fails, inconclusive };
    Status status = Status::inconclusive;
    int s = 0;        // minimal exponent when holds
    IntPoly witness;  // factor coprime to the target polynomial when fails
    std::string reason;
    RecurrenceFit fit;
};

const char* conjecture_status_name(ConjectureVerdict::Status s);

int default_order_cap(KParam k);         // 3 * (k - 1)
int default_term_budget(int order_cap);  // 4 * order_cap + 8

// Order cap sized to one factor: covers the conjectured denominator
// power for its largest digit plus one spare power, and the recurrence
// delay forced by the leading zero run (a series whose first nonzero
// term sits at index w admits no recurrence of order <= w, and known
// closed forms push the delay as far as w + 2k - 2). Pass
// first_nonzero = -1 when the leading zero run is unknown.
int suggested_order_cap(KParam k, Digit max_digit, int first_nonzero);

// Fits the series and trial-divides the delay-stripped characteristic
// polynomial into powers of x^{k-1} - x^{k-2} - ... - 1, searching the
// exponent upward from the degree bound. k >= 3.
ConjectureVerdict check_conjecture_series(KParam k,
                                          const std::vector<mpz_class>& values,
                                          int order_cap);

// Block-engine series through `terms` values, then the series check.
ConjectureVerdict check_conjecture(KParam k, const Word& b, int terms,
                                   int order_cap);

struct DominantRoot {
    int k;
    int precision;       // requested decimal digits
    mpf_class alpha;     // the root of x^{k-1} - ... - x - 1 in (1, 2)
    mpf_class residual;  // |p(alpha)|
};

// Bracketed exact-rational bisection on (1, 2); p(1) = 2-k < 0 < 1 = p(2)
// pins the bracket. k >= 3.
DominantRoot dominant_root(KParam k, int precision = 50);

// "1.6180339887..." with `digits` significant digits.
std::string to_decimal_string(const mpf_class& x, int digits);

struct AsymptoticReport {
    int k;
    Digit d;
    int s;  // floor(d/k) + 1
    int n_lo;
    int n_hi;
    std::string alpha;                  // 50 digits
    std::vector<double> ratio_samples;  // c(d;n) / (n^{s-1} alpha^n)
    double gamma_estimate;              // last ratio sample
    // Largest |r_{n+1} - r_n| / r_n, over the whole window and over its
    // top quartile; `converging` compares the latter against tolerance.
    double max_relative_fluctuation;
    double tail_fluctuation;
    double tolerance;
    bool converging;
};

AsymptoticReport asymptotic_check(KParam k, Digit d, int n_lo, int n_hi,
                                  double tolerance = 0.01);

}  // namespace kbonacci
