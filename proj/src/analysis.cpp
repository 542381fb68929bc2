#include "kbonacci/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace kbonacci {

namespace {

// Minimal LFSR connection polynomial over Q: the shortest C with
// C[0] = 1 and sum_i C[i] * s[n-i] = 0 for every n >= deg-window.
// Returns (order L, connection coefficients C).
std::pair<int, std::vector<mpq_class>> berlekamp_massey(
    const std::vector<mpz_class>& s) {
    std::vector<mpq_class> C{1}, B{1};
    int L = 0, m = 1;
    mpq_class b = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        mpq_class delta = s[n];
        for (int i = 1; i <= L && i < static_cast<int>(C.size()); ++i)
            delta += C[i] * mpq_class(s[n - i]);
        if (delta == 0) {
            ++m;
            continue;
        }
        const mpq_class coef = delta / b;
        if (2 * L <= static_cast<int>(n)) {
            std::vector<mpq_class> T = C;
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
            L = static_cast<int>(n) + 1 - L;
            B = std::move(T);
            b = delta;
            m = 1;
        } else {
            if (C.size() < B.size() + m) C.resize(B.size() + m, 0);
            for (std::size_t i = 0; i < B.size(); ++i) C[i + m] -= coef * B[i];
            ++m;
        }
    }
    C.resize(L + 1, 0);
    return {L, std::move(C)};
}

IntPoly clear_to_primitive(const std::vector<mpq_class>& q) {
    mpz_class lcm = 1;
    for (const mpq_class& c : q) {
        mpz_class den = c.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> z(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        mpq_class scaled = q[i] * lcm;
        z[i] = scaled.get_num();
    }
    return primitive_part(IntPoly(std::move(z)));
}

}  // namespace

RecurrenceFit fit_recurrence(const std::vector<mpz_class>& values,
                             int order_cap) {
    const int n_terms = static_cast<int>(values.size());
    auto [order, conn] = berlekamp_massey(values);
    if (order_cap >= 0 && order > order_cap)
        throw NoRecurrenceFound("fit_recurrence: minimal order " +
                                std::to_string(order) + " exceeds cap " +
                                std::to_string(order_cap));
    if (2 * order + 4 > n_terms)
        throw InsufficientTerms("fit_recurrence: " + std::to_string(n_terms) +
                                " terms cannot support a fit of order " +
                                std::to_string(order));
    const int held_out = 8;
    if (n_terms - held_out < 2 * order + 4)
        throw InsufficientTerms(
            "fit_recurrence: too few terms to hold out " +
            std::to_string(held_out) + " for validation at order " +
            std::to_string(order));
    const std::vector<mpz_class> head(values.begin(), values.end() - held_out);
    auto [order2, conn2] = berlekamp_massey(head);
    if (order2 != order || conn2 != conn)
        throw InsufficientTerms(
            "fit_recurrence: held-out validation failed; the last " +
            std::to_string(held_out) + " terms changed the minimal fit");
    RecurrenceFit fit;
    fit.order = order;
    fit.coefficients.resize(order);
    for (int j = 1; j <= order; ++j) fit.coefficients[j - 1] = -conn[j];
    // Characteristic polynomial x^L * C(1/x), in ascending powers:
    // coefficient of x^{L-j} is C[j].
    std::vector<mpq_class> chi(order + 1);
    for (int j = 0; j <= order; ++j) chi[order - j] = conn[j];
    fit.characteristic_polynomial = clear_to_primitive(chi);
    fit.fitted_from = n_terms - held_out;
    fit.validated_through = n_terms - 1;
    return fit;
}

RecurrenceFit fit_recurrence(const CountSeries& series, int order_cap) {
    return fit_recurrence(series.values, order_cap);
}

const char* conjecture_status_name(ConjectureVerdict::Status s) {
    switch (s) {
        case ConjectureVerdict::Status::holds: return "holds";
        case ConjectureVerdict::Status::fails: return "fails";
        case ConjectureVerdict::Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

int default_order_cap(KParam k) { return 3 * (k.value() - 1); }

int default_term_budget(int order_cap) { return 4 * order_cap + 8; }

int suggested_order_cap(KParam k, Digit max_digit, int first_nonzero) {
    if (max_digit < 0) throw OutOfRange("suggested_order_cap: digit must be >= 0");
    const int kk = k.value();
    const int denominator_part =
        (static_cast<int>(max_digit / kk) + 2) * (kk - 1);
    // Numerator degrees run up to 2k-2 past the first nonzero index, so
    // the delay exponent of the minimal recurrence can too.
    const int delay_part = first_nonzero < 0 ? 0 : first_nonzero + 2 * kk;
    return std::max(denominator_part, delay_part);
}

ConjectureVerdict check_conjecture_series(KParam kp,
                                          const std::vector<mpz_class>& values,
                                          int order_cap) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("check_conjecture: requires k >= 3");
    if (order_cap < 1) throw OutOfRange("check_conjecture: order cap must be >= 1");
    ConjectureVerdict v;
    if (std::all_of(values.begin(), values.end(),
                    [](const mpz_class& z) { return z == 0; })) {
        v.reason = "series is identically zero";
        return v;
    }
    v.fit = fit_recurrence(values, order_cap);
    // Strip the delay factor x^e: it records nothing but the leading
    // zero run of the series and divides no power of the target.
    IntPoly chi = v.fit.characteristic_polynomial;
    while (chi.degree() >= 1 && chi.coeff(0) == 0)
        chi = divexact(chi, IntPoly::monomial(1, 1));
    if (chi.degree() < 1) {
        v.reason = "series has a polynomial generating function";
        return v;
    }
    const IntPoly target = reversal(bonacci_denominator(k - 1));
    const int deg_step = k - 1;
    const int s_lo = std::max(1, (chi.degree() + deg_step - 1) / deg_step);
    const int s_hi = std::max(s_lo, (order_cap + deg_step - 1) / deg_step);
    IntPoly power = poly_pow(target, s_lo);
    for (int s = s_lo; s <= s_hi; ++s) {
        if (poly_mod_primitive(power, chi).is_zero()) {
            v.status = ConjectureVerdict::Status::holds;
            v.s = s;
            return v;
        }
        power *= target;
    }
    // No exponent worked: expose the part of chi that no power of the
    // target can ever absorb.
    IntPoly rest = chi;
    for (;;) {
        const IntPoly g = poly_gcd(rest, target);
        if (g.degree() < 1) break;
        rest = divexact(rest, g);
    }
    if (rest.degree() >= 1) {
        v.status = ConjectureVerdict::Status::fails;
        v.witness = rest;
        v.reason = "characteristic polynomial has a factor coprime to the target";
    } else {
        v.reason = "no exponent within the order cap";
    }
    return v;
}

ConjectureVerdict check_conjecture(KParam kp, const Word& b, int terms,
                                   int order_cap) {
    if (terms < 1) throw OutOfRange("check_conjecture: terms must be >= 1");
    const CountSeries cs = count_block_series(kp, b, terms - 1);
    return check_conjecture_series(kp, cs.values, order_cap);
}

DominantRoot dominant_root(KParam kp, int precision) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("dominant_root: requires k >= 3");
    if (precision < 1) throw OutOfRange("dominant_root: precision must be >= 1");
    const IntPoly p = reversal(bonacci_denominator(k - 1));
    // p(1) = 2 - k < 0 and p(2) = 1 > 0 bracket the unique root in (1, 2).
    mpq_class lo = 1, hi = 2;
    const int iterations =
        static_cast<int>(std::ceil((precision + 3) * 3.3219281)) + 2;
    for (int it = 0; it < iterations; ++it) {
        mpq_class mid = (lo + hi) / 2;
        if (p.eval(mid) < 0) {
            lo = std::move(mid);
        } else {
            hi = std::move(mid);
        }
    }
    const int bits = static_cast<int>(std::ceil((precision + 10) * 3.3219281));
    DominantRoot root{k, precision, mpf_class(0, bits), mpf_class(0, bits)};
    root.alpha = mpf_class((lo + hi) / 2, bits);
    mpf_class acc(0, bits);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * root.alpha;
        acc += mpf_class(p.coeff(i), bits);
    }
    root.residual = abs(acc);
    return root;
}

std::string to_decimal_string(const mpf_class& x, int digits) {
    if (digits < 1) throw OutOfRange("to_decimal_string: digits must be >= 1");
    mp_exp_t exp = 0;
    std::string mant = x.get_str(exp, 10, digits);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    if (mant.empty()) return "0";
    std::ostringstream oss;
    oss << sign;
    if (exp <= 0) {
        oss << "0." << std::string(static_cast<std::size_t>(-exp), '0') << mant;
    } else if (static_cast<std::size_t>(exp) >= mant.size()) {
        oss << mant << std::string(static_cast<std::size_t>(exp) - mant.size(), '0');
    } else {
        oss << mant.substr(0, exp) << "." << mant.substr(exp);
    }
    return oss.str();
}

AsymptoticReport asymptotic_check(KParam kp, Digit d, int n_lo, int n_hi,
                                  double tolerance) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("asymptotic_check: requires k >= 3");
    if (d < 0) throw OutOfRange("asymptotic_check: digits are nonnegative");
    if (n_lo < 1 || n_hi <= n_lo)
        throw OutOfRange("asymptotic_check: requires n_hi > n_lo >= 1");
    const DominantRoot root = dominant_root(kp, 50);
    const CountSeries counts = count_digit_rec(kp, d, n_hi);
    const int s = static_cast<int>(d / k) + 1;
    const int bits = 256;
    AsymptoticReport rep;
    rep.k = k;
    rep.d = d;
    rep.s = s;
    rep.n_lo = n_lo;
    rep.n_hi = n_hi;
    rep.alpha = to_decimal_string(root.alpha, 50);
    rep.tolerance = tolerance;
    mpf_class alpha_pow(1, bits);
    for (int n = 0; n < n_lo; ++n) alpha_pow *= root.alpha;
    for (int n = n_lo; n <= n_hi; ++n) {
        mpf_class denom = alpha_pow;
        for (int t = 0; t < s - 1; ++t) denom *= n;
        const mpf_class ratio = mpf_class(counts.values[n], bits) / denom;
        rep.ratio_samples.push_back(ratio.get_d());
        alpha_pow *= root.alpha;
    }
    auto window_fluctuation = [&](std::size_t from) {
        double worst = 0.0;
        for (std::size_t i = from + 1; i < rep.ratio_samples.size(); ++i) {
            const double prev = rep.ratio_samples[i - 1];
            if (prev <= 0.0) continue;
            worst = std::max(worst,
                             std::abs(rep.ratio_samples[i] - prev) / prev);
        }
        return worst;
    };
    rep.gamma_estimate = rep.ratio_samples.back();
    rep.max_relative_fluctuation = window_fluctuation(0);
    const std::size_t quartile =
        rep.ratio_samples.size() - std::max<std::size_t>(rep.ratio_samples.size() / 4, 2);
    rep.tail_fluctuation = window_fluctuation(quartile);
    rep.converging = rep.tail_fluctuation < tolerance;
    return rep;
}

}  // namespace kbonacci
