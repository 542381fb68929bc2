#pragma once

// Exact integer-polynomial and rational-generating-function arithmetic.
// Carries every closed form in the library: H_k, G_k, the digit OGFs,
// the shift identity, and the per-family length-2 factor OGFs.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "kbonacci/errors.hpp"
#include "kbonacci/words.hpp"

namespace kbonacci {

// Dense polynomial over Z in one variable. Coefficient i is the
// coefficient of y^i; the top coefficient is nonzero unless zero poly.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const mpz_class& v);
    static IntPoly monomial(const mpz_class& coef, int power);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    mpz_class coeff(int i) const;  // 0 outside the stored range
    const std::vector<mpz_class>& coeffs() const noexcept { return c_; }

    // Evaluation over Q (exact).
    mpq_class eval(const mpq_class& x) const;

    bool operator==(const IntPoly&) const = default;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator-(IntPoly a);

private:
    void normalize();
    std::vector<mpz_class> c_;
};

// Exact quotient in Z[y]; throws NotDivisible when b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

IntPoly poly_pow(const IntPoly& a, int e);

// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
mpz_class content(const IntPoly& a);

// a / content(a), with positive leading coefficient; 0 stays 0.
IntPoly primitive_part(const IntPoly& a);

// Primitive gcd over Z[y] (positive leading coefficient); gcd(0, b) is
// the primitive part of b.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Remainder of a by b over Q[x], scaled back to a primitive integer
// polynomial (zero iff b divides a over Q). b must be nonzero.
IntPoly poly_mod_primitive(const IntPoly& a, const IntPoly& b);

// Coefficient reversal: x^deg * p(1/x). Zero maps to zero.
IntPoly reversal(const IntPoly& a);

std::string to_string(const IntPoly& a, const std::string& var = "y");

// 1 - y - y^2 - ... - y^k.
IntPoly bonacci_denominator(int k);

// Ratio of integer polynomials in canonical reduced form: numerator and
// denominator coprime and jointly primitive, denominator constant term
// positive. Construction requires den(0) != 0 so a series expansion exists.
class RationalGF {
public:
    RationalGF();  // zero
    RationalGF(IntPoly num, IntPoly den);
    explicit RationalGF(const IntPoly& num);

    const IntPoly& num() const noexcept { return num_; }
    const IntPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);

    bool operator==(const RationalGF&) const = default;

private:
    IntPoly num_;
    IntPoly den_;
};

// H_k(y) = 1 / (1 - y - ... - y^k); series = the h sequence. k >= 1.
RationalGF H(int k);

// G_k(y) = (1 - y^k) H_k(y) - 1; series = the g sequence. k >= 1.
RationalGF G(int k);

// C_d = y^d * H_{k-1}^{floor(d/k)+1}. Requires k >= 3 (KTooSmall below).
RationalGF ogf_digit(KParam k, Digit d);

// The shift identity: y^k * H_{k-1} * base. The caller asserts that all
// occurrences of the shifted factor are included (the theorem hypothesis).
RationalGF ogf_shift(KParam k, const RationalGF& base);

// Closed form for a classified length-2 factor; NotAFactorError if the
// word matches no family template. Requires k >= 3.
RationalGF ogf_factor2(KParam k, const Word& b);

// Exact Maclaurin coefficients c_0..c_order. Throws NonExpandable when
// den(0) = 0 (cannot happen for canonically constructed values) or when
// the expansion is not integral.
std::vector<mpz_class> series(const RationalGF& f, int order);

// Equality as rational functions (cross multiplication in Z[y]).
bool gf_equal(const RationalGF& f, const RationalGF& g);

// Coefficient form "(1 + 2y) / (1 - y - y^2)".
std::string to_string(const RationalGF& f);

// Factored human-readable form of the closed-form OGF of a digit or a
// classified length-2 factor, e.g. "y^5 * H3(y)^2". NotAFactorError when
// no closed form applies.
std::string describe_ogf(KParam k, const Word& factor);

}  // namespace kbonacci
