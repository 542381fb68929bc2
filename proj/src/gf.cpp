#include "kbonacci/gf.hpp"

#include <sstream>
#include <utility>

#include "kbonacci/factors.hpp"

namespace kbonacci {

namespace {

// Dense rational polynomial used internally for gcd/remainder work.
using QPoly = std::vector<mpq_class>;

void q_normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const IntPoly& a) {
    QPoly out(a.coeffs().begin(), a.coeffs().end());
    return out;
}

// Remainder of a by b (b nonzero).
QPoly q_mod(QPoly a, const QPoly& b) {
    q_normalize(a);
    const int db = static_cast<int>(b.size()) - 1;
    const mpq_class lead = b[db];
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        const mpq_class q = a[da] / lead;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        q_normalize(a);
    }
    return a;
}

// Clears denominators and strips content; positive leading coefficient.
IntPoly q_to_primitive(const QPoly& q) {
    if (q.empty()) return IntPoly();
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

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.assign(coeffs.begin(), coeffs.end());
    normalize();
}

IntPoly IntPoly::constant(const mpz_class& v) {
    IntPoly p;
    if (v != 0) p.c_.push_back(v);
    return p;
}

IntPoly IntPoly::monomial(const mpz_class& coef, int power) {
    IntPoly p;
    if (coef != 0) {
        p.c_.assign(power + 1, 0);
        p.c_[power] = coef;
    }
    return p;
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

mpq_class IntPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    c_ = std::move(out);
    normalize();
    return *this;
}

IntPoly operator-(IntPoly a) {
    for (mpz_class& c : a.c_) c = -c;
    return a;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw NotDivisible("divexact: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) throw NotDivisible("divexact: degree underflow");
    // Long division over Q, then an integrality check on the quotient.
    QPoly rem = to_q(a);
    const QPoly divisor = to_q(b);
    const int db = b.degree();
    const mpq_class lead = divisor[db];
    std::vector<mpq_class> quot(a.degree() - db + 1, 0);
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        const int da = static_cast<int>(rem.size()) - 1;
        const mpq_class q = rem[da] / lead;
        quot[da - db] = q;
        for (int i = 0; i <= db; ++i) rem[da - db + i] -= q * divisor[i];
        q_normalize(rem);
    }
    if (!rem.empty()) throw NotDivisible("divexact: nonzero remainder");
    std::vector<mpz_class> z(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (quot[i].get_den() != 1)
            throw NotDivisible("divexact: quotient not integral");
        z[i] = quot[i].get_num();
    }
    return IntPoly(std::move(z));
}

IntPoly poly_pow(const IntPoly& a, int e) {
    if (e < 0) throw OutOfRange("poly_pow: negative exponent");
    IntPoly acc = IntPoly::constant(1);
    for (int i = 0; i < e; ++i) acc *= a;
    return acc;
}

mpz_class content(const IntPoly& a) {
    mpz_class g = 0;
    for (const mpz_class& c : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    mpz_class c = content(a);
    if (a.coeffs().back() < 0) c = -c;
    std::vector<mpz_class> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeffs()[i] / c;
    return IntPoly(std::move(out));
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    QPoly x = to_q(a), y = to_q(b);
    while (!y.empty()) {
        QPoly r = q_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return q_to_primitive(x);
}

IntPoly poly_mod_primitive(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw NotDivisible("poly_mod: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    return q_to_primitive(q_mod(to_q(a), to_q(b)));
}

IntPoly reversal(const IntPoly& a) {
    std::vector<mpz_class> out(a.coeffs().rbegin(), a.coeffs().rend());
    return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::ostringstream oss;
    bool first = true;
    for (int i = 0; i <= a.degree(); ++i) {
        const mpz_class c = a.coeff(i);
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) oss << "-";
            first = false;
        } else {
            oss << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            oss << mag.get_str();
        } else {
            if (mag != 1) oss << mag.get_str() << "*";
            oss << var;
            if (i > 1) oss << "^" << i;
        }
    }
    return oss.str();
}

IntPoly bonacci_denominator(int k) {
    if (k < 1) throw OutOfRange("bonacci_denominator: k must be >= 1");
    std::vector<mpz_class> c(k + 1, -1);
    c[0] = 1;
    return IntPoly(std::move(c));
}

RationalGF::RationalGF() : num_(), den_(IntPoly::constant(1)) {}

RationalGF::RationalGF(const IntPoly& num) : RationalGF(num, IntPoly::constant(1)) {}

RationalGF::RationalGF(IntPoly num, IntPoly den) {
    if (den.is_zero()) throw OutOfRange("RationalGF: zero denominator");
    if (den.coeff(0) == 0)
        throw NonExpandable("RationalGF: denominator constant term is zero");
    if (num.is_zero()) {
        num_ = IntPoly();
        den_ = IntPoly::constant(1);
        return;
    }
    const mpz_class cn = content(num);
    const mpz_class cd = content(den);
    IntPoly pn = divexact(num, IntPoly::constant(cn));
    IntPoly pd = divexact(den, IntPoly::constant(cd));
    const IntPoly g = poly_gcd(pn, pd);
    if (g.degree() > 0) {
        pn = divexact(pn, g);
        pd = divexact(pd, g);
    }
    mpq_class scalar(cn, cd);
    scalar.canonicalize();
    num_ = pn * IntPoly::constant(scalar.get_num());
    den_ = pd * IntPoly::constant(scalar.get_den());
    if (den_.coeff(0) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalGF operator-(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    return RationalGF(a.num() * b.num(), a.den() * b.den());
}

RationalGF H(int k) {
    return RationalGF(IntPoly::constant(1), bonacci_denominator(k));
}

RationalGF G(int k) {
    if (k < 1) throw OutOfRange("G: k must be >= 1");
    IntPoly one_minus_yk = IntPoly::constant(1) - IntPoly::monomial(1, k);
    RationalGF lhs = RationalGF(one_minus_yk) * H(k);
    return lhs - RationalGF(IntPoly::constant(1));
}

RationalGF ogf_digit(KParam kp, Digit d) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("ogf_digit: requires k >= 3");
    if (d < 0) throw OutOfRange("ogf_digit: digits are nonnegative");
    const int m = static_cast<int>(d / k);
    return RationalGF(IntPoly::monomial(1, static_cast<int>(d)),
                      poly_pow(bonacci_denominator(k - 1), m + 1));
}

RationalGF ogf_shift(KParam kp, const RationalGF& base) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("ogf_shift: requires k >= 3");
    return RationalGF(IntPoly::monomial(1, k)) * H(k - 1) * base;
}

RationalGF ogf_factor2(KParam kp, const Word& b) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("ogf_factor2: requires k >= 3");
    const Factor2Class cls = classify2(kp, b);
    switch (cls.family) {
        case Family::B2:
            return ogf_digit(kp, cls.b + static_cast<Digit>(k) * cls.i);
        case Family::B3:
            return RationalGF(IntPoly::monomial(1, static_cast<int>(cls.a))) * G(k - 1);
        case Family::B1: {
            RationalGF acc(IntPoly::monomial(1, static_cast<int>(cls.a + k * cls.i)));
            const RationalGF h = H(k - 1);
            for (long long t = 0; t <= cls.i; ++t) acc = acc * h;
            RationalGF inner(IntPoly::monomial(1, k - 1));
            if (cls.a > k) inner = inner + G(k - 1);
            return acc * inner;
        }
        case Family::NotAFactor:
            break;
    }
    throw NotAFactorError("ogf_factor2: " + to_string(b) + " is not a factor for k=" +
                          std::to_string(k));
}

std::vector<mpz_class> series(const RationalGF& f, int order) {
    if (order < 0) throw OutOfRange("series: order must be >= 0");
    const IntPoly& p = f.num();
    const IntPoly& q = f.den();
    if (q.coeff(0) == 0) throw NonExpandable("series: denominator constant term is zero");
    const mpq_class q0(q.coeff(0));
    std::vector<mpq_class> c(order + 1);
    for (int n = 0; n <= order; ++n) {
        mpq_class acc(p.coeff(n));
        const int top = std::min(n, q.degree());
        for (int j = 1; j <= top; ++j) acc -= mpq_class(q.coeff(j)) * c[n - j];
        c[n] = acc / q0;
    }
    std::vector<mpz_class> out(order + 1);
    for (int n = 0; n <= order; ++n) {
        if (c[n].get_den() != 1)
            throw NonExpandable("series: expansion is not integral");
        out[n] = c[n].get_num();
    }
    return out;
}

bool gf_equal(const RationalGF& f, const RationalGF& g) {
    return f.num() * g.den() == g.num() * f.den();
}

std::string to_string(const RationalGF& f) {
    if (f.den() == IntPoly::constant(1)) return to_string(f.num());
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

namespace {

std::string monomial_str(long long power) {
    if (power == 0) return "1";
    if (power == 1) return "y";
    return "y^" + std::to_string(power);
}

std::string h_power_str(int k, long long power) {
    std::string s = "H" + std::to_string(k) + "(y)";
    if (power != 1) s += "^" + std::to_string(power);
    return s;
}

}  // namespace

std::string describe_ogf(KParam kp, const Word& factor) {
    const int k = kp.value();
    if (k < 3) throw KTooSmall("describe_ogf: requires k >= 3");
    if (factor.size() == 1) {
        const Digit d = factor[0];
        if (d < 0) throw OutOfRange("describe_ogf: digits are nonnegative");
        const long long m = d / k;
        if (d == 0) return h_power_str(k - 1, m + 1);
        return monomial_str(d) + " * " + h_power_str(k - 1, m + 1);
    }
    if (factor.size() != 2) throw WrongLength("describe_ogf: factor length must be 1 or 2");
    const Factor2Class cls = classify2(kp, factor);
    switch (cls.family) {
        case Family::B2:
            return describe_ogf(kp, Word{cls.b + static_cast<Digit>(k) * cls.i});
        case Family::B3:
            return monomial_str(cls.a) + " * G" + std::to_string(k - 1) + "(y)";
        case Family::B1: {
            const std::string head =
                monomial_str(cls.a + static_cast<long long>(k) * cls.i) + " * " +
                h_power_str(k - 1, cls.i + 1);
            if (cls.a > k)
                return head + " * (" + monomial_str(k - 1) + " + G" +
                       std::to_string(k - 1) + "(y))";
            return head + " * " + monomial_str(k - 1);
        }
        case Family::NotAFactor:
            break;
    }
    throw NotAFactorError("describe_ogf: " + to_string(factor) +
                          " is not a factor for k=" + std::to_string(k));
}

}  // namespace kbonacci
