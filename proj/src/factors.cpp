#include "kbonacci/factors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace kbonacci {

const char* family_name(Family f) {
    switch (f) {
        case Family::B1: return "B1";
        case Family::B2: return "B2";
        case Family::B3: return "B3";
        case Family::NotAFactor: return "NotAFactor";
    }
    return "NotAFactor";
}

Factor2Class classify2(KParam kp, const Word& b) {
    const long long k = kp.value();
    if (b.size() != 2) throw WrongLength("classify2: factor length must be 2");
    const Digit x = b[0], y = b[1];
    Factor2Class out;
    if (x < 0 || y < 0) return out;
    // The second digit separates the templates: nonzero mod k -> B2 shape,
    // a positive multiple of k -> B1 shape, zero -> B3 shape.
    if (y % k != 0) {
        if (x % k == 0 && y > x && y - x <= k - 1) {
            out.family = Family::B2;
            out.i = x / k;
            out.b = y - x;
            out.witness = out.b + out.i * k;
        }
        return out;
    }
    if (y >= k) {
        const long long i = y / k - 1;
        const long long a = x - i * k;
        if (a >= 1) {
            out.family = Family::B1;
            out.i = i;
            out.a = a;
            out.witness = a + k - 1 + i * k;
        }
        return out;
    }
    // y == 0. For k = 2 the digit 0 occurs exactly once, so no (a.0) factor.
    if (x >= 1 && k >= 3) {
        out.family = Family::B3;
        out.a = x;
        out.witness = x + 1;
    }
    return out;
}

Word factor_from_class(KParam kp, const Factor2Class& cls) {
    const long long k = kp.value();
    switch (cls.family) {
        case Family::B1: return {k * cls.i + cls.a, k * cls.i + k};
        case Family::B2: return {k * cls.i, k * cls.i + cls.b};
        case Family::B3: return {cls.a, 0};
        case Family::NotAFactor: break;
    }
    throw NotAFactorError("factor_from_class: no word for a NotAFactor verdict");
}

std::vector<EnumeratedFactor> enumerate_fac2(KParam kp, Digit digit_bound) {
    const long long k = kp.value();
    std::vector<EnumeratedFactor> out;
    if (digit_bound < 0) return out;
    auto add = [&](Family family, long long i, long long a, long long b) {
        Factor2Class cls;
        cls.family = family;
        cls.i = i;
        cls.a = a;
        cls.b = b;
        EnumeratedFactor ef;
        ef.word = factor_from_class(kp, cls);
        ef.cls = classify2(kp, ef.word);
        out.push_back(std::move(ef));
    };
    for (long long i = 0; k * i + k <= digit_bound; ++i) {
        for (long long a = 1; k * i + a <= digit_bound; ++a) add(Family::B1, i, a, 0);
    }
    for (long long i = 0; k * i + 1 <= digit_bound; ++i) {
        for (long long b = 1; b <= k - 1 && k * i + b <= digit_bound; ++b)
            add(Family::B2, i, 0, b);
    }
    if (k >= 3) {
        for (long long a = 1; a <= digit_bound; ++a) add(Family::B3, 0, a, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Word straddling_factor(KParam kp, int n) {
    const long long k = kp.value();
    if (n < 1) throw OutOfRange("straddling_factor: requires n >= 1");
    if (n < k) return {0, n};
    return {n - k + 1, k};
}

OccurrenceType classify_occurrence(KParam kp, int n, const mpz_class& position,
                                   int m) {
    const int k = kp.value();
    if (n < 1) throw OutOfRange("classify_occurrence: requires n >= 1");
    if (m < 1) throw OutOfRange("classify_occurrence: window length must be >= 1");
    if (position < 0)
        throw OutOfRange("classify_occurrence: position must be >= 0");
    const std::vector<BlockDescriptor> blocks = decompose(kp, n);
    const BonacciNumbers lengths = bonacci(kp, n + k);
    // boundary[t] = start offset of block t; boundary[count] = |W_n|.
    std::vector<mpz_class> boundary(blocks.size() + 1);
    boundary[0] = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t)
        boundary[t + 1] = boundary[t] + lengths.values[blocks[t].index + k];
    const mpz_class end = position + m;
    if (end > boundary.back())
        throw OutOfRange("classify_occurrence: window exceeds the iterate");
    auto block_of = [&](const mpz_class& pos) {
        std::size_t t = 0;
        while (boundary[t + 1] <= pos) ++t;
        return t;
    };
    const std::size_t first = block_of(position);
    const std::size_t last = block_of(end - 1);
    OccurrenceType out{OccurrenceTypeTag::included, -1};
    if (first == last) return out;
    if (last == blocks.size() - 1) {
        out.tag = OccurrenceTypeTag::straddling;
        return out;
    }
    out.tag = OccurrenceTypeTag::bordering;
    out.j = blocks[first].index;
    return out;
}

std::set<Word> fac_m_empirical(KParam kp, int m, int n, std::uint64_t guard) {
    if (m < 1) throw OutOfRange("fac_m_empirical: length must be >= 1");
    if (n < 0) throw OutOfRange("fac_m_empirical: index must be >= 0");
    std::set<Word> out;
    IterateStream stream(kp, n);
    if (stream.total_length() > guard) {
        throw SizeGuardExceeded("fac_m_empirical: |W_" + std::to_string(n) +
                                "| = " + stream.total_length().get_str() +
                                " exceeds guard " + std::to_string(guard));
    }
    std::deque<Digit> window;
    Digit d = 0;
    while (stream.next(d)) {
        window.push_back(d);
        if (static_cast<int>(window.size()) > m) window.pop_front();
        if (static_cast<int>(window.size()) == m)
            out.insert(Word(window.begin(), window.end()));
    }
    return out;
}

}  // namespace kbonacci
