#include "kbonacci/words.hpp"

#include <algorithm>
#include <sstream>

namespace kbonacci {

Word phi(KParam kp, Digit d) {
    if (d < 0) throw OutOfRange("phi: digits are nonnegative");
    const Digit k = kp.value();
    const Digit i = d / k;
    const Digit j = d % k;
    if (j <= k - 2) return {k * i, k * i + j + 1};
    return {k * i + k};
}

Word phi_word(KParam kp, const Word& w) {
    Word out;
    out.reserve(w.size() * 2);
    for (Digit d : w) {
        const Word img = phi(kp, d);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

Word iterate(KParam kp, int n, std::uint64_t guard) {
    if (n < 0) throw OutOfRange("iterate: n must be >= 0");
    const BonacciNumbers f = bonacci(kp, n + kp.value());
    const mpz_class& len = f.values[n + kp.value()];
    if (len > guard) {
        throw SizeGuardExceeded("iterate: |W_" + std::to_string(n) + "| = " +
                                len.get_str() + " exceeds guard " +
                                std::to_string(guard));
    }
    Word w{0};
    for (int step = 0; step < n; ++step) w = phi_word(kp, w);
    return w;
}

IterateStream::IterateStream(KParam kp, int n) : k_(kp.value()) {
    if (n < 0) throw OutOfRange("iterate_stream: n must be >= 0");
    total_ = bonacci(kp, n + k_).values[n + k_];
    stack_.emplace_back(0, n);
}

bool IterateStream::next(Digit& out) {
    if (stack_.empty()) return false;
    auto [d, lvl] = stack_.back();
    stack_.pop_back();
    while (lvl > 0) {
        const Word img = phi(KParam(k_), d);
        --lvl;
        for (std::size_t i = img.size(); i-- > 1;) stack_.emplace_back(img[i], lvl);
        d = img[0];
    }
    out = d;
    return true;
}

IterateStream iterate_stream(KParam k, int n) { return IterateStream(k, n); }

std::vector<BlockDescriptor> decompose(KParam kp, int n) {
    if (n < 1) throw OutOfRange("decompose: n must be >= 1");
    const int k = kp.value();
    std::vector<BlockDescriptor> blocks;
    if (n < k) {
        for (int i = n - 1; i >= 0; --i) blocks.push_back({i, 0});
        blocks.push_back({0, n});  // the letter n, as n ⊕ W_0
    } else {
        for (int i = n - 1; i >= n - k + 1; --i) blocks.push_back({i, 0});
        blocks.push_back({n - k, static_cast<Digit>(k)});
    }
    return blocks;
}

Word shift(Digit m, const Word& w) {
    if (m < 0) throw OutOfRange("shift: offset must be >= 0");
    Word out(w);
    for (Digit& d : out) d += m;
    return out;
}

Word project(KParam kp, const Word& w) {
    const Digit k = kp.value();
    Word out(w);
    for (Digit& d : out) d %= k;
    return out;
}

BonacciNumbers bonacci(KParam kp, int upto) {
    if (upto < 0) throw OutOfRange("bonacci: upto must be >= 0");
    const int k = kp.value();
    BonacciNumbers out{k, {}};
    out.values.resize(upto + 1, 0);
    if (k - 1 <= upto) out.values[k - 1] = 1;
    for (int m = k; m <= upto; ++m) {
        mpz_class acc = 0;
        for (int j = 1; j <= k; ++j) acc += out.values[m - j];
        out.values[m] = acc;
    }
    return out;
}

AuxSequences aux_sequences(KParam kp, int upto) {
    if (upto < 0) throw OutOfRange("aux_sequences: upto must be >= 0");
    const int k = kp.value();
    AuxSequences out{k, {}, {}};
    out.h.resize(upto + 1);
    out.g.resize(upto + 1);
    out.h[0] = 1;
    out.g[0] = 0;
    for (int n = 1; n <= upto && n <= k - 1; ++n) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, n - 1);
        out.h[n] = p;
        out.g[n] = p;
    }
    for (int n = k; n <= upto; ++n) {
        mpz_class ah = 0, ag = 0;
        for (int j = 1; j <= k; ++j) {
            ah += out.h[n - j];
            ag += out.g[n - j];
        }
        out.h[n] = ah;
        out.g[n] = ag;
    }
    return out;
}

Word finite_kbonacci_iterate(KParam kp, int n) {
    if (n < 0) throw OutOfRange("finite_kbonacci_iterate: n must be >= 0");
    const Digit k = kp.value();
    Word w{0};
    for (int step = 0; step < n; ++step) {
        Word next;
        next.reserve(w.size() * 2);
        for (Digit d : w) {
            if (d <= k - 2) {
                next.push_back(0);
                next.push_back(d + 1);
            } else {
                next.push_back(0);
            }
        }
        w = std::move(next);
    }
    return w;
}

std::string to_string(const Word& w) {
    const bool wide = std::any_of(w.begin(), w.end(), [](Digit d) { return d > 9; });
    std::ostringstream oss;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) oss << "·";
        oss << w[i];
    }
    return oss.str();
}

Word parse_word(const std::string& text) {
    Word out;
    if (text.empty()) return out;
    if (text.find(',') != std::string::npos) {
        std::istringstream iss(text);
        std::string tok;
        while (std::getline(iss, tok, ',')) {
            if (tok.empty()) throw OutOfRange("parse_word: empty digit in '" + text + "'");
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(tok, &pos);
            } catch (const std::exception&) {
                throw OutOfRange("parse_word: bad digit '" + tok + "'");
            }
            if (pos != tok.size() || v < 0)
                throw OutOfRange("parse_word: bad digit '" + tok + "'");
            out.push_back(v);
        }
        return out;
    }
    for (char c : text) {
        if (c < '0' || c > '9')
            throw OutOfRange("parse_word: bad character in '" + text + "'");
        out.push_back(c - '0');
    }
    return out;
}

}  // namespace kbonacci
