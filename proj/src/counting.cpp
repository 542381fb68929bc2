#include "kbonacci/counting.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "kbonacci/factors.hpp"
#include "kbonacci/gf.hpp"

namespace kbonacci {

const char* engine_name(Engine e) {
    switch (e) {
        case Engine::naive: return "naive";
        case Engine::block: return "block";
        case Engine::recurrence: return "recurrence";
        case Engine::closed_form: return "closed-form";
    }
    return "naive";
}

Engine parse_engine(const std::string& name) {
    if (name == "naive") return Engine::naive;
    if (name == "block") return Engine::block;
    if (name == "rec" || name == "recurrence") return Engine::recurrence;
    if (name == "ogf" || name == "closed-form") return Engine::closed_form;
    throw OutOfRange("unknown engine '" + name + "'");
}

mpz_class count_naive(const Word& w, const Word& b) {
    if (b.empty()) throw EmptyFactor("count_naive: factor must be non-empty");
    if (b.size() > w.size()) return 0;
    mpz_class count = 0;
    for (std::size_t p = 0; p + b.size() <= w.size(); ++p) {
        if (std::equal(b.begin(), b.end(), w.begin() + p)) ++count;
    }
    return count;
}

BlockCounter::BlockCounter(KParam kp, std::vector<Word> factors)
    : k_(kp.value()), factors_(std::move(factors)), max_len_(0), max_digit_(0) {
    if (factors_.empty())
        throw EmptyFactor("BlockCounter: factor batch must be non-empty");
    for (const Word& f : factors_) {
        if (f.empty()) throw EmptyFactor("BlockCounter: factor must be non-empty");
        max_len_ = std::max(max_len_, static_cast<int>(f.size()));
        for (Digit d : f) max_digit_ = std::max(max_digit_, d);
    }
}

void BlockCounter::merge(Summary& acc, const Summary& next) const {
    // Junction occurrences: start within the last max_len_-1 digits of
    // the accumulated word, end at or before the end of `next`. A span
    // reaching past `next` is counted at a later junction instead (its
    // start stays within max_len_-1 digits of the new cumulative end).
    Word t = acc.suffix;
    t.insert(t.end(), next.prefix.begin(), next.prefix.end());
    const std::size_t ls = acc.suffix.size();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Word& f = factors_[i];
        const std::size_t m = f.size();
        const std::size_t q_lo = (ls >= m) ? ls - m + 1 : 0;
        for (std::size_t q = q_lo; q < ls && q + m <= t.size(); ++q) {
            if (std::equal(f.begin(), f.end(), t.begin() + q)) ++acc.counts[i];
        }
        acc.counts[i] += next.counts[i];
    }
    acc.length += next.length;
    const std::size_t width = static_cast<std::size_t>(max_len_ - 1);
    std::size_t keep = width;
    if (acc.length < static_cast<long>(width)) keep = acc.length.get_ui();
    Word tail = acc.suffix;
    tail.insert(tail.end(), next.suffix.begin(), next.suffix.end());
    if (tail.size() > keep) tail.erase(tail.begin(), tail.end() - keep);
    acc.suffix = std::move(tail);
    if (acc.prefix.size() < keep) {
        acc.prefix.insert(acc.prefix.end(), next.prefix.begin(), next.prefix.end());
        if (acc.prefix.size() > keep) acc.prefix.resize(keep);
    }
}

const BlockCounter::Summary& BlockCounter::summarize(int index, Digit shift) {
    const auto key = std::make_pair(index, shift);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Summary s;
    if (index == 0) {
        s.length = 1;
        if (max_len_ > 1) {
            s.prefix = {shift};
            s.suffix = {shift};
        }
        s.counts.resize(factors_.size());
        for (std::size_t i = 0; i < factors_.size(); ++i)
            s.counts[i] = (factors_[i].size() == 1 && factors_[i][0] == shift) ? 1 : 0;
    } else if (shift > max_digit_) {
        // Every digit in this block exceeds every factor digit, so the
        // block holds no occurrence; only its boundary digits matter.
        const Summary& base = summarize(index, 0);
        s.length = base.length;
        s.prefix = kbonacci::shift(shift, base.prefix);
        s.suffix = kbonacci::shift(shift, base.suffix);
        s.counts.assign(factors_.size(), 0);
    } else {
        const std::vector<BlockDescriptor> blocks = decompose(KParam(k_), index);
        bool first = true;
        for (const BlockDescriptor& b : blocks) {
            const Summary& child = summarize(b.index, shift + b.shift);
            if (first) {
                s = child;
                first = false;
            } else {
                merge(s, child);
            }
        }
    }
    return memo_.emplace(key, std::move(s)).first->second;
}

std::vector<mpz_class> BlockCounter::counts(int n) {
    if (n < 0) throw OutOfRange("BlockCounter: n must be >= 0");
    // Ascending prefill keeps the recursion shallow: each new index adds
    // at most one summary per shift level, all lower ones memoized.
    for (int t = 0; t <= n; ++t) summarize(t, 0);
    return summarize(n, 0).counts;
}

std::vector<std::vector<mpz_class>> BlockCounter::series(int upto) {
    if (upto < 0) throw OutOfRange("BlockCounter: upto must be >= 0");
    std::vector<std::vector<mpz_class>> out(
        factors_.size(), std::vector<mpz_class>(upto + 1));
    for (int n = 0; n <= upto; ++n) {
        const std::vector<mpz_class>& c = counts(n);
        for (std::size_t i = 0; i < factors_.size(); ++i) out[i][n] = c[i];
    }
    return out;
}

mpz_class count_block(const OccurrenceQuery& q) {
    BlockCounter bc(q.k, {q.factor});
    return bc.counts(q.n)[0];
}

CountSeries count_block_series(KParam kp, const Word& b, int upto) {
    BlockCounter bc(kp, {b});
    return {kp.value(), b, std::move(bc.series(upto)[0]), Engine::block};
}

CountSeries count_digit_rec(KParam kp, Digit d, int upto) {
    if (d < 0) throw OutOfRange("count_digit_rec: digits are nonnegative");
    if (upto < 0) throw OutOfRange("count_digit_rec: upto must be >= 0");
    const int k = kp.value();
    // Climb the ladder d mod k, d mod k + k, ..., d; each rung's series
    // feeds the next one's shifted term.
    std::vector<mpz_class> lower;
    for (Digit dj = d % k; dj <= d; dj += k) {
        std::vector<mpz_class> cur(upto + 1);
        for (int n = 0; n <= upto; ++n) {
            mpz_class acc = 0;
            for (int i = std::max(n - k + 1, 0); i <= n - 1; ++i) acc += cur[i];
            if (dj >= k && n - k >= 0) acc += lower[n - k];
            if (dj < k && n == dj) acc += 1;
            cur[n] = std::move(acc);
        }
        lower = std::move(cur);
    }
    return {k, {d}, std::move(lower), Engine::recurrence};
}

namespace {

// Window sum over the series' own clamped k-term history, plus an
// optional delegate series consumed at n-k and an optional unit pulse.
std::vector<mpz_class> window_shift_series(int k, int upto,
                                           const std::vector<mpz_class>* delegate,
                                           long long pulse_n) {
    std::vector<mpz_class> cur(upto + 1);
    for (int n = 0; n <= upto; ++n) {
        mpz_class acc = 0;
        for (int i = std::max(n - k + 1, 0); i <= n - 1; ++i) acc += cur[i];
        if (delegate != nullptr && n - k >= 0) acc += (*delegate)[n - k];
        if (pulse_n >= 0 && n == pulse_n) acc += 1;
        cur[n] = std::move(acc);
    }
    return cur;
}

std::vector<mpz_class> c_a0_series(int k, long long a, int upto) {
    std::vector<mpz_class> cur(upto + 1);
    for (int n = 0; n <= upto; ++n) {
        if (n <= a) {
            cur[n] = 0;
        } else if (n < a + k - 1) {
            mpz_class p;
            mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n - a - 1));
            cur[n] = std::move(p);
        } else {
            mpz_class acc = 0;
            for (int j = 1; j <= k - 1; ++j) acc += cur[n - j];
            cur[n] = std::move(acc);
        }
    }
    return cur;
}

std::vector<mpz_class> rec2(KParam kp, const Word& b, int upto,
                            std::map<Word, std::vector<mpz_class>>& memo) {
    if (auto it = memo.find(b); it != memo.end()) return it->second;
    const long long k = kp.value();
    std::vector<mpz_class> out;
    const Factor2Class cls = classify2(kp, b);
    switch (cls.family) {
        case Family::B2:
            out = count_digit_rec(kp, cls.b + k * cls.i, upto).values;
            break;
        case Family::B3:
            out = c_a0_series(kp.value(), cls.a, upto);
            break;
        case Family::B1:
            if (cls.i == 0) {
                std::vector<mpz_class> del;
                const std::vector<mpz_class>* dp = nullptr;
                if (cls.a > k) {
                    del = rec2(kp, Word{cls.a - k, 0}, upto, memo);
                    dp = &del;
                }
                out = window_shift_series(kp.value(), upto, dp, cls.a + k - 1);
            } else {
                const Word prev{k * (cls.i - 1) + cls.a, k * cls.i};
                const std::vector<mpz_class> del = rec2(kp, prev, upto, memo);
                out = window_shift_series(kp.value(), upto, &del, -1);
            }
            break;
        case Family::NotAFactor: {
            const Digit x = b[0], y = b[1];
            if (x >= k && y > k) {
                // The (a.b) recurrence assumes the factor occurs; certify
                // with the block engine at an index past every family
                // witness reachable with these digits.
                const long long cert = std::max(x, y) + 2 * k;
                if (cert > 2000)
                    throw SizeGuardExceeded(
                        "count_factor2_rec: membership certification for " +
                        to_string(b) + " is not desk-scale");
                if (count_block({kp, b, static_cast<int>(cert)}) > 0) {
                    const std::vector<mpz_class> del =
                        rec2(kp, Word{x - k, y - k}, upto, memo);
                    out = window_shift_series(kp.value(), upto, &del, -1);
                    break;
                }
            }
            out.assign(upto + 1, 0);
            break;
        }
    }
    memo.emplace(b, out);
    return out;
}

}  // namespace

CountSeries count_factor2_rec(KParam kp, const Word& b, int upto) {
    if (b.size() != 2) throw WrongLength("count_factor2_rec: factor length must be 2");
    if (upto < 0) throw OutOfRange("count_factor2_rec: upto must be >= 0");
    std::map<Word, std::vector<mpz_class>> memo;
    return {kp.value(), b, rec2(kp, b, upto, memo), Engine::recurrence};
}

CountSeries count_series(KParam kp, const Word& b, int upto, Engine engine,
                         std::uint64_t guard) {
    if (b.empty()) throw EmptyFactor("count_series: factor must be non-empty");
    if (upto < 0) throw OutOfRange("count_series: upto must be >= 0");
    const int k = kp.value();
    switch (engine) {
        case Engine::naive: {
            // W_n is a prefix of W_{n+1}, so one scan of W_upto serves
            // every n: an occurrence ending at position e counts toward
            // all n with |W_n| >= e.
            const Word w = iterate(kp, upto, guard);
            const BonacciNumbers f = bonacci(kp, upto + k);
            std::vector<std::size_t> ends;
            const std::size_t m = b.size();
            for (std::size_t p = 0; p + m <= w.size(); ++p) {
                if (std::equal(b.begin(), b.end(), w.begin() + p))
                    ends.push_back(p + m);
            }
            std::vector<mpz_class> values(upto + 1);
            std::size_t idx = 0;
            for (int n = 0; n <= upto; ++n) {
                while (idx < ends.size() && ends[idx] <= f.values[n + k])
                    ++idx;
                values[n] = static_cast<unsigned long>(idx);
            }
            return {k, b, std::move(values), Engine::naive};
        }
        case Engine::block:
            return count_block_series(kp, b, upto);
        case Engine::recurrence:
            if (b.size() == 1) return count_digit_rec(kp, b[0], upto);
            if (b.size() == 2) return count_factor2_rec(kp, b, upto);
            throw EngineInapplicable(
                "recurrence engine handles factor lengths 1 and 2 only");
        case Engine::closed_form: {
            RationalGF gf;
            if (b.size() == 1) {
                gf = ogf_digit(kp, b[0]);
            } else if (b.size() == 2) {
                if (classify2(kp, b).family == Family::NotAFactor)
                    throw EngineInapplicable("no closed form: " + to_string(b) +
                                             " matches no family template");
                gf = ogf_factor2(kp, b);
            } else {
                throw EngineInapplicable(
                    "closed-form engine handles factor lengths 1 and 2 only");
            }
            return {k, b, series(gf, upto), Engine::closed_form};
        }
    }
    throw EngineInapplicable("unknown engine");
}

}  // namespace kbonacci
