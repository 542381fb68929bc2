// Command-line surface over the k-Bonacci library: iterates, occurrence
// counts by selectable engines, closed-form generating functions, length-2
// classification and enumeration, embedded reference tables, recurrence
// conjecture checks, and growth-law reports.
//
// Exit codes: 0 success, 2 size guard, 3 engine disagreement,
// 4 classification, 5 table mismatch, 6 conjecture failure.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kbonacci/analysis.hpp"
#include "kbonacci/counting.hpp"
#include "kbonacci/errors.hpp"
#include "kbonacci/factors.hpp"
#include "kbonacci/gf.hpp"
#include "kbonacci/tables.hpp"
#include "kbonacci/words.hpp"

namespace kb = kbonacci;

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitSizeGuard = 2;
constexpr int kExitDisagreement = 3;
constexpr int kExitClassification = 4;
constexpr int kExitTableMismatch = 5;
constexpr int kExitConjecture = 6;

std::string join_values(const std::vector<mpz_class>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out;
}

ordered_json values_json(const std::vector<mpz_class>& v) {
    ordered_json arr = ordered_json::array();
    for (const mpz_class& x : v) arr.push_back(x.get_str());
    return arr;
}

ordered_json word_json(const kb::Word& w) {
    ordered_json arr = ordered_json::array();
    for (kb::Digit d : w) arr.push_back(d);
    return arr;
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- iterate

int run_iterate(int k, int n, bool stream, bool do_project,
                const std::string& format, std::uint64_t guard) {
    const kb::KParam kp(k);
    if (stream) {
        if (format != "text")
            throw kb::OutOfRange("--stream supports text output only");
        kb::IterateStream st = kb::iterate_stream(kp, n);
        // Separator mirrors to_string: needed iff some printed digit > 9.
        const bool sep = do_project ? (k > 10) : (n > 9);
        kb::Digit d;
        bool first = true;
        while (st.next(d)) {
            if (sep && !first) std::cout << "·";
            std::cout << (do_project ? d % k : d);
            first = false;
        }
        std::cout << "\n";
        return 0;
    }
    kb::Word w = kb::iterate(kp, n, guard);
    if (do_project) w = kb::project(kp, w);
    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["n"] = n;
        j["projected"] = do_project;
        j["length"] = w.size();
        j["word"] = kb::to_string(w);
        j["digits"] = word_json(w);
        emit_json(j);
    } else {
        std::cout << kb::to_string(w) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ count

int run_count(int k, const std::string& factor_text, std::optional<int> n,
              std::optional<int> series_upto, const std::string& engine_text,
              const std::string& format, std::uint64_t guard) {
    const kb::KParam kp(k);
    const kb::Word f = kb::parse_word(factor_text);
    if (f.empty()) throw kb::EmptyFactor("count: factor must be non-empty");
    const bool want_series = series_upto.has_value();
    const int upto = want_series ? *series_upto : *n;
    if (upto < 0) throw kb::OutOfRange("count: index must be >= 0");

    std::vector<kb::CountSeries> runs;
    std::vector<std::string> skipped;
    if (engine_text == "all") {
        const auto fib = kb::bonacci(kp, upto + k);
        if (fib.values[upto + k] <= mpz_class(guard))
            runs.push_back(kb::count_series(kp, f, upto, kb::Engine::naive, guard));
        else
            skipped.push_back("naive (iterate exceeds the size guard)");
        runs.push_back(kb::count_series(kp, f, upto, kb::Engine::block));
        if (f.size() <= 2)
            runs.push_back(
                kb::count_series(kp, f, upto, kb::Engine::recurrence));
        else
            skipped.push_back("recurrence (factor longer than 2)");
        const bool closed_ok =
            k >= 3 && (f.size() == 1 ||
                       (f.size() == 2 &&
                        kb::classify2(kp, f).family != kb::Family::NotAFactor));
        if (closed_ok)
            runs.push_back(
                kb::count_series(kp, f, upto, kb::Engine::closed_form));
        else
            skipped.push_back("closed-form (no closed form applies)");
        for (std::size_t i = 1; i < runs.size(); ++i) {
            for (int j = 0; j <= upto; ++j) {
                if (runs[i].values[j] == runs[0].values[j]) continue;
                std::cerr << "engine disagreement on " << kb::to_string(f)
                          << " at n=" << j << ": "
                          << kb::engine_name(runs[0].engine) << "="
                          << runs[0].values[j].get_str() << ", "
                          << kb::engine_name(runs[i].engine) << "="
                          << runs[i].values[j].get_str() << "\n";
                return kExitDisagreement;
            }
        }
    } else {
        runs.push_back(
            kb::count_series(kp, f, upto, kb::parse_engine(engine_text), guard));
    }

    const kb::CountSeries& cs = runs.front();
    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["factor"] = word_json(f);
        j["factor_text"] = kb::to_string(f);
        ordered_json engines = ordered_json::array();
        for (const kb::CountSeries& r : runs)
            engines.push_back(kb::engine_name(r.engine));
        j["engines"] = engines;
        if (!skipped.empty()) j["skipped"] = skipped;
        if (engine_text == "all") j["agreement"] = true;
        if (want_series) {
            j["upto"] = upto;
            j["values"] = values_json(cs.values);
        } else {
            j["n"] = upto;
            j["count"] = cs.values[upto].get_str();
        }
        emit_json(j);
    } else if (want_series && format == "csv") {
        std::cout << "n,count\n";
        for (int i = 0; i <= upto; ++i)
            std::cout << i << "," << cs.values[i].get_str() << "\n";
    } else if (want_series && format == "markdown") {
        std::cout << "| n | count |\n|---:|---:|\n";
        for (int i = 0; i <= upto; ++i)
            std::cout << "| " << i << " | " << cs.values[i].get_str() << " |\n";
    } else if (want_series) {
        std::cout << join_values(cs.values) << "\n";
    } else {
        std::cout << cs.values[upto].get_str() << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- ogf

int run_ogf(int k, const std::string& factor_text, std::optional<int> expand,
            const std::string& format) {
    const kb::KParam kp(k);
    const kb::Word f = kb::parse_word(factor_text);
    if (f.size() != 1 && f.size() != 2)
        throw kb::NotAFactorError(
            "closed forms cover single digits and length-2 factors only");
    const kb::RationalGF gf =
        f.size() == 1 ? kb::ogf_digit(kp, f[0]) : kb::ogf_factor2(kp, f);
    const std::string pretty = kb::describe_ogf(kp, f);
    std::vector<mpz_class> coeffs;
    if (expand) {
        if (*expand < 0) throw kb::OutOfRange("--expand must be >= 0");
        coeffs = kb::series(gf, *expand);
    }
    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["factor"] = word_json(f);
        j["factor_text"] = kb::to_string(f);
        j["factored"] = pretty;
        j["numerator"] = kb::to_string(gf.num());
        j["denominator"] = kb::to_string(gf.den());
        if (expand) j["series"] = values_json(coeffs);
        emit_json(j);
    } else {
        std::cout << pretty << "\n";
        std::cout << "= " << kb::to_string(gf) << "\n";
        if (expand) std::cout << "series: " << join_values(coeffs) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- classify

std::string class_text(const kb::Factor2Class& cls) {
    std::ostringstream oss;
    switch (cls.family) {
        case kb::Family::B1:
            oss << "B1(i=" << cls.i << ", a=" << cls.a << ")";
            break;
        case kb::Family::B2:
            oss << "B2(i=" << cls.i << ", b=" << cls.b << ")";
            break;
        case kb::Family::B3:
            oss << "B3(a=" << cls.a << ")";
            break;
        case kb::Family::NotAFactor:
            return "NotAFactor";
    }
    if (cls.witness) oss << ", witness n=" << *cls.witness;
    return oss.str();
}

ordered_json class_json(const kb::Factor2Class& cls) {
    ordered_json j;
    j["family"] = kb::family_name(cls.family);
    j["i"] = cls.i;
    j["a"] = cls.a;
    j["b"] = cls.b;
    if (cls.witness)
        j["witness"] = *cls.witness;
    else
        j["witness"] = nullptr;
    return j;
}

int run_classify(int k, const std::string& factor_text,
                 const std::string& format) {
    const kb::KParam kp(k);
    const kb::Word f = kb::parse_word(factor_text);
    const kb::Factor2Class cls = kb::classify2(kp, f);
    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["factor"] = word_json(f);
        j["factor_text"] = kb::to_string(f);
        j.update(class_json(cls));
        emit_json(j);
    } else {
        std::cout << class_text(cls) << "\n";
    }
    return 0;
}

int run_enumerate(int k, long long bound, const std::string& format) {
    const kb::KParam kp(k);
    const auto list = kb::enumerate_fac2(kp, bound);
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const kb::EnumeratedFactor& e : list) {
            ordered_json j;
            j["factor"] = word_json(e.word);
            j["factor_text"] = kb::to_string(e.word);
            j.update(class_json(e.cls));
            arr.push_back(j);
        }
        ordered_json j;
        j["k"] = k;
        j["digit_bound"] = bound;
        j["count"] = list.size();
        j["factors"] = arr;
        emit_json(j);
    } else if (format == "csv") {
        std::cout << "factor,family,i,a,b,witness\n";
        for (const kb::EnumeratedFactor& e : list) {
            std::cout << kb::to_string(e.word) << ","
                      << kb::family_name(e.cls.family) << "," << e.cls.i << ","
                      << e.cls.a << "," << e.cls.b << ",";
            if (e.cls.witness) std::cout << *e.cls.witness;
            std::cout << "\n";
        }
    } else {
        for (const kb::EnumeratedFactor& e : list)
            std::cout << kb::to_string(e.word) << ": " << class_text(e.cls)
                      << "\n";
        std::cout << list.size() << " factors with digits <= " << bound << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ tables

ordered_json table_json(const kb::TableSpec& spec, kb::Engine engine) {
    const auto values = kb::table_values(spec, engine);
    ordered_json j;
    j["id"] = spec.id;
    j["k"] = spec.k;
    j["engine"] = kb::engine_name(engine);
    j["columns"] = spec.labels;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < static_cast<int>(values.size()); ++r) {
        ordered_json row;
        row["n"] = spec.row_lo + r;
        row["values"] = values_json(values[r]);
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

int run_tables(const std::optional<std::string>& id, bool verify,
               const std::string& engine_text, const std::string& format) {
    std::vector<kb::TableSpec> specs;
    if (id)
        specs.push_back(kb::table_spec(*id));
    else
        specs = kb::appendix_tables();

    if (verify) {
        bool all_pass = true;
        ordered_json arr = ordered_json::array();
        for (const kb::TableSpec& spec : specs) {
            const kb::TableVerifyResult res = kb::verify_table(spec);
            all_pass = all_pass && res.pass;
            if (format == "json") {
                ordered_json j;
                j["id"] = res.id;
                j["pass"] = res.pass;
                j["cells"] = res.cells;
                j["mismatches"] = res.mismatches;
                arr.push_back(j);
            } else {
                std::cout << res.id << ": " << (res.pass ? "PASS" : "FAIL")
                          << " (" << res.cells << " cells)\n";
                for (const std::string& m : res.mismatches)
                    std::cout << "  " << m << "\n";
            }
        }
        if (format == "json") emit_json(arr);
        return all_pass ? 0 : kExitTableMismatch;
    }

    const kb::Engine engine = kb::parse_engine(engine_text);
    for (const kb::TableSpec& spec : specs) {
        if (format == "json")
            emit_json(table_json(spec, engine));
        else if (format == "csv")
            std::cout << kb::render_table_csv(spec, engine);
        else
            std::cout << kb::render_table_markdown(spec, engine);
        if (specs.size() > 1 && format != "json") std::cout << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- conjecture

struct FactorVerdict {
    kb::Word word;
    int cap = 0;
    int terms = 0;
    kb::ConjectureVerdict verdict;
    std::string error;  // nonempty when the fit itself was not possible
};

int run_conjecture(int k, int max_len, int from_iterate,
                   std::optional<int> terms_flag, std::optional<int> cap_flag,
                   bool report, bool self_test, const std::string& format) {
    const kb::KParam kp(k);
    if (self_test) {
        // Negative control: a geometric series has characteristic root 2,
        // which no power of the target polynomial contains.
        std::vector<mpz_class> synthetic;
        mpz_class v = 1;
        for (int i = 0; i < 24; ++i) {
            synthetic.push_back(v);
            v *= 2;
        }
        const kb::ConjectureVerdict verdict = kb::check_conjecture_series(
            kp, synthetic, cap_flag.value_or(kb::default_order_cap(kp)));
        const bool as_designed =
            verdict.status == kb::ConjectureVerdict::Status::fails;
        if (format == "json") {
            ordered_json j;
            j["k"] = k;
            j["self_test"] = true;
            j["status"] = kb::conjecture_status_name(verdict.status);
            j["witness"] = kb::to_string(verdict.witness, "x");
            j["as_designed"] = as_designed;
            emit_json(j);
        } else if (as_designed) {
            std::cout << "self-test: synthetic series rejected with witness "
                      << kb::to_string(verdict.witness, "x")
                      << ", as designed\n";
        } else {
            std::cout << "self-test: expected status 'fails', got '"
                      << kb::conjecture_status_name(verdict.status) << "'\n";
        }
        return as_designed ? 0 : kExitConjecture;
    }

    if (max_len < 1) throw kb::OutOfRange("--max-len must be >= 1");
    if (from_iterate < 1) throw kb::OutOfRange("--iterate must be >= 1");

    std::vector<kb::Word> factors;
    for (int m = 1; m <= max_len; ++m)
        for (const kb::Word& w : kb::fac_m_empirical(kp, m, from_iterate))
            factors.push_back(w);

    // One batched block-engine pass long enough for every per-factor budget.
    const int cap_bound = std::max(
        cap_flag.value_or(0),
        kb::suggested_order_cap(kp, from_iterate, from_iterate));
    const int global_terms =
        terms_flag.value_or(kb::default_term_budget(cap_bound));
    if (global_terms < 2) throw kb::OutOfRange("--max-n-terms must be >= 2");
    kb::BlockCounter counter(kp, factors);
    const auto all_series = counter.series(global_terms - 1);

    std::vector<FactorVerdict> results;
    int holds = 0, fails = 0, inconclusive = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        FactorVerdict fv;
        fv.word = factors[i];
        const auto& vals = all_series[i];
        int first_nonzero = -1;
        for (std::size_t j = 0; j < vals.size(); ++j) {
            if (vals[j] != 0) {
                first_nonzero = static_cast<int>(j);
                break;
            }
        }
        const kb::Digit max_digit =
            *std::max_element(factors[i].begin(), factors[i].end());
        fv.cap = cap_flag.value_or(
            kb::suggested_order_cap(kp, max_digit, first_nonzero));
        fv.terms = std::min(
            terms_flag.value_or(kb::default_term_budget(fv.cap)), global_terms);
        const std::vector<mpz_class> prefix(vals.begin(),
                                            vals.begin() + fv.terms);
        try {
            fv.verdict = kb::check_conjecture_series(kp, prefix, fv.cap);
        } catch (const kb::InsufficientTerms& e) {
            fv.error = e.what();
        } catch (const kb::NoRecurrenceFound& e) {
            fv.error = e.what();
        }
        if (!fv.error.empty()) {
            ++inconclusive;
        } else {
            switch (fv.verdict.status) {
                case kb::ConjectureVerdict::Status::holds: ++holds; break;
                case kb::ConjectureVerdict::Status::fails: ++fails; break;
                case kb::ConjectureVerdict::Status::inconclusive:
                    ++inconclusive;
                    break;
            }
        }
        results.push_back(std::move(fv));
    }

    if (format == "json") {
        ordered_json j;
        j["k"] = k;
        j["max_len"] = max_len;
        j["iterate"] = from_iterate;
        j["term_budget_rule"] =
            terms_flag ? "fixed by --max-n-terms" : "4 * order_cap + 8";
        ordered_json arr = ordered_json::array();
        for (const FactorVerdict& fv : results) {
            ordered_json e;
            e["factor"] = word_json(fv.word);
            e["factor_text"] = kb::to_string(fv.word);
            e["order_cap"] = fv.cap;
            e["terms"] = fv.terms;
            if (!fv.error.empty()) {
                e["status"] = "inconclusive";
                e["reason"] = fv.error;
            } else {
                e["status"] = kb::conjecture_status_name(fv.verdict.status);
                if (fv.verdict.status ==
                    kb::ConjectureVerdict::Status::holds) {
                    e["s"] = fv.verdict.s;
                    e["order"] = fv.verdict.fit.order;
                    if (report)
                        e["characteristic_polynomial"] = kb::to_string(
                            fv.verdict.fit.characteristic_polynomial, "x");
                }
                if (fv.verdict.status ==
                    kb::ConjectureVerdict::Status::fails)
                    e["witness"] = kb::to_string(fv.verdict.witness, "x");
                if (!fv.verdict.reason.empty())
                    e["reason"] = fv.verdict.reason;
            }
            arr.push_back(e);
        }
        j["factors"] = arr;
        ordered_json summary;
        summary["checked"] = results.size();
        summary["holds"] = holds;
        summary["fails"] = fails;
        summary["inconclusive"] = inconclusive;
        j["summary"] = summary;
        emit_json(j);
    } else {
        for (const FactorVerdict& fv : results) {
            std::cout << kb::to_string(fv.word) << ": ";
            if (!fv.error.empty()) {
                std::cout << "inconclusive (" << fv.error << ")";
            } else {
                std::cout << kb::conjecture_status_name(fv.verdict.status);
                if (fv.verdict.status ==
                    kb::ConjectureVerdict::Status::holds) {
                    std::cout << " (s=" << fv.verdict.s
                              << ", order=" << fv.verdict.fit.order
                              << ", terms=" << fv.terms << ")";
                    if (report)
                        std::cout << " char "
                                  << kb::to_string(
                                         fv.verdict.fit
                                             .characteristic_polynomial,
                                         "x");
                } else if (fv.verdict.status ==
                           kb::ConjectureVerdict::Status::fails) {
                    std::cout << " (witness "
                              << kb::to_string(fv.verdict.witness, "x") << ")";
                } else if (!fv.verdict.reason.empty()) {
                    std::cout << " (" << fv.verdict.reason << ")";
                }
            }
            std::cout << "\n";
        }
        std::cout << "checked " << results.size() << " factors of length <= "
                  << max_len << " from iterate " << from_iterate << ": "
                  << holds << " holds, " << fails << " fails, " << inconclusive
                  << " inconclusive\n";
    }
    return fails > 0 ? kExitConjecture : 0;
}

// ------------------------------------------------------------- asymptotics

int run_asymptotics(int k, long long d, const std::string& window,
                    double tolerance, const std::string& format) {
    const kb::KParam kp(k);
    const std::size_t sep = window.find("..");
    if (sep == std::string::npos)
        throw kb::OutOfRange("--window must look like 40..60");
    int lo = 0;
    int hi = 0;
    try {
        lo = std::stoi(window.substr(0, sep));
        hi = std::stoi(window.substr(sep + 2));
    } catch (const std::exception&) {
        throw kb::OutOfRange("--window must look like 40..60");
    }
    const kb::AsymptoticReport rep =
        kb::asymptotic_check(kp, d, lo, hi, tolerance);
    if (format == "json") {
        ordered_json j;
        j["k"] = rep.k;
        j["d"] = rep.d;
        j["s"] = rep.s;
        j["window"] = {rep.n_lo, rep.n_hi};
        j["alpha"] = rep.alpha;
        j["gamma_estimate"] = rep.gamma_estimate;
        j["max_relative_fluctuation"] = rep.max_relative_fluctuation;
        j["tail_fluctuation"] = rep.tail_fluctuation;
        j["tolerance"] = rep.tolerance;
        j["converging"] = rep.converging;
        j["ratio_samples"] = rep.ratio_samples;
        emit_json(j);
    } else {
        std::cout << "k=" << rep.k << ", d=" << rep.d << ": s=" << rep.s
                  << ", alpha=" << rep.alpha << "\n";
        std::cout << "window n=" << rep.n_lo << ".." << rep.n_hi
                  << ": gamma ~ " << rep.gamma_estimate
                  << ", max fluctuation "
                  << 100.0 * rep.max_relative_fluctuation << "% (tail "
                  << 100.0 * rep.tail_fluctuation << "%), converging: "
                  << (rep.converging ? "yes" : "no") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact arithmetic for infinite-alphabet k-Bonacci words: iterates, "
        "occurrence counts by independent engines, closed-form generating "
        "functions, length-2 factor classification, recurrence conjecture "
        "checks, and growth-law reports"};
    app.require_subcommand(1);

    const std::vector<std::string> kTextJson{"text", "json"};
    const std::vector<std::string> kAllFormats{"text", "json", "csv",
                                               "markdown"};

    // iterate
    auto* c_iter = app.add_subcommand("iterate", "print the iterate W_n");
    int it_k = 0, it_n = 0;
    bool it_stream = false, it_project = false;
    std::string it_format = "text";
    std::uint64_t it_guard = kb::kDefaultSizeGuard;
    c_iter->add_option("-k", it_k, "alphabet block size (>= 2)")->required();
    c_iter->add_option("-n", it_n, "iterate index (>= 0)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_iter->add_flag("--stream", it_stream,
                     "stream digits without materializing (ignores the guard)");
    c_iter->add_flag("--project", it_project, "reduce every digit mod k");
    c_iter->add_option("--format", it_format, "output format")
        ->check(CLI::IsMember(kTextJson));
    c_iter->add_option("--guard", it_guard,
                       "materialization limit in digits (exit 2 beyond)");

    // count
    auto* c_count =
        app.add_subcommand("count", "occurrences of a factor in W_n");
    int ct_k = 0;
    std::string ct_factor, ct_engine = "block", ct_format = "text";
    std::optional<int> ct_n, ct_series;
    std::uint64_t ct_guard = kb::kDefaultSizeGuard;
    c_count->add_option("-k", ct_k, "alphabet block size (>= 2)")->required();
    c_count
        ->add_option("-f,--factor", ct_factor,
                     "factor digits, comma-separated for digits > 9 (a lone "
                     "digit > 9 needs a trailing comma: -f 12,)")
        ->required();
    auto* ct_query = c_count->add_option_group("query", "what to compute");
    ct_query->add_option("-n", ct_n, "single iterate index");
    ct_query->add_option("--series", ct_series,
                         "full series c(factor; 0..upto)");
    ct_query->require_option(1);
    c_count
        ->add_option("--engine", ct_engine,
                     "naive | block | rec | ogf | all (all cross-checks and "
                     "exits 3 on disagreement)")
        ->check(CLI::IsMember({"naive", "block", "rec", "recurrence", "ogf",
                               "closed-form", "all"}));
    c_count->add_option("--format", ct_format, "output format")
        ->check(CLI::IsMember(kAllFormats));
    c_count->add_option("--guard", ct_guard,
                        "materialization limit for the naive engine");

    // ogf
    auto* c_ogf = app.add_subcommand(
        "ogf", "closed-form generating function of a factor's count series");
    int og_k = 0;
    std::string og_factor, og_format = "text";
    std::optional<int> og_expand;
    c_ogf->add_option("-k", og_k, "alphabet block size (>= 3)")->required();
    c_ogf->add_option("-f,--factor", og_factor, "digit or length-2 factor")
        ->required();
    c_ogf->add_option("--expand", og_expand,
                      "also print series coefficients through this order");
    c_ogf->add_option("--format", og_format, "output format")
        ->check(CLI::IsMember(kTextJson));

    // classify
    auto* c_cls = app.add_subcommand(
        "classify", "family verdict for a length-2 word (B1/B2/B3/NotAFactor)");
    int cl_k = 0;
    std::string cl_factor, cl_format = "text";
    c_cls->add_option("-k", cl_k, "alphabet block size (>= 2)")->required();
    c_cls->add_option("-f,--factor", cl_factor, "length-2 word")->required();
    c_cls->add_option("--format", cl_format, "output format")
        ->check(CLI::IsMember(kTextJson));

    // enumerate
    auto* c_enum = app.add_subcommand(
        "enumerate", "all length-2 family members within a digit bound");
    int en_k = 0;
    long long en_bound = 0;
    std::string en_format = "text";
    c_enum->add_option("-k", en_k, "alphabet block size (>= 2)")->required();
    c_enum->add_option("--bound", en_bound, "largest digit allowed")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_enum->add_option("--format", en_format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // tables
    auto* c_tab = app.add_subcommand(
        "tables", "regenerate or verify the embedded reference tables");
    std::optional<std::string> tb_id;
    bool tb_verify = false;
    std::string tb_engine = "ogf", tb_format = "text";
    c_tab->add_option("--table", tb_id,
                      "digits-k4 | B1-k4 | len2-mixed-k4 (default: all)")
        ->check(CLI::IsMember({"digits-k4", "B1-k4", "len2-mixed-k4"}));
    c_tab->add_flag("--verify", tb_verify,
                    "recompute every cell with the closed-form and block "
                    "engines and compare against the embedded data (exit 5 "
                    "on mismatch)");
    c_tab->add_option("--engine", tb_engine, "engine for regeneration")
        ->check(CLI::IsMember(
            {"naive", "block", "rec", "recurrence", "ogf", "closed-form"}));
    c_tab->add_option("--format", tb_format, "output format")
        ->check(CLI::IsMember(kAllFormats));

    // conjecture
    auto* c_conj = app.add_subcommand(
        "conjecture",
        "fit minimal recurrences for empirically enumerated factors and "
        "check that each characteristic polynomial divides a power of the "
        "target denominator (exit 6 if any factor fails)");
    int cj_k = 3, cj_maxlen = 2, cj_iterate = 12;
    std::optional<int> cj_terms, cj_cap;
    bool cj_report = false, cj_selftest = false;
    std::string cj_format = "text";
    c_conj->add_option("-k", cj_k, "alphabet block size (>= 3)");
    c_conj->add_option("--max-len", cj_maxlen,
                       "check all factors up to this length");
    c_conj->add_option("--iterate", cj_iterate,
                       "enumerate factors from this iterate");
    c_conj->add_option("--max-n-terms", cj_terms,
                       "series terms per factor (default: 4*order_cap + 8)");
    c_conj->add_option("--order-cap", cj_cap,
                       "recurrence order cap (default: sized per factor)");
    c_conj->add_flag("--report", cj_report,
                     "include fitted characteristic polynomials");
    c_conj->add_flag("--self-test", cj_selftest,
                     "run the synthetic negative control instead (a "
                     "geometric series must be rejected)");
    c_conj->add_option("--format", cj_format, "output format")
        ->check(CLI::IsMember(kTextJson));

    // asymptotics
    auto* c_asym = app.add_subcommand(
        "asymptotics",
        "growth-law report for a digit's count series: ratios against "
        "n^(s-1) * alpha^n with the dominant root alpha");
    int as_k = 0;
    long long as_d = 0;
    std::string as_window = "40..60", as_format = "text";
    double as_tol = 0.01;
    c_asym->add_option("-k", as_k, "alphabet block size (>= 3)")->required();
    c_asym->add_option("-d", as_d, "digit")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_asym->add_option("--window", as_window, "sample window, e.g. 40..60");
    c_asym->add_option("--tolerance", as_tol,
                       "tail fluctuation threshold for 'converging'");
    c_asym->add_option("--format", as_format, "output format")
        ->check(CLI::IsMember(kTextJson));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (c_iter->parsed())
            return run_iterate(it_k, it_n, it_stream, it_project, it_format,
                               it_guard);
        if (c_count->parsed())
            return run_count(ct_k, ct_factor, ct_n, ct_series, ct_engine,
                             ct_format, ct_guard);
        if (c_ogf->parsed()) return run_ogf(og_k, og_factor, og_expand, og_format);
        if (c_cls->parsed()) return run_classify(cl_k, cl_factor, cl_format);
        if (c_enum->parsed()) return run_enumerate(en_k, en_bound, en_format);
        if (c_tab->parsed())
            return run_tables(tb_id, tb_verify, tb_engine, tb_format);
        if (c_conj->parsed())
            return run_conjecture(cj_k, cj_maxlen, cj_iterate, cj_terms,
                                  cj_cap, cj_report, cj_selftest, cj_format);
        if (c_asym->parsed())
            return run_asymptotics(as_k, as_d, as_window, as_tol, as_format);
    } catch (const kb::SizeGuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const kb::NotAFactorError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClassification;
    } catch (const kb::WrongLength& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClassification;
    } catch (const kb::UnclassifiedFactor& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClassification;
    } catch (const kb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
