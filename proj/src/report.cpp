#include <qhilb/report.hpp>

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include <qhilb/check.hpp>
#include <qhilb/hilbert.hpp>
#include <qhilb/identities.hpp>
#include <qhilb/table_cache.hpp>

namespace qhilb::cli
{

bool RunReport::passed() const
{
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.passed; });
}

nlohmann::json RunReport::to_json() const
{
    nlohmann::json doc;
    doc["command"] = command;
    doc["parameters"] = parameters;
    doc["results"] = nlohmann::json::array();
    for (const auto &r : results) {
        doc["results"].push_back({{"name", r.name}, {"status", r.passed ? "pass" : "fail"}, {"details", r.details}});
    }
    doc["elapsed_ms"] = elapsed_ms;
    doc["status"] = passed() ? "pass" : "fail";
    return doc;
}

std::string RunReport::to_text() const
{
    std::ostringstream os;
    std::size_t failures = 0;
    for (const auto &r : results) {
        os << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  " << r.details << '\n';
        failures += r.passed ? 0 : 1;
    }
    os << command << ": " << results.size() - failures << '/' << results.size() << " passed (" << elapsed_ms
       << " ms)\n";
    return os.str();
}

namespace
{

// Exhaustive fountain search stays cheap up to this many coins.
constexpr int oracle_coin_cap = 12;

using Results = std::vector<CheckResult>;

template <typename Fn>
void record(Results &out, std::string name, Fn &&fn)
{
    try {
        const CheckOutcome c = fn();
        out.push_back({std::move(name), c.passed, c.detail});
    } catch (const std::exception &e) {
        out.push_back({std::move(name), false, std::string("error: ") + e.what()});
    }
}

fountains::FountainTable suite_table(int p, int order, const VerifyOptions &options)
{
    const int n_fountain = std::min(std::max(order, p), oracle_coin_cap);
    const int n_max = std::max({hilbert::required_n_max(p, order, 5), order, n_fountain});
    const int k_max = std::max({hilbert::required_k_max(p, order, 5), order, n_fountain});
    return cache::load_or_build(options.cache_dir, p, n_max, k_max);
}

void identity_checks(Results &out, const fountains::FountainTable &table, int order)
{
    const int p = table.p();
    const std::string tag = "p=" + std::to_string(p) + " ";
    record(out, tag + "G shift relation and nested form",
           [&] { return identities::check_G_definition(table, order); });
    record(out, tag + "F continued fraction and functional equation",
           [&] { return identities::check_F_functional_equation(table, order); });
    record(out, tag + "T sum vs product form", [&] { return identities::check_T_product_form(p, order); });
    if (p == 1) {
        record(out, tag + "Ramanujan quotient formula", [&] { return identities::ramanujan_check(table, order); });
    }
}

Results verify_one(int p, int order, const VerifyOptions &options)
{
    Results out;
    const std::string tag = "p=" + std::to_string(p) + " ";
    std::optional<fountains::FountainTable> table;
    record(out, tag + "table invariants", [&] {
        table = suite_table(p, order, options);
        const auto problem = table->validate();
        return problem.empty() ? CheckOutcome::pass("f, g, h consistent") : CheckOutcome::fail(problem);
    });
    if (!table) {
        return out;
    }

    const int n_fountain = std::min(std::max(order, p), oracle_coin_cap);
    const auto all = fountains::enumerate_fountains(p, n_fountain);
    const auto primitive = fountains::enumerate_primitive_fountains(p, n_fountain);
    record(out, tag + "f-table vs enumeration",
           [&] { return compare_counts(*table, fountains::TableKind::f, all, n_fountain); });
    record(out, tag + "g-table vs primitive enumeration",
           [&] { return compare_counts(*table, fountains::TableKind::g, primitive, n_fountain); });
    record(out, tag + "splitting recurrence on enumeration",
           [&] { return identities::check_splitting_on_counts(p, all, primitive, n_fountain); });
    if (p == 1) {
        record(out, tag + "continued fraction totals vs enumeration", [&] {
            const auto totals = identities::continued_fraction_totals(n_fountain);
            std::vector<Coefficient> counted(static_cast<std::size_t>(n_fountain + 1));
            for (const auto &[nk, c] : all) {
                counted[static_cast<std::size_t>(nk.first)] += c;
            }
            return compare_sequences(totals, counted, "continued fraction", "enumeration");
        });
    }

    identity_checks(out, *table, order);

    std::optional<hilbert::ZetaSeries> theorem;
    record(out, tag + "theorem vs diagram oracle", [&] {
        auto terms = hilbert::triangle_terms(p, order);
        for (auto &t : terms) {
            t.q_exp += options.triangle_weight_offset;
        }
        theorem = hilbert::zeta_from_triangles(*table, terms, order);
        const auto oracle = hilbert::zeta_oracle(p, order);
        return compare_sequences(theorem->coefficients, oracle.coefficients, "theorem", "oracle");
    });
    if (theorem && p == 1) {
        record(out, tag + "theorem vs Euler product", [&] {
            return compare_sequences(theorem->coefficients, hilbert::zeta_closed_p1(order).coefficients, "theorem",
                                     "closed form");
        });
    }
    if (theorem && p == 2) {
        record(out, tag + "theorem vs theta closed form", [&] {
            return compare_sequences(theorem->coefficients, hilbert::zeta_closed_p2(order).coefficients, "theorem",
                                     "closed form");
        });
    }
    record(out, tag + "bijection refinement and l-cutoff",
           [&] { return hilbert::check_bijection_refinement(*table, order, 5); });
    return out;
}

Results identities_one(int p, int order, const VerifyOptions &options)
{
    Results out;
    std::optional<fountains::FountainTable> table;
    record(out, "p=" + std::to_string(p) + " table invariants", [&] {
        table = cache::load_or_build(options.cache_dir, p, order, order);
        const auto problem = table->validate();
        return problem.empty() ? CheckOutcome::pass("f, g, h consistent") : CheckOutcome::fail(problem);
    });
    if (table) {
        identity_checks(out, *table, order);
    }
    return out;
}

template <typename Fn>
RunReport run_suite(std::string command, const std::vector<int> &ps, int order, const VerifyOptions &options, Fn per_p)
{
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    report.command = std::move(command);
    report.parameters["p"] = ps;
    report.parameters["order"] = order;

    std::vector<Results> per(ps.size());
    if (options.parallel && ps.size() > 1) {
        std::vector<std::future<Results>> jobs;
        for (int p : ps) {
            jobs.push_back(std::async(std::launch::async, per_p, p, order, std::cref(options)));
        }
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            per[i] = jobs[i].get();
        }
    } else {
        for (std::size_t i = 0; i < ps.size(); ++i) {
            per[i] = per_p(ps[i], order, options);
        }
    }
    for (auto &r : per) {
        report.results.insert(report.results.end(), r.begin(), r.end());
    }
    record(report.results, "Jacobi triple product", [&] {
        return identities::jacobi_triple_product_check(order, identities::jtp_min_z(order),
                                                       identities::jtp_max_z(order));
    });
    const auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
    return report;
}

} // namespace

RunReport run_verify(const std::vector<int> &ps, int order, const VerifyOptions &options)
{
    return run_suite("verify", ps, order, options, verify_one);
}

RunReport run_identities(const std::vector<int> &ps, int order, const VerifyOptions &options)
{
    return run_suite("identities", ps, order, options, identities_one);
}

} // namespace qhilb::cli
