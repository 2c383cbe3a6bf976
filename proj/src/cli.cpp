#include <qhilb/cli.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <qhilb/check.hpp>
#include <qhilb/hilbert.hpp>
#include <qhilb/report.hpp>
#include <qhilb/table_cache.hpp>

namespace qhilb::cli
{

namespace
{

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<std::filesystem::path> resolve_cache_dir(const std::string &flag)
{
    if (!flag.empty()) {
        return std::filesystem::path(flag);
    }
    if (const char *env = std::getenv("QHILB_CACHE_DIR"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

nlohmann::json decimal_array(const std::vector<Coefficient> &values)
{
    auto arr = nlohmann::json::array();
    for (const auto &c : values) {
        arr.push_back(to_decimal(c));
    }
    return arr;
}

std::string joined(const std::vector<Coefficient> &values, const char *sep)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        os << (i ? sep : "") << values[i];
    }
    return os.str();
}

struct ZetaArgs {
    int p = 1;
    int order = 10;
    std::string method = "theorem";
    std::string format = "text";
    std::string cache_dir;
};

hilbert::ZetaSeries compute_zeta(const std::string &method, int p, int order,
                                 const std::optional<std::filesystem::path> &cache_dir)
{
    if (method == "theorem") {
        const auto table = cache::load_or_build(cache_dir, p, hilbert::required_n_max(p, order),
                                                hilbert::required_k_max(p, order));
        return hilbert::zeta_theorem(table, order);
    }
    if (method == "oracle") {
        return hilbert::zeta_oracle(p, order);
    }
    if (p == 1) {
        return hilbert::zeta_closed_p1(order);
    }
    return hilbert::zeta_closed_p2(order);
}

int cmd_zeta(const ZetaArgs &a, std::ostream &out)
{
    if (a.method == "closed" && a.p != 1 && a.p != 2) {
        throw UsageError("--method closed is only available for p = 1 and p = 2");
    }
    const auto cache_dir = resolve_cache_dir(a.cache_dir);
    std::vector<std::string> methods;
    if (a.method == "all") {
        methods = {"theorem", "oracle"};
        if (a.p <= 2) {
            methods.emplace_back("closed");
        }
    } else {
        methods = {a.method};
    }
    std::vector<hilbert::ZetaSeries> values;
    for (const auto &m : methods) {
        values.push_back(compute_zeta(m, a.p, a.order, cache_dir));
    }
    CheckOutcome verdict = CheckOutcome::pass();
    for (std::size_t i = 1; i < values.size() && verdict; ++i) {
        verdict =
            compare_sequences(values[0].coefficients, values[i].coefficients, methods[0], methods[i]);
    }
    const bool all = a.method == "all";

    if (a.format == "json") {
        nlohmann::json doc;
        doc["p"] = a.p;
        doc["order"] = a.order;
        doc["method"] = a.method;
        if (all) {
            doc["results"] = nlohmann::json::object();
            for (std::size_t i = 0; i < methods.size(); ++i) {
                doc["results"][methods[i]] = decimal_array(values[i].coefficients);
            }
            doc["verdict"] = verdict ? "pass" : "fail";
            if (!verdict) {
                doc["details"] = verdict.detail;
            }
        } else {
            doc["coefficients"] = decimal_array(values[0].coefficients);
        }
        out << doc.dump() << '\n';
    } else if (a.format == "csv") {
        out << 'm';
        for (const auto &m : methods) {
            out << ',' << m;
        }
        out << '\n';
        for (int m = 0; m <= a.order; ++m) {
            out << m;
            for (const auto &v : values) {
                out << ',' << v.coefficients[static_cast<std::size_t>(m)];
            }
            out << '\n';
        }
    } else {
        for (std::size_t i = 0; i < methods.size(); ++i) {
            out << methods[i] << ": " << joined(values[i].coefficients, ",") << '\n';
        }
        if (all) {
            out << "verdict: " << (verdict ? "pass" : "fail");
            if (!verdict) {
                out << " (" << verdict.detail << ')';
            }
            out << '\n';
        }
    }
    return verdict ? exit_ok : exit_failure;
}

struct FountainArgs {
    int p = 1;
    int max_n = 8;
    int max_k = -1;
    std::string table = "f";
    std::string format = "text";
    bool check_oracle = false;
    std::string cache_dir;
};

int cmd_fountains(const FountainArgs &a, std::ostream &out)
{
    const int max_k = a.max_k < 0 ? a.max_n : a.max_k;
    const auto kind = fountains::parse_table_kind(a.table);
    const auto table = cache::load_or_build(resolve_cache_dir(a.cache_dir), a.p, a.max_n, max_k);

    std::optional<CheckOutcome> oracle;
    if (a.check_oracle) {
        fountains::CountMap counts;
        if (kind == fountains::TableKind::f) {
            counts = fountains::enumerate_fountains(a.p, a.max_n);
        } else if (kind == fountains::TableKind::g) {
            counts = fountains::enumerate_primitive_fountains(a.p, a.max_n);
        } else {
            fountains::for_each_fountain(a.p, a.max_n, [&](const fountains::Fountain &c) {
                if (!fountains::is_primitive(c)) {
                    counts[{c.coin_count(), c.bottom_width()}] += 1;
                }
            });
        }
        oracle = compare_counts(table, kind, counts, a.max_n);
    }

    if (a.format == "json") {
        nlohmann::json doc;
        doc["p"] = a.p;
        doc["table"] = a.table;
        doc["entries"] = nlohmann::json::array();
        for (int n = 0; n <= a.max_n; ++n) {
            for (int k = 0; k <= n && k <= max_k; ++k) {
                doc["entries"].push_back({{"n", n}, {"k", k}, {"count", to_decimal(table.get(kind, n, k))}});
            }
        }
        if (oracle) {
            doc["oracle"] = {{"status", oracle->passed ? "pass" : "fail"}, {"details", oracle->detail}};
        }
        out << doc.dump() << '\n';
    } else if (a.format == "csv") {
        out << "n,k,count\n";
        for (int n = 0; n <= a.max_n; ++n) {
            for (int k = 0; k <= n && k <= max_k; ++k) {
                out << n << ',' << k << ',' << table.get(kind, n, k) << '\n';
            }
        }
    } else {
        for (int n = 0; n <= a.max_n; ++n) {
            for (int k = 0; k <= n && k <= max_k; ++k) {
                out << a.table << '(' << n << ',' << k << ")=" << table.get(kind, n, k) << '\n';
            }
        }
        if (oracle) {
            out << "oracle: " << (oracle->passed ? "pass" : "fail") << " (" << oracle->detail << ")\n";
        }
    }
    return (!oracle || oracle->passed) ? exit_ok : exit_failure;
}

struct SuiteArgs {
    std::vector<int> ps{1, 2, 3};
    int order = 8;
    std::string format = "text";
    std::string cache_dir;
};

int emit_report(const RunReport &report, const std::string &format, std::ostream &out)
{
    if (format == "json") {
        out << report.to_json().dump() << '\n';
    } else {
        out << report.to_text();
    }
    return report.passed() ? exit_ok : exit_failure;
}

void validate_ps(const std::vector<int> &ps)
{
    if (ps.empty()) {
        throw UsageError("--p needs at least one value");
    }
    for (int p : ps) {
        if (p < 1) {
            throw UsageError("--p values must be positive");
        }
    }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Euler characteristics of Hilbert schemes of points on X(p,1) via p-fountains", "qhilb"};
    app.require_subcommand(1);

    const auto formats = CLI::IsMember({"json", "csv", "text"});

    ZetaArgs zeta;
    auto *zeta_cmd = app.add_subcommand("zeta", "Coefficients Z_0..Z_order of the generating series");
    zeta_cmd->add_option("--p", zeta.p, "Group order p")->required()->check(CLI::PositiveNumber);
    zeta_cmd->add_option("--order", zeta.order, "Truncation order")->check(CLI::NonNegativeNumber);
    zeta_cmd->add_option("--method", zeta.method, "theorem, oracle, closed or all")
        ->check(CLI::IsMember({"theorem", "oracle", "closed", "all"}));
    zeta_cmd->add_option("--format", zeta.format, "json, csv or text")->check(formats);
    zeta_cmd->add_option("--cache-dir", zeta.cache_dir, "Directory for cached fountain tables");

    FountainArgs fount;
    auto *fount_cmd = app.add_subcommand("fountains", "Fountain count tables f, g, h");
    fount_cmd->add_option("--p", fount.p, "Group order p")->required()->check(CLI::PositiveNumber);
    fount_cmd->add_option("--max-n", fount.max_n, "Largest coin count")->check(CLI::NonNegativeNumber);
    fount_cmd->add_option("--max-k", fount.max_k, "Largest bottom width (default: max-n)")
        ->check(CLI::NonNegativeNumber);
    fount_cmd->add_option("--table", fount.table, "f, g or h")->check(CLI::IsMember({"f", "g", "h"}));
    fount_cmd->add_option("--format", fount.format, "json, csv or text")->check(formats);
    fount_cmd->add_flag("--check-oracle", fount.check_oracle, "Compare against exhaustive enumeration");
    fount_cmd->add_option("--cache-dir", fount.cache_dir, "Directory for cached fountain tables");

    SuiteArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run the full verification suite");
    verify_cmd->add_option("--p", verify.ps, "Comma-separated list of p")->delimiter(',');
    verify_cmd->add_option("--order", verify.order, "Truncation order")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--format", verify.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify_cmd->add_option("--cache-dir", verify.cache_dir, "Directory for cached fountain tables");

    SuiteArgs ident;
    auto *ident_cmd = app.add_subcommand("identities", "Check the generating-function identities");
    ident_cmd->add_option("--p", ident.ps, "Comma-separated list of p")->delimiter(',');
    ident_cmd->add_option("--order", ident.order, "Truncation order")->check(CLI::NonNegativeNumber);
    ident_cmd->add_option("--format", ident.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    ident_cmd->add_option("--cache-dir", ident.cache_dir, "Directory for cached fountain tables");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("qhilb");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (zeta_cmd->parsed()) {
            return cmd_zeta(zeta, out);
        }
        if (fount_cmd->parsed()) {
            return cmd_fountains(fount, out);
        }
        if (verify_cmd->parsed()) {
            validate_ps(verify.ps);
            VerifyOptions options;
            options.cache_dir = resolve_cache_dir(verify.cache_dir);
            return emit_report(run_verify(verify.ps, verify.order, options), verify.format, out);
        }
        if (ident_cmd->parsed()) {
            validate_ps(ident.ps);
            VerifyOptions options;
            options.cache_dir = resolve_cache_dir(ident.cache_dir);
            return emit_report(run_identities(ident.ps, ident.order, options), ident.format, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace qhilb::cli
