// rhoq: exact tables and machine verification for the rho partition
// identities. Exit codes: 0 success/verified, 1 identity violation found,
// 2 usage error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rhoq/rhoq.hpp"

namespace {

using namespace rhoq;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat need_format(const std::string& name) {
    const auto format = parse_format(name);
    if (!format) throw UsageError("unknown format '" + name + "' (plain, csv, json)");
    return *format;
}

Oracle need_oracle(const std::string& name) {
    const auto oracle = parse_oracle(name);
    if (!oracle) throw UsageError("unknown oracle '" + name + "' (combinator, direct, both)");
    return *oracle;
}

VariantSpec need_spec(const std::string& variant, int ell, int colors, int limit) {
    const auto parsed = parse_variant(variant);
    if (!parsed) {
        std::string known;
        for (const Variant v : all_variants) known += " " + variant_name(v);
        throw UsageError("unknown variant '" + variant + "'; expected one of:" + known);
    }
    if (limit < 0) throw UsageError("--limit must be >= 0");
    VariantSpec spec{.variant = *parsed,
                     .ell = ell,
                     .k = colors,
                     .order = static_cast<std::size_t>(limit)};
    spec.validate();  // throws std::invalid_argument on bad parameters
    return spec;
}

int run_table(const std::string& variant, int ell, int colors, int limit,
              const std::string& format) {
    const VariantSpec spec = need_spec(variant, ell, colors, limit);
    const Budgets budgets;
    if (spec.order > budgets.combinator)
        throw BudgetExceeded("table enumerates the combinator path; --limit capped at " +
                             std::to_string(budgets.combinator));
    const std::vector<Int> values = rho_table(family_of(spec), limit);
    render_table(std::cout, spec, values, need_format(format));
    return 0;
}

int run_verify(const std::string& variant, int ell, int colors, int limit,
               const std::string& oracle, const std::string& format) {
    const VariantSpec spec = need_spec(variant, ell, colors, limit);
    const VerificationReport report = verify(spec, need_oracle(oracle));
    render_report(std::cout, report, need_format(format));
    return report.ok() ? 0 : 1;
}

int run_verify_all(int limit, const std::vector<int>& ells, const std::vector<int>& colors,
                   const std::string& oracle, const std::string& format) {
    if (limit < 0) throw UsageError("--limit must be >= 0");
    const auto reports = verify_all(static_cast<std::size_t>(limit), ells, colors,
                                    need_oracle(oracle));
    render_reports(std::cout, reports, need_format(format));
    for (const VerificationReport& report : reports)
        if (!report.ok()) return 1;
    return 0;
}

int run_recurrence(int limit, const std::string& format) {
    if (limit < 2) throw UsageError("--limit must be >= 2");
    const Budgets budgets;
    if (static_cast<std::size_t>(limit) > budgets.combinator)
        throw BudgetExceeded("recurrence enumerates partitions; --limit capped at " +
                             std::to_string(budgets.combinator));
    std::vector<RecurrenceCheck> rows;
    for (int n = 2; n <= limit; n += 2) rows.push_back(evaluate_recurrence(n));
    render_recurrence(std::cout, rows, need_format(format));
    for (const RecurrenceCheck& row : rows)
        if (!row.holds) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tables and machine verification for the rho partition identities"};
    app.require_subcommand(1);

    std::string variant;
    std::string format = "plain";
    std::string oracle = "both";
    int ell = 0;
    int colors = 0;
    int limit = 0;
    std::vector<int> ell_sweep(default_ell_sweep.begin(), default_ell_sweep.end());
    std::vector<int> color_sweep(default_color_sweep.begin(), default_color_sweep.end());

    CLI::App* table = app.add_subcommand("table", "print n, rho(n) for n = 0..limit");
    table->add_option("--variant", variant, "variant name, e.g. rho, rho-over")->required();
    table->add_option("--ell", ell, "regularity modulus for the lregular variants");
    table->add_option("--colors", colors, "color count for rho-kcolored");
    table->add_option("--limit", limit, "highest n to print")->required();
    table->add_option("--format", format, "plain, csv or json");

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check one identity against its counting oracles");
    verify_cmd->add_option("--variant", variant, "variant name")->required();
    verify_cmd->add_option("--ell", ell, "regularity modulus for the lregular variants");
    verify_cmd->add_option("--colors", colors, "color count for rho-kcolored");
    verify_cmd->add_option("--limit", limit, "check coefficients 0..limit")->required();
    verify_cmd->add_option("--oracle", oracle, "combinator, direct or both");
    verify_cmd->add_option("--format", format, "plain, csv or json");

    CLI::App* verify_all_cmd =
        app.add_subcommand("verify-all", "check every identity over the parameter sweep");
    verify_all_cmd->add_option("--limit", limit, "check coefficients 0..limit")->required();
    verify_all_cmd->add_option("--ell", ell_sweep, "comma-separated ell sweep")
        ->delimiter(',');
    verify_all_cmd->add_option("--colors", color_sweep, "comma-separated color sweep")
        ->delimiter(',');
    verify_all_cmd->add_option("--oracle", oracle, "combinator, direct or both");
    verify_all_cmd->add_option("--format", format, "plain, csv or json");

    CLI::App* recurrence_cmd =
        app.add_subcommand("recurrence", "check 2*rho_a(n) = n*(rho(n)-1) + 2*a(n/2)");
    recurrence_cmd->add_option("--limit", limit, "check all even n up to this bound")
        ->required();
    recurrence_cmd->add_option("--format", format, "plain, csv or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return run_table(variant, ell, colors, limit, format);
        if (verify_cmd->parsed()) return run_verify(variant, ell, colors, limit, oracle, format);
        if (verify_all_cmd->parsed())
            return run_verify_all(limit, ell_sweep, color_sweep, oracle, format);
        if (recurrence_cmd->parsed()) return run_recurrence(limit, format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;  // no subcommand dispatched; require_subcommand should prevent this
}
