#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanocert/parser.hpp"
#include "fanocert/suites.hpp"

namespace {

constexpr int kUsage = 2;

std::pair<std::string, std::string> split_assignment(const std::string& s, const char* flag) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw fanocert::UsageError(std::string(flag) + " expects name=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

int run_verify(const std::vector<std::string>& suites, bool all, const std::string& format,
               const std::vector<std::string>& params, bool list, bool parallel) {
    if (list) {
        for (const auto& n : fanocert::suite_names()) std::cout << n << '\n';
        return 0;
    }
    for (const auto& s : suites) {
        if (!fanocert::is_suite_name(s)) {
            std::cerr << "error: unknown suite '" << s << "' (see --list)\n";
            return kUsage;
        }
    }
    if (!all && suites.empty()) {
        std::cerr << "error: name at least one suite or pass --all\n";
        return kUsage;
    }
    fanocert::SuiteConfig cfg;
    cfg.parallel = parallel;
    for (const auto& p : params) {
        auto [name, value] = split_assignment(p, "--param");
        if (name != "v") throw fanocert::UsageError("unknown parameter '" + name + "'; only v is supported");
        cfg.extra_v.push_back(fanocert::Rational::from_string(value));
    }
    auto report = all ? fanocert::run_all(cfg) : fanocert::run_suites(suites, cfg);
    std::cout << (format == "json" ? fanocert::to_json(report) + "\n" : fanocert::to_text(report));
    return report.all_passed() ? 0 : 1;
}

int run_eval(const std::string& expr, const std::vector<std::string>& defs, const std::vector<std::string>& substs) {
    std::vector<std::pair<std::string, std::string>> def_pairs, subst_pairs;
    for (const auto& d : defs) def_pairs.push_back(split_assignment(d, "--def"));
    for (const auto& s : substs) subst_pairs.push_back(split_assignment(s, "--subst"));

    std::vector<std::string> idents;
    std::set<std::string> seen;
    auto collect = [&](const std::string& text) {
        for (auto& id : fanocert::scan_identifiers(text))
            if (seen.insert(id).second) idents.push_back(id);
    };
    collect(expr);
    for (const auto& [n, body] : def_pairs) {
        collect(n);
        collect(body);
    }
    for (const auto& [n, body] : subst_pairs) {
        collect(n);
        collect(body);
    }
    std::vector<fanocert::Variable> vars;
    for (const auto& id : idents) vars.push_back({id, fanocert::VarRole::coordinate});
    auto reg = fanocert::VariableRegistry::make(std::move(vars));

    auto f = fanocert::parse_polynomial(expr, reg);
    if (!def_pairs.empty()) {
        fanocert::Substitution defs_sub(reg);
        for (const auto& [n, body] : def_pairs) defs_sub.set(n, fanocert::parse_polynomial(body, reg));
        // definitions may refer to one another; expand until none remain
        for (std::size_t round = 0; round <= def_pairs.size(); ++round) f = fanocert::substitute(f, defs_sub);
        for (const auto& [n, body] : def_pairs)
            if (f.involves(reg->index(n))) throw fanocert::UsageError("definition of '" + n + "' is circular");
    }
    if (!subst_pairs.empty()) {
        fanocert::Substitution s(reg);
        for (const auto& [n, body] : subst_pairs) s.set(n, fanocert::parse_polynomial(body, reg));
        f = fanocert::substitute(f, s);
    }
    std::cout << fanocert::format_polynomial(f) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of explicit polynomial identities"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suites, params;
    bool all = false, list = false, parallel = false;
    std::string format = "text";
    verify->add_option("suites", suites, "Suite names");
    verify->add_flag("--all", all, "Run every suite");
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--param", params, "Extra family parameter value, e.g. v=7/3");
    verify->add_flag("--list", list, "List suite names");
    verify->add_flag("--parallel", parallel, "Run suites on worker threads");

    auto* eval = app.add_subcommand("eval", "Normalize a polynomial expression");
    std::string expr;
    std::vector<std::string> defs, substs;
    eval->add_option("expression", expr, "Expression")->required();
    eval->add_option("--def", defs, "Definition name=expr, expanded in the expression");
    eval->add_option("--subst", substs, "Substitution var=expr, applied after definitions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (verify->parsed()) return run_verify(suites, all, format, params, list, parallel);
        return run_eval(expr, defs, substs);
    } catch (const fanocert::ParseError& e) {
        std::cerr << "parse error at position " << e.position() << ": " << e.detail() << '\n';
        return kUsage;
    } catch (const fanocert::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
