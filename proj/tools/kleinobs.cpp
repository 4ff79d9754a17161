#include "kleinobs/catalog.hpp"
#include "kleinobs/relcoh.hpp"
#include "kleinobs/report.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace kleinobs;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A path on disk wins over a catalog name of the same spelling.
std::string load_source(const std::string& input)
{
    if (std::filesystem::is_regular_file(input)) {
        std::ifstream in(input, std::ios::binary);
        if (!in) throw InputError("cannot read " + input);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    return catalog_get(input).source;
}

std::string join(const std::vector<std::size_t>& xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

int cmd_check(const std::string& input, bool json, const std::vector<std::string>& criteria, bool all, unsigned threads)
{
    Elaboration elab = elaborate(parse_spec(load_source(input)));
    if (elab.checks.empty()) throw InputError("no check directives in " + input);
    std::optional<std::vector<std::string>> override;
    if (all) override = std::vector<std::string>{};
    if (!criteria.empty()) {
        const auto& ids = criterion_ids();
        for (const auto& id : criteria)
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InputError("unknown criterion '" + id + "'");
        override = criteria;
    }
    auto reports = run_checks(elab, threads, override);
    std::cout << emit_reports(reports, json ? ReportFormat::Json : ReportFormat::Human);
    return 0;
}

int cmd_info(const std::string& input)
{
    Elaboration elab = elaborate(parse_spec(load_source(input)));
    for (const auto& name : elab.algebra_order) {
        const auto& g = elab.algebra(name);
        auto c = classify_algebra(g);
        std::cout << "algebra " << name << "\n";
        std::cout << "  dim = " << g.dim() << "\n  basis =";
        for (const auto& l : g.labels()) std::cout << " " << l;
        std::cout << std::boolalpha << "\n  solvable = " << c.solvable << ", nilpotent = " << c.nilpotent << ", semisimple = " << c.semisimple
                  << ", reductive = " << c.reductive << ", unimodular = " << is_unimodular(g) << "\n";
        std::cout << "  betti = " << join(betti_numbers(g, Subspace::zero(g.dim()))) << "\n";
    }
    for (const auto& [name, s] : elab.subspaces) {
        const auto& g = elab.algebra(s.algebra);
        std::cout << (s.compact ? "compact " : "subalgebra ") << name << " of " << s.algebra << " = "
                  << format_span(g, s.space) << "\n";
        std::cout << "  dim = " << s.space.dim() << ", codim = " << g.dim() - s.space.dim() << "\n";
        std::cout << "  relative betti = " << join(betti_numbers(g, s.space)) << "\n";
    }
    return 0;
}

int cmd_catalog_list()
{
    for (const auto& e : catalog()) {
        std::cout << e.name << "  " << to_string(e.expected);
        if (!e.expected_fired.empty()) {
            std::cout << " (";
            for (std::size_t i = 0; i < e.expected_fired.size(); ++i) std::cout << (i ? ", " : "") << e.expected_fired[i];
            std::cout << ")";
        }
        std::cout << "\n    " << e.note << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Obstructions to compact Clifford-Klein forms from relative Lie algebra cohomology"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);

    std::string input;
    bool json = false, all = false;
    std::vector<std::string> criteria;
    unsigned threads = 1;

    auto* check = app.add_subcommand("check", "Run the check directives of a spec file or catalog entry");
    check->add_option("input", input, "Spec file or catalog entry name")->required();
    check->add_flag("--json", json, "Emit canonical JSON");
    check->add_option("--criteria", criteria, "Comma-separated criterion ids")->delimiter(',');
    check->add_flag("--all", all, "Run every criterion regardless of the directive");
    check->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

    auto* info = app.add_subcommand("info", "Dimensions, classification and Betti tables");
    info->add_option("input", input, "Spec file or catalog entry name")->required();

    auto* cat = app.add_subcommand("catalog", "Built-in model spaces");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List catalog entries");
    std::string show_name;
    auto* show = cat->add_subcommand("show", "Print the spec text of an entry");
    show->add_option("name", show_name, "Entry name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (check->parsed()) return cmd_check(input, json, criteria, all, threads);
        if (info->parsed()) return cmd_info(input);
        if (show->parsed()) {
            std::cout << catalog_get(show_name).source;
            return 0;
        }
        return cmd_catalog_list();
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
