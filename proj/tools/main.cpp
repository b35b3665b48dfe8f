#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cellfrob/report.hpp"

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw cellfrob::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::map<std::string, std::string> split_params(const std::vector<std::string>& kvs) {
    std::map<std::string, std::string> params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw cellfrob::ParseError("--param expects key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return params;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw cellfrob::ParseError("cannot write '" + path + "'");
    f << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Frobenius cellular algebras: dual bases, Gram matrices,"
                 " and projective cell modules"};
    app.require_subcommand(1);

    std::string file, emit_path, cell, flavor = "C";
    bool machine = false, human = false;
    std::vector<std::string> params;

    CLI::App* validate = app.add_subcommand("validate", "check the Frobenius and cellular axioms");
    validate->add_option("file", file, "spec file (or - for stdin)")->required();

    CLI::App* report = app.add_subcommand("report", "full pipeline report");
    report->add_option("file", file, "spec file (or - for stdin)")->required();
    report->add_flag("--machine", machine, "deterministic JSON output");
    report->add_flag("--human", human, "text output (default)");

    CLI::App* identities = app.add_subcommand("identities", "structure-constant identity suites");
    identities->add_option("file", file, "spec file (or - for stdin)")->required();
    identities->add_flag("--machine", machine, "deterministic JSON output");

    CLI::App* builtin = app.add_subcommand("builtin", "emit a builtin fixture spec");
    std::string name;
    builtin->add_option("name", name, "koenig-xi | dual-numbers | matrix")->required();
    builtin->add_option("--param", params, "key=value (lambda=..., field=rational|<prime>, n=...)");
    builtin->add_option("--emit", emit_path, "write to a file instead of stdout");

    CLI::App* oracle = app.add_subcommand("oracle", "run both projectivity oracles on one cell");
    oracle->add_option("file", file, "spec file (or - for stdin)")->required();
    oracle->add_option("--cell", cell, "cell label")->required();
    oracle->add_option("--flavor", flavor, "C or d (default C)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (builtin->parsed()) {
            auto input = cellfrob::builtin_fixture(name, split_params(params));
            emit(cellfrob::serialize_spec(input), emit_path);
            return 0;
        }
        auto input = cellfrob::parse_spec(read_input(file));
        if (validate->parsed()) {
            cellfrob::ReportOptions opts;
            opts.full = false;
            auto res = cellfrob::run_report(input, opts);
            std::cout << cellfrob::render_human(res.doc);
            return res.exit_code;
        }
        if (report->parsed()) {
            auto res = cellfrob::run_report(input);
            if (machine)
                std::cout << res.doc.dump(2) << "\n";
            else
                std::cout << cellfrob::render_human(res.doc);
            return res.exit_code;
        }
        if (identities->parsed()) {
            auto res = cellfrob::run_report(input);
            cellfrob::Json out;
            if (res.doc.contains("section4")) out["section4"] = res.doc["section4"];
            if (res.doc.contains("identities")) out["identities"] = res.doc["identities"];
            out["status"] = res.doc["status"];
            if (machine)
                std::cout << out.dump(2) << "\n";
            else
                std::cout << cellfrob::render_human(out);
            return res.exit_code;
        }
        if (oracle->parsed()) {
            auto out = cellfrob::oracle_report(input, cell, flavor);
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const cellfrob::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cellfrob::ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return 3;
    } catch (const cellfrob::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
