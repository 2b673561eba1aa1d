// Command line front end for the ntoric shared library. Talks to the
// library exclusively through the C interface.

#include <ntoric/ntoric.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Options {
    std::string input;
    std::string json_path;
    std::string dot_path;
    int delta_shell_cap = -1;
    int root = -2;
};

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << text;
}

int run_command(const Options& opt, int (*command)(const ntc_diagram*, char**, char**))
{
    std::string text;
    try {
        text = read_input(opt.input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return NTC_EINPUT;
    }

    char* err = nullptr;
    ntc_diagram* d = ntc_diagram_parse(text.c_str(), &err);
    if (!d) {
        std::cerr << "error: " << (err ? err : "invalid input") << "\n";
        ntc_free(err);
        return NTC_EINPUT;
    }
    if (opt.delta_shell_cap >= 0)
        ntc_set_delta_shell_cap(d, opt.delta_shell_cap);
    if (opt.root >= -1)
        ntc_set_root(d, opt.root);

    char* out = nullptr;
    int rc = command(d, &out, &err);
    if (rc != NTC_OK) {
        std::cerr << "error: " << (err ? err : "command failed") << "\n";
        ntc_free(err);
        ntc_diagram_free(d);
        return rc;
    }
    try {
        if (!opt.json_path.empty())
            write_file(opt.json_path, out);
        else
            std::cout << out;
        if (!opt.dot_path.empty()) {
            char* dot = nullptr;
            int drc = ntc_graph_dot(d, &dot, &err);
            if (drc != NTC_OK) {
                std::cerr << "error: " << (err ? err : "dot export failed") << "\n";
                ntc_free(err);
                ntc_free(out);
                ntc_diagram_free(d);
                return drc;
            }
            write_file(opt.dot_path, dot);
            ntc_free(dot);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        ntc_free(out);
        ntc_diagram_free(d);
        return NTC_EINPUT;
    }
    ntc_free(out);
    ntc_diagram_free(d);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact invariants of Newton nondegenerate Weil divisors in toric 3-folds"};
    app.require_subcommand(1);

    Options opt;
    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const ntc_diagram*, char**, char**);
    };
    const Sub subs[] = {
        {"fan", "dual fan of the Newton polyhedron", ntc_fan_json},
        {"graph", "resolution (plumbing) graph and canonical cycle", ntc_graph_json},
        {"invariants", "isolatedness, normality, delta and geometric genus", ntc_invariants_json},
        {"seq", "diagonal computation sequence trace", ntc_seq_json},
        {"reduce", "remove facets until the canonical cycle is nonnegative", ntc_reduce_json},
        {"report", "everything above in one document", ntc_report_json},
    };
    int (*chosen)(const ntc_diagram*, char**, char**) = nullptr;
    for (const Sub& s : subs) {
        CLI::App* c = app.add_subcommand(s.name, s.help);
        c->add_option("input", opt.input, "input JSON file, or - for stdin")->required();
        c->add_option("--json", opt.json_path, "write the payload to a file instead of stdout");
        c->add_option("--dot", opt.dot_path, "also write the plumbing graph in DOT format");
        c->add_option("--delta-shell-cap", opt.delta_shell_cap,
                      "enumeration cap for the delta invariant");
        c->add_option("--root", opt.root, "root node id for the sequence tie-break order");
        auto fn = s.fn;
        c->callback([&chosen, fn] { chosen = fn; });
    }

    CLI11_PARSE(app, argc, argv);
    return run_command(opt, chosen);
}
