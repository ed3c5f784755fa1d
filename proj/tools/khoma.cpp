// khoma - Kauffman brackets and framed Khovanov homology of link diagrams.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "khoma/bracket.hpp"
#include "khoma/diagram.hpp"
#include "khoma/homology.hpp"
#include "khoma/render.hpp"
#include "khoma/verify.hpp"

namespace {

struct InputSpec {
    std::string pd;
    bool pd_set = false;
    std::string torus;
    std::string pd_file;
};

void add_input_flags(CLI::App* cmd, InputSpec& in) {
    auto* pd = cmd->add_option("--pd", in.pd, "planar-diagram code, e.g. \"X(1,4,2,5) ... O\"");
    pd->each([&in](const std::string&) { in.pd_set = true; });
    auto* torus = cmd->add_option("--torus", in.torus, "torus link p,n (p must be 2)");
    auto* file = cmd->add_option("--pd-file", in.pd_file, "file with one PD code per line");
    pd->excludes(torus);
    pd->excludes(file);
    torus->excludes(file);
}

khoma::Diagram parse_torus_spec(const std::string& spec) {
    auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw khoma::parse_error("--torus expects p,n");
    int p = std::stoi(spec.substr(0, comma));
    int n = std::stoi(spec.substr(comma + 1));
    if (p != 2)
        throw khoma::error("only 2-strand torus links are supported (--torus 2,n)");
    return khoma::torus_2n(n);
}

std::vector<khoma::Diagram> gather_inputs(const InputSpec& in) {
    std::vector<khoma::Diagram> out;
    if (!in.torus.empty()) {
        out.push_back(parse_torus_spec(in.torus));
    } else if (!in.pd_file.empty()) {
        std::ifstream f(in.pd_file);
        if (!f)
            throw khoma::error("cannot open " + in.pd_file);
        std::string line;
        while (std::getline(f, line))
            out.push_back(khoma::parse_pd(line));
    } else if (in.pd_set) {
        out.push_back(khoma::parse_pd(in.pd));
    } else {
        throw khoma::error("no input: use --pd, --torus or --pd-file");
    }
    return out;
}

int cmd_bracket(const InputSpec& in, bool unreduced, bool oracle, bool json) {
    for (const khoma::Diagram& d : gather_inputs(in)) {
        khoma::Laurent p = unreduced ? khoma::bracket_unreduced(d) : khoma::bracket_reduced(d);
        auto render = [&](const khoma::Laurent& q) {
            return json ? khoma::polynomial_json(q) : khoma::polynomial_text(q);
        };
        if (!oracle) {
            std::cout << render(p) << '\n';
            continue;
        }
        khoma::Laurent reference = khoma::bracket_skein_oracle(d);
        if (unreduced)
            reference *= khoma::Laurent::circle_weight();
        bool agree = reference == p;
        std::cout << "state-sum: " << render(p) << '\n';
        std::cout << "skein:     " << render(reference) << '\n';
        std::cout << (agree ? "AGREE" : "DISAGREE") << '\n';
        if (!agree)
            return 1;
    }
    return 0;
}

int cmd_homology(const InputSpec& in, const std::string& format, const std::string& dump_dir) {
    khoma::OutputFormat fmt = khoma::parse_format(format);
    for (const khoma::Diagram& d : gather_inputs(in)) {
        if (!dump_dir.empty()) {
            std::filesystem::create_directories(dump_dir);
            khoma::Complex cx(d);
            for (const auto& [b, chain] : cx.full_complex())
                for (const auto& m : chain) {
                    std::ostringstream name;
                    name << "d_a" << m.source.a << "_b" << m.source.b << ".txt";
                    std::ofstream f(std::filesystem::path(dump_dir) / name.str());
                    f << m.rows << ' ' << m.cols << '\n' << khoma::matrix_triplets(m);
                }
            std::cout << khoma::render_table(khoma::homology_table(cx), fmt);
        } else {
            std::cout << khoma::render_table(khoma::homology_table(d), fmt);
        }
        if (fmt == khoma::OutputFormat::json)
            std::cout << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n) {
    khoma::CheckReport report = khoma::run_suite(suite, max_n);
    for (const auto& line : report.lines)
        std::cout << line << '\n';
    std::cout << (report.passed ? "PASS " : "FAIL ") << report.suite << '\n';
    return report.passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman bracket polynomials and framed Khovanov homology"};
    app.require_subcommand(1);

    InputSpec bracket_in;
    bool unreduced = false, oracle = false, bracket_json = false;
    auto* bracket = app.add_subcommand("bracket", "evaluate the Kauffman bracket");
    add_input_flags(bracket, bracket_in);
    bracket->add_flag("--unreduced", unreduced, "normalize [empty] = 1 instead of <circle> = 1");
    bracket->add_flag("--oracle", oracle, "also run the skein recursion and compare");
    bracket->add_flag("--json", bracket_json, "emit the exponent->coefficient JSON object");

    InputSpec hom_in;
    std::string format = "text";
    std::string dump_dir;
    auto* homology = app.add_subcommand("homology", "compute the homology table");
    add_input_flags(homology, hom_in);
    homology->add_option("--format", format, "json, csv, markdown or text")
        ->check(CLI::IsMember({"json", "csv", "markdown", "text"}));
    homology->add_option("--dump-matrices", dump_dir,
                         "write each differential as sparse triplets into this directory");

    std::string suite;
    int max_n = 0;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "d2, euler, r1, les, closedform, skein or order")
        ->required()
        ->check(CLI::IsMember(khoma::suite_names()));
    verify->add_option("--max-n", max_n, "largest torus index to check (0 = suite default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket->parsed())
            return cmd_bracket(bracket_in, unreduced, oracle, bracket_json);
        if (homology->parsed())
            return cmd_homology(hom_in, format, dump_dir);
        if (verify->parsed())
            return cmd_verify(suite, max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
