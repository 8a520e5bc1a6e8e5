// beadweave: beaded trivalent diagram engine CLI.

#include "beadweave/contraction.hpp"
#include "beadweave/errors.hpp"
#include "beadweave/hairmap.hpp"
#include "beadweave/pipeline.hpp"
#include "beadweave/sl2weight.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"beadweave: beaded trivalent diagram engine"};
    app.require_subcommand(1);

    std::string clasper_path, lk_path, sum_path, diagram_path, emit_prefix;
    int max_degree = 0;
    int n = 1;
    int max_n = 6;
    bool as_json = false;

    CLI::App* contract = app.add_subcommand(
        "contract", "Complete contraction of a clasper against a linking matrix");
    contract->add_option("clasper", clasper_path, "clasper file")->required();
    contract->add_option("linking", lk_path, "linking matrix file")->required();

    CLI::App* hair = app.add_subcommand("hair", "Apply the hair map to a diagram sum");
    hair->add_option("sum", sum_path, "diagram sum file")->required();
    hair->add_option("--max-degree", max_degree, "Vassiliev degree cutoff")->required();

    int loop_value = 3;
    CLI::App* weight =
        app.add_subcommand("weight", "sl2 weight of a closed trivalent diagram");
    weight->add_option("diagram", diagram_path, "diagram file")->required();
    weight->add_option("--loop-value", loop_value,
                       "value of a disjoint circle (3 = dim sl2)");

    CLI::App* realize = app.add_subcommand(
        "realize", "Build the grope clasper of class 2n and print its contraction");
    realize->add_option("--n", n, "grope parameter (class 2n)")->required();
    realize->add_option("--emit-clasper", emit_prefix,
                        "write <prefix>.clasper.txt and <prefix>.lk.txt instead");

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification chain");
    verify->add_option("--n", n, "grope parameter (class 2n)")->required();
    verify->add_option("--max-n", max_n, "largest accepted n");
    verify->add_flag("--json", as_json, "machine-readable report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (contract->parsed()) {
            beadweave::Clasper c = beadweave::parse_clasper(read_file(clasper_path));
            beadweave::LinkingData lk = beadweave::parse_linking(read_file(lk_path));
            std::cout << beadweave::print_sum(beadweave::complete_contraction(c, lk));
        } else if (hair->parsed()) {
            beadweave::DiagramSum s = beadweave::parse_sum(read_file(sum_path));
            std::cout << beadweave::print_sum(beadweave::hair_expand(s, max_degree));
        } else if (weight->parsed()) {
            beadweave::Diagram d = beadweave::parse_diagram(read_file(diagram_path));
            beadweave::Sl2Cache cache;
            std::cout << beadweave::sl2_eval(d, cache, loop_value) << "\n";
        } else if (realize->parsed()) {
            auto [c, lk] = beadweave::build_grope_clasper(beadweave::GropeSpec{n});
            if (!emit_prefix.empty()) {
                write_file(emit_prefix + ".clasper.txt", beadweave::print_clasper(c));
                write_file(emit_prefix + ".lk.txt", beadweave::print_linking(lk));
                std::cout << emit_prefix << ".clasper.txt\n" << emit_prefix << ".lk.txt\n";
            } else {
                std::cout << beadweave::print_sum(beadweave::complete_contraction(c, lk));
            }
        } else if (verify->parsed()) {
            beadweave::VerifyReport report = beadweave::verify_chain(n, max_n);
            std::cout << (as_json ? beadweave::verify_report_json(report)
                                  : beadweave::verify_report_text(report));
            return report.pass ? 0 : 1;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
