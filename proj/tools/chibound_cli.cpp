// Command-line front end: exhaustive generation, class verification,
// tight-example search, extremal-coloring clause checks, and witness
// reports. Reports go to --output (or stdout) as JSON lines or TSV;
// summaries go to stderr. Exit codes: 0 all clean, 1 violations or claim
// mismatches found, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chibound/chibound.hpp"

namespace {

struct OutputTarget {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit OutputTarget(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

int resolve_threads(int flag_value) {
    return flag_value > 0 ? flag_value : chibound::default_thread_count();
}

chibound::GraphStream make_stream(const std::string& input, int max_n, int threads) {
    if (input == "-") return chibound::GraphStream::from_stdin();
    if (!input.empty()) return chibound::GraphStream::from_file(input);
    return chibound::GraphStream::generated_upto(max_n, threads);
}

int run_gen(int n, const std::string& output, int threads) {
    OutputTarget out(output);
    auto stream = chibound::all_graphs(n, threads);
    while (auto g = stream.next()) out.stream() << chibound::to_graph6(*g) << '\n';
    return 0;
}

int run_verify(const std::string& class_id, const std::string& input, int max_n,
               const std::string& output, const std::string& format, int threads) {
    const chibound::GraphClass* cls = chibound::find_class(class_id);
    if (!cls) {
        std::cerr << "unknown class: " << class_id << "\n";
        return 2;
    }
    auto report = chibound::verify_class(*cls, make_stream(input, max_n, threads), threads);
    OutputTarget out(output);
    if (format == "tsv") {
        out.stream() << chibound::kVerifyTsvHeader << '\n';
        for (const auto& r : report.records) out.stream() << chibound::to_tsv(r) << '\n';
    } else {
        for (const auto& r : report.records) out.stream() << r.to_json().dump() << '\n';
    }
    std::cerr << "class=" << cls->id << " checked=" << report.checked
              << " violations=" << report.violation_count() << " tight=" << report.tight_count()
              << "\n";
    return report.violation_count() == 0 ? 0 : 1;
}

int run_tight(const std::string& class_id, int max_n, const std::string& output,
              const std::string& format, int threads) {
    const chibound::GraphClass* cls = chibound::find_class(class_id);
    if (!cls) {
        std::cerr << "unknown class: " << class_id << "\n";
        return 2;
    }
    auto tights = chibound::find_tight(*cls, max_n, threads);
    OutputTarget out(output);
    if (format == "tsv") {
        out.stream() << chibound::kVerifyTsvHeader << '\n';
        for (const auto& r : tights) out.stream() << chibound::to_tsv(r) << '\n';
    } else {
        for (const auto& r : tights) out.stream() << r.to_json().dump() << '\n';
    }
    std::cerr << "class=" << cls->id << " max_n=" << max_n << " tight=" << tights.size() << "\n";
    return 0;
}

int run_lemma(int max_n, const std::string& ordering, const std::string& output,
              const std::string& format, int threads) {
    auto mode = ordering == "all" ? chibound::LemmaOrdering::AllOrderings
                                  : chibound::LemmaOrdering::Sorted;
    auto records = chibound::run_lemma_checks(max_n, mode, threads);
    OutputTarget out(output);
    std::uint64_t violations = 0;
    if (format == "tsv") {
        out.stream() << "graph6\tn\tchi\tcontexts\tclause_a\tclause_b\n";
        for (const auto& r : records) {
            out.stream() << r.graph6 << '\t' << r.n << '\t' << r.chi << '\t' << r.context_count
                         << '\t' << (r.a_ok ? "ok" : "violated") << '\t'
                         << (r.b_ok ? "ok" : "violated") << '\n';
            violations += r.violations.size();
        }
    } else {
        for (const auto& r : records) {
            out.stream() << r.to_json().dump() << '\n';
            violations += r.violations.size();
        }
    }
    std::cerr << "lemma max_n=" << max_n << " ordering=" << ordering
              << " graphs=" << records.size() << " violations=" << violations << "\n";
    return violations == 0 ? 0 : 1;
}

int run_witness(const std::string& name, const std::string& output) {
    chibound::WitnessReport report;
    try {
        report = chibound::witness_report(name);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    OutputTarget out(output);
    out.stream() << report.to_json().dump() << '\n';
    std::cerr << "witness=" << report.name << " ω=" << report.omega << " χ=" << report.chi
              << " claims_ok=" << (report.claims_ok ? "true" : "false") << "\n";
    return report.claims_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verifier for linear chromatic bounds on pattern-restricted graph classes"};
    app.require_subcommand(1);

    std::string output, input, format = "jsonl", class_id, ordering = "sorted", witness_name;
    int max_n = 8, gen_n = 0, threads = 0;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--output", output, "write the report to this file (default stdout)");
        sub->add_option("--threads", threads, "worker threads (default: CHI_THREADS or hardware)");
        if (with_format)
            sub->add_option("--format", format, "report format")
                ->check(CLI::IsMember({"jsonl", "tsv"}));
    };

    CLI::App* gen = app.add_subcommand("gen", "emit one graph6 line per isomorphism class");
    gen->add_option("n", gen_n, "vertex count")->required()->check(CLI::Range(1, 10));
    add_common(gen, false);

    CLI::App* verify = app.add_subcommand("verify", "check a class bound over a graph stream");
    verify->add_option("--class", class_id, "registry class id")->required();
    CLI::Option* opt_maxn = verify->add_option("--max-n", max_n,
                                               "verify all graphs up to this order")
                                ->check(CLI::Range(1, 10));
    verify->add_option("--input", input,
                       "graph6 file ('-' for stdin) instead of the internal generator")
        ->excludes(opt_maxn);
    add_common(verify);

    CLI::App* tight = app.add_subcommand("tight", "list in-class graphs meeting the bound exactly");
    tight->add_option("--class", class_id, "registry class id")->required();
    tight->add_option("--max-n", max_n, "search all graphs up to this order")
        ->check(CLI::Range(1, 10));
    add_common(tight);

    CLI::App* lemma = app.add_subcommand(
        "lemma", "check the extremal-coloring clauses on critical chair-free graphs");
    lemma->add_option("--max-n", max_n, "check all graphs up to this order")->check(CLI::Range(1, 9));
    lemma->add_option("--lemma-order", ordering, "repeat-color ordering for clause B")
        ->check(CLI::IsMember({"sorted", "all"}));
    add_common(lemma);

    CLI::App* witness = app.add_subcommand("witness", "reproduce a necessity witness");
    witness->add_option("name", witness_name, "c5_join_2, c5_join_3 or grotzsch")->required();
    add_common(witness, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        int t = resolve_threads(threads);
        if (gen->parsed()) return run_gen(gen_n, output, t);
        if (verify->parsed()) return run_verify(class_id, input, max_n, output, format, t);
        if (tight->parsed()) return run_tight(class_id, max_n, output, format, t);
        if (lemma->parsed()) return run_lemma(max_n, ordering, output, format, t);
        if (witness->parsed()) return run_witness(witness_name, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
