#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "verify_suites.hpp"
#include "vtc/channel.hpp"
#include "vtc/search.hpp"
#include "vtc/shiftreg.hpp"
#include "vtc/vt.hpp"
#include "vtc/words.hpp"

using namespace vtc;
using words::Word;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct TableArgs {
    int max_n = 8;
    bool check = false;
    bool porcelain = false;
};

int run_table(const TableArgs& args) {
    for (int n = 1; n <= args.max_n; ++n) {
        if (args.porcelain) {
            for (int a = 0; a <= n; ++a)
                std::cout << "n=" << n << " a=" << a << " size=" << vt::vt_size_formula(n, a)
                          << '\n';
        } else {
            std::cout << n;
            for (int a = 0; a <= n; ++a)
                std::cout << ' ' << vt::vt_size_formula(n, a);
            std::cout << '\n';
        }
        if (args.check) {
            std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                ++counts[static_cast<std::size_t>(vt::vt_checksum(Word(n, v)))];
            for (int a = 0; a <= n; ++a)
                if (counts[static_cast<std::size_t>(a)] != vt::vt_size_formula(n, a)) {
                    std::cerr << "mismatch at n=" << n << " a=" << a << ": enumeration "
                              << counts[static_cast<std::size_t>(a)] << ", formula "
                              << vt::vt_size_formula(n, a) << '\n';
                    return exit_mismatch;
                }
        }
    }
    return exit_ok;
}

struct EnumArgs {
    int n = 0;
    int a = 0;
    std::string out;
};

int run_enum(const EnumArgs& args) {
    const vt::Code code = vt::vt_code({args.n, args.a});
    if (args.out.empty()) {
        vt::write_code_table(std::cout, code);
    } else {
        std::ofstream file(args.out);
        if (!file)
            throw std::runtime_error("cannot open " + args.out);
        vt::write_code_table(file, code);
    }
    return exit_ok;
}

struct EncodeArgs {
    std::string word;
    int k = 0;
    bool porcelain = false;
};

int run_encode(const EncodeArgs& args) {
    const Word info = Word::parse(args.word);
    if (args.k != 0 && args.k != info.length())
        throw std::domain_error("--k disagrees with the length of --word");
    const Word coded = vt::linear_encode(info);
    if (args.porcelain)
        std::cout << "k=" << info.length() << " n=" << coded.length()
                  << " word=" << coded.to_string() << '\n';
    else
        std::cout << coded.to_string() << '\n';
    return exit_ok;
}

struct DecodeArgs {
    int n = 0;
    int a = 0;
    std::string word;
    bool porcelain = false;
};

int run_decode(const DecodeArgs& args) {
    const auto outcome = vt::decode_single_deletion(Word::parse(args.word), {args.n, args.a});
    if (outcome.ok()) {
        if (args.porcelain)
            std::cout << "ok=true word=" << outcome.recovered->to_string() << '\n';
        else
            std::cout << outcome.recovered->to_string() << '\n';
        return exit_ok;
    }
    const char* reason = outcome.failure == vt::DecodeFailure::invalid_length
                             ? "invalid-length"
                             : "not-a-descendant";
    if (args.porcelain)
        std::cout << "ok=false reason=" << reason << '\n';
    else
        std::cout << "decode failed: " << reason << '\n';
    return exit_mismatch;
}

struct SearchArgs {
    int n = 0;
    std::uint64_t budget = 0;
    bool witness = false;
    std::string out;
};

int run_search(const SearchArgs& args) {
    const auto result = search::max_single_deletion_code(args.n, args.budget);
    std::cout << "n=" << result.n << " A=" << result.best_size
              << " optimal=" << (result.proven_optimal ? "true" : "false")
              << " nodes=" << result.nodes_explored << '\n';
    std::cerr << "elapsed " << result.elapsed.count() << " s\n";
    if (args.witness)
        vt::write_code_table(std::cout, result.witness);
    if (!args.out.empty()) {
        std::ofstream file(args.out);
        if (!file)
            throw std::runtime_error("cannot open " + args.out);
        vt::write_code_table(file, result.witness);
    }
    return exit_ok;
}

struct PerfectArgs {
    int n = 0;
    int a = 0;
    std::string file;
    bool porcelain = false;
};

int run_perfect(const PerfectArgs& args) {
    vt::Code code = [&] {
        if (!args.file.empty()) {
            std::ifstream in(args.file);
            if (!in)
                throw std::runtime_error("cannot open " + args.file);
            return vt::read_code_table(in);
        }
        return vt::vt_code({args.n, args.a});
    }();
    const auto report = search::perfectness(code);
    std::cout << "n=" << report.n << " size=" << code.size() << " covered=" << report.covered
              << " universe=" << report.universe << " overlaps=" << report.overlaps.size()
              << " perfect=" << (report.is_perfect ? "true" : "false") << '\n';
    if (!args.porcelain)
        for (const auto& overlap : report.overlaps)
            std::cout << "overlap " << overlap.word.to_string() << " x" << overlap.multiplicity
                      << '\n';
    return exit_ok;
}

struct ShiftregArgs {
    int max_n = 10;
    bool porcelain = false;
};

int run_shiftreg(const ShiftregArgs& args) {
    bool all_match = true;
    for (int n = 1; n <= args.max_n; ++n) {
        struct Column {
            shiftreg::RegisterKind kind;
            std::uint64_t formula;
        };
        const Column columns[] = {
            {shiftreg::RegisterKind::pcr, shiftreg::z_formula(n)},
            {shiftreg::RegisterKind::ccr, shiftreg::zstar_formula(n)},
            {shiftreg::RegisterKind::psr, shiftreg::s_formula(n)},
            {shiftreg::RegisterKind::csr, shiftreg::sstar_formula(n)},
        };
        std::uint64_t counts[4];
        bool row_match = true;
        for (int c = 0; c < 4; ++c) {
            counts[c] = shiftreg::cycle_census(n, columns[c].kind).cycle_count;
            row_match = row_match && counts[c] == columns[c].formula;
        }
        all_match = all_match && row_match;
        if (args.porcelain) {
            for (int c = 0; c < 4; ++c)
                std::cout << "kind=" << shiftreg::kind_name(columns[c].kind) << " n=" << n
                          << " cycles=" << counts[c] << " formula=" << columns[c].formula
                          << " match=" << (counts[c] == columns[c].formula ? "true" : "false")
                          << '\n';
        } else {
            std::cout << n;
            for (int c = 0; c < 4; ++c)
                std::cout << ' ' << counts[c];
            std::cout << (row_match ? " ok" : " MISMATCH") << '\n';
        }
    }
    return all_match ? exit_ok : exit_mismatch;
}

struct NecklaceArgs {
    int m = 0;
    bool porcelain = false;
};

int run_necklace(const NecklaceArgs& args) {
    const auto counts = shiftreg::necklace_counts(args.m);
    const std::uint64_t rotation_expected = shiftreg::z_formula(args.m);
    const bool rotation_match = counts.rotation_only == rotation_expected;
    bool primitive_match = true;
    std::ostringstream primitive_part;
    primitive_part << "primitive_complement=" << counts.primitive_rotation_complement;
    if (args.m >= 2) {
        const std::uint64_t expected = vt::vt1_size(args.m - 1);
        primitive_match = counts.primitive_rotation_complement == expected;
        primitive_part << " a1_code_size=" << expected
                       << " match=" << (primitive_match ? "true" : "false");
    }
    std::cout << "m=" << args.m << " rotation=" << counts.rotation_only
              << " formula=" << rotation_expected
              << " match=" << (rotation_match ? "true" : "false") << ' '
              << primitive_part.str() << '\n';
    return rotation_match && primitive_match ? exit_ok : exit_mismatch;
}

struct DescendArgs {
    std::string word;
    int e = 1;
    bool count_only = false;
};

int run_descend(const DescendArgs& args) {
    const Word u = Word::parse(args.word);
    const auto ds = words::descendants(u, args.e);
    std::cout << "word=" << u.to_string() << " e=" << args.e << " count=" << ds.size() << '\n';
    if (!args.count_only)
        for (const Word& d : ds.members)
            std::cout << (d.is_empty() ? "(empty)" : d.to_string()) << '\n';
    return exit_ok;
}

struct DistArgs {
    std::string u;
    std::string v;
};

int run_dist(const DistArgs& args) {
    std::cout << words::deletion_distance(Word::parse(args.u), Word::parse(args.v)) << '\n';
    return exit_ok;
}

struct SimulateArgs {
    int k = 8;
    std::uint64_t blocks = 1;
    std::uint64_t seed = 0;
    double p = -1.0;
    bool log = false;
};

int run_simulate(const SimulateArgs& args) {
    channel::ChannelConfig config;
    config.k = args.k;
    config.blocks = args.blocks;
    config.seed = args.seed;
    if (args.p >= 0.0) {
        config.mode = channel::DeletionMode::per_bit;
        config.p = args.p;
    } else {
        config.mode = channel::DeletionMode::always_one;
    }
    config.keep_records = args.log;
    const auto summary = channel::run_simulation(config);
    if (args.log)
        for (const auto& rec : summary.records)
            std::cout << rec.to_line() << '\n';
    std::cout << summary.porcelain() << '\n';
    return summary.failed == 0 ? exit_ok : exit_mismatch;
}

struct VerifyArgs {
    std::string suite = "all";
};

int run_verify(const VerifyArgs& args) {
    std::vector<std::pair<std::string, std::vector<vtcli::Check>>> suites;
    if (args.suite == "all" || args.suite == "words")
        suites.emplace_back("words", vtcli::words_suite());
    if (args.suite == "all" || args.suite == "vt")
        suites.emplace_back("vt", vtcli::vt_suite());
    if (args.suite == "all" || args.suite == "search")
        suites.emplace_back("search", vtcli::search_suite());
    if (args.suite == "all" || args.suite == "shiftreg")
        suites.emplace_back("shiftreg", vtcli::shiftreg_suite());

    bool all_pass = true;
    for (const auto& [name, checks] : suites) {
        for (const auto& check : checks) {
            const auto failure = check.run();
            if (failure) {
                all_pass = false;
                std::cout << "FAIL [" << name << "] " << check.name << ": " << *failure << '\n';
            } else {
                std::cout << "PASS [" << name << "] " << check.name << '\n';
            }
        }
    }
    return all_pass ? exit_ok : exit_mismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for binary single-deletion-correcting codes"};
    app.require_subcommand(1);

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "Code sizes per length and residue");
    table->add_option("--max-n", table_args.max_n, "largest length")
        ->required()
        ->check(CLI::Range(1, 62));
    table->add_flag("--check", table_args.check, "cross-check against enumeration (max-n <= 16)");
    table->add_flag("--porcelain", table_args.porcelain, "key=value output");

    EnumArgs enum_args;
    auto* enumerate = app.add_subcommand("enum", "List the codewords of one code");
    enumerate->add_option("--n", enum_args.n, "code length")->required()->check(CLI::Range(1, 24));
    enumerate->add_option("--a", enum_args.a, "checksum residue")->required();
    enumerate->add_option("--out", enum_args.out, "write the table to a file");

    EncodeArgs encode_args;
    auto* encode = app.add_subcommand("encode", "Systematically encode info bits");
    encode->add_option("--word", encode_args.word, "information bits")->required();
    encode->add_option("--k", encode_args.k, "expected info length");
    encode->add_flag("--porcelain", encode_args.porcelain, "key=value output");

    DecodeArgs decode_args;
    auto* decode = app.add_subcommand("decode", "Recover a codeword after one deletion");
    decode->add_option("--n", decode_args.n, "code length")->required()->check(CLI::Range(2, 62));
    decode->add_option("--a", decode_args.a, "checksum residue")->required();
    decode->add_option("--word", decode_args.word, "received word")->required();
    decode->add_flag("--porcelain", decode_args.porcelain, "key=value output");

    SearchArgs search_args;
    auto* searchcmd = app.add_subcommand("search", "Exact largest code search");
    searchcmd->add_option("--n", search_args.n, "code length")->required()->check(CLI::Range(1, 10));
    searchcmd->add_option("--budget", search_args.budget, "node budget, 0 = unlimited");
    searchcmd->add_flag("--witness", search_args.witness, "print the witness code");
    searchcmd->add_option("--out", search_args.out, "write the witness to a file");

    PerfectArgs perfect_args;
    auto* perfect = app.add_subcommand("perfect", "Coverage census of a code's balls");
    perfect->add_option("--n", perfect_args.n, "code length")->check(CLI::Range(1, 20));
    perfect->add_option("--a", perfect_args.a, "checksum residue");
    perfect->add_option("--file", perfect_args.file, "read the code from a table file");
    perfect->add_flag("--porcelain", perfect_args.porcelain, "suppress overlap listing");

    ShiftregArgs shiftreg_args;
    auto* shiftregcmd = app.add_subcommand("shiftreg", "Cycle counts of the four registers");
    shiftregcmd->add_option("--max-n", shiftreg_args.max_n, "largest register size")
        ->required()
        ->check(CLI::Range(1, 16));
    shiftregcmd->add_flag("--porcelain", shiftreg_args.porcelain, "key=value output");

    NecklaceArgs necklace_args;
    auto* necklace = app.add_subcommand("necklace", "Necklace counts by brute force");
    necklace->add_option("--m", necklace_args.m, "bead count")->required()->check(CLI::Range(1, 24));
    necklace->add_flag("--porcelain", necklace_args.porcelain, "key=value output");

    DescendArgs descend_args;
    auto* descend = app.add_subcommand("descend", "Distinct words after e deletions");
    descend->add_option("--word", descend_args.word, "parent word")->required();
    descend->add_option("--e", descend_args.e, "number of deletions")->required();
    descend->add_flag("--count-only", descend_args.count_only, "omit the member listing");

    DistArgs dist_args;
    auto* dist = app.add_subcommand("dist", "Deletion distance between equal-length words");
    dist->add_option("--u", dist_args.u, "first word")->required();
    dist->add_option("--v", dist_args.v, "second word")->required();

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand("simulate", "Deletion-channel round trip");
    simulate->add_option("--k", simulate_args.k, "info bits per block")->required();
    simulate->add_option("--blocks", simulate_args.blocks, "number of blocks")->required();
    simulate->add_option("--seed", simulate_args.seed, "PRNG seed");
    simulate->add_option("--p", simulate_args.p,
                         "per-bit deletion probability (default: one deletion per block)");
    simulate->add_flag("--log", simulate_args.log, "print one record line per block");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run the module invariant suites");
    verify->add_option("--suite", verify_args.suite, "all|words|vt|search|shiftreg")
        ->check(CLI::IsMember({"all", "words", "vt", "search", "shiftreg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        std::cerr << "run with --help for usage\n";
        return exit_usage;
    }

    try {
        if (*table) {
            if (table_args.check && table_args.max_n > 16)
                throw std::domain_error("--check requires --max-n <= 16");
            return run_table(table_args);
        }
        if (*enumerate)
            return run_enum(enum_args);
        if (*encode)
            return run_encode(encode_args);
        if (*decode)
            return run_decode(decode_args);
        if (*searchcmd)
            return run_search(search_args);
        if (*perfect) {
            if (perfect_args.file.empty() && perfect_args.n == 0)
                throw std::domain_error("perfect needs either --n/--a or --file");
            return run_perfect(perfect_args);
        }
        if (*shiftregcmd)
            return run_shiftreg(shiftreg_args);
        if (*necklace)
            return run_necklace(necklace_args);
        if (*descend)
            return run_descend(descend_args);
        if (*dist)
            return run_dist(dist_args);
        if (*simulate)
            return run_simulate(simulate_args);
        if (*verify)
            return run_verify(verify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
