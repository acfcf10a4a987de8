#include "verify_suites.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "vtc/numth.hpp"
#include "vtc/search.hpp"
#include "vtc/shiftreg.hpp"
#include "vtc/vt.hpp"
#include "vtc/words.hpp"

namespace vtcli {

using namespace vtc;
using words::Word;

namespace {

using Result = std::optional<std::string>;

std::string format_word(int n, std::uint64_t v) { return Word(n, v).to_string(); }

Result first_order_counts() {
    for (int n = 1; n <= 14; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word u(n, v);
            const auto got = words::descendants(u, 1).size();
            if (got != static_cast<std::size_t>(words::runs(u))) {
                std::ostringstream os;
                os << "word " << u.to_string() << " has " << got << " descendants but "
                   << words::runs(u) << " runs";
                return os.str();
            }
        }
    return std::nullopt;
}

Result second_order_counts() {
    for (int n = 3; n <= 14; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word u(n, v);
            if (words::descendants(u, 2).size() != words::d2_size_formula(u))
                return "word " + u.to_string();
        }
    return std::nullopt;
}

Result max_descendant_counts() {
    for (int k = 1; k <= 3; ++k)
        for (int n = k + 1; n <= 14; ++n) {
            std::uint64_t best = 0;
            std::uint64_t ties = 0;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const auto c = words::descendants(Word(n, v), k).size();
                if (c > best) {
                    best = c;
                    ties = 1;
                } else if (c == best) {
                    ++ties;
                }
            }
            if (best != words::max_descendants(n, k)) {
                std::ostringstream os;
                os << "n=" << n << " k=" << k << " brute max " << best << " vs formula "
                   << words::max_descendants(n, k);
                return os.str();
            }
            if (words::descendants(Word::alternating(n, 0), k).size() != best)
                return "alternating word misses the maximum at n=" + std::to_string(n);
            const bool unique = ties == 2;
            if (unique != (k == 1 || n >= 2 * k + 1)) {
                std::ostringstream os;
                os << "n=" << n << " k=" << k << " has " << ties << " maximizers";
                return os.str();
            }
        }
    return std::nullopt;
}

Result distance_routes_agree() {
    for (int n = 1; n <= 10; ++n) {
        const words::ConfusabilityGraph g(n);
        for (std::uint32_t u = 0; u < g.node_count(); ++u) {
            std::vector<int> dist(g.node_count(), -1);
            std::vector<std::uint32_t> frontier{u};
            dist[u] = 0;
            while (!frontier.empty()) {
                std::vector<std::uint32_t> next;
                for (std::uint32_t x : frontier) {
                    const std::uint64_t* row = g.row(x);
                    for (std::size_t blk = 0; blk < g.row_words(); ++blk) {
                        std::uint64_t bits = row[blk];
                        while (bits) {
                            const auto v = static_cast<std::uint32_t>(
                                blk * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                            bits &= bits - 1;
                            if (dist[v] == -1) {
                                dist[v] = dist[x] + 1;
                                next.push_back(v);
                            }
                        }
                    }
                }
                frontier = std::move(next);
            }
            for (std::uint32_t v = 0; v < g.node_count(); ++v)
                if (dist[v] != words::deletion_distance(Word(n, u), Word(n, v)))
                    return "pair " + format_word(n, u) + ", " + format_word(n, v);
        }
    }
    return std::nullopt;
}

Result descendant_symmetries() {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= std::min(3, n); ++k)
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const Word u(n, v);
                const auto base = words::descendants(u, k).size();
                if (words::descendants(u.complemented(), k).size() != base ||
                    words::descendants(u.reversed(), k).size() != base)
                    return "word " + u.to_string() + " k=" + std::to_string(k);
            }
    return std::nullopt;
}

Result alternating_recurrence() {
    std::map<std::pair<int, int>, std::uint64_t> m;
    for (int n = 1; n <= 14; ++n)
        for (int k = 0; k <= n; ++k)
            m[{n, k}] = words::descendants(Word::alternating(n, 0), k).size();
    for (int n = 3; n <= 14; ++n)
        for (int k = 2; k < n; ++k)
            if (m[{n, k}] != m[{n - 1, k}] + m[{n - 2, k - 1}])
                return "n=" + std::to_string(n) + " k=" + std::to_string(k);
    return std::nullopt;
}

Result sizes_match_enumeration() {
    for (int n = 1; n <= 16; ++n) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
            ++counts[static_cast<std::size_t>(vt::vt_checksum(Word(n, v)))];
        for (int a = 0; a <= n; ++a)
            if (counts[static_cast<std::size_t>(a)] != vt::vt_size_formula(n, a)) {
                std::ostringstream os;
                os << "n=" << n << " a=" << a << ": enumerated "
                   << counts[static_cast<std::size_t>(a)] << ", formula "
                   << vt::vt_size_formula(n, a);
                return os.str();
            }
    }
    return std::nullopt;
}

Result published_size_grid() {
    const std::vector<std::vector<std::uint64_t>> table = {
        {1, 1},
        {2, 1, 1},
        {2, 2, 2, 2},
        {4, 3, 3, 3, 3},
        {6, 5, 5, 6, 5, 5},
        {10, 9, 9, 9, 9, 9, 9},
        {16, 16, 16, 16, 16, 16, 16, 16},
        {30, 28, 28, 29, 28, 28, 29, 28, 28},
    };
    for (int n = 1; n <= 8; ++n)
        for (int a = 0; a <= n; ++a)
            if (vt::vt_size_formula(n, a) !=
                table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a)]) {
                return "n=" + std::to_string(n) + " a=" + std::to_string(a);
            }
    return std::nullopt;
}

Result residue_ordering() {
    for (int n = 1; n <= 20; ++n)
        for (int a = 0; a <= n; ++a) {
            const auto sa = vt::vt_size_formula(n, a);
            if (vt::vt0_size(n) < sa || sa < vt::vt1_size(n))
                return "n=" + std::to_string(n) + " a=" + std::to_string(a);
        }
    return std::nullopt;
}

Result size_lower_bound() {
    for (int n = 1; n <= 30; ++n) {
        const auto lhs = static_cast<unsigned __int128>(vt::vt0_size(n)) *
                         static_cast<unsigned>(n + 1);
        if (lhs < (static_cast<unsigned __int128>(1) << n))
            return "n=" + std::to_string(n);
    }
    return std::nullopt;
}

Result decoder_completeness() {
    for (int n = 2; n <= 12; ++n)
        for (int a = 0; a <= n; ++a) {
            const vt::Code code = vt::vt_code({n, a});
            for (const Word& x : code.words)
                for (int p = 1; p <= n; ++p) {
                    const auto outcome = vt::decode_single_deletion(x.with_deleted(p), {n, a});
                    if (!outcome.ok() || *outcome.recovered != x) {
                        std::ostringstream os;
                        os << "n=" << n << " a=" << a << " codeword " << x.to_string()
                           << " deletion at " << p;
                        return os.str();
                    }
                }
        }
    return std::nullopt;
}

Result balls_disjoint() {
    for (int n = 2; n <= 12; ++n)
        for (int a = 0; a <= n; ++a) {
            const vt::Code code = vt::vt_code({n, a});
            std::set<std::uint64_t> seen;
            for (const Word& x : code.words)
                for (const Word& d : words::descendants(x, 1).members)
                    if (!seen.insert(d.packed()).second)
                        return "n=" + std::to_string(n) + " a=" + std::to_string(a) +
                               " shared descendant " + d.to_string();
        }
    return std::nullopt;
}

Result linearity_frontier() {
    for (int n = 1; n <= 14; ++n)
        if (vt::is_linear(vt::vt_code({n, 0})) != (n <= 4))
            return "n=" + std::to_string(n);
    return std::nullopt;
}

Result sequence_identity() {
    for (int n = 1; n <= 30; ++n)
        if (vt::vt0_size(n) != shiftreg::zstar_formula(n + 1))
            return "n=" + std::to_string(n);
    return std::nullopt;
}

Result optimal_sizes() {
    const std::uint64_t expected[] = {0, 1, 2, 2, 4, 6, 10, 16, 30};
    for (int n = 1; n <= 8; ++n) {
        const auto result = search::max_single_deletion_code(n);
        if (!result.proven_optimal || result.best_size != expected[n]) {
            std::ostringstream os;
            os << "n=" << n << " best=" << result.best_size
               << " proven=" << (result.proven_optimal ? "true" : "false");
            return os.str();
        }
        if (!search::is_single_deletion_correcting(result.witness))
            return "witness at n=" + std::to_string(n) + " is not a valid code";
    }
    return std::nullopt;
}

Result perfect_codes() {
    for (int n = 1; n <= 14; ++n)
        for (int a = 0; a <= n; ++a)
            if (!search::perfectness(vt::vt_code({n, a})).is_perfect)
                return "n=" + std::to_string(n) + " a=" + std::to_string(a);
    return std::nullopt;
}

Result ball_accounting() {
    for (int n = 2; n <= 14; ++n) {
        const vt::Code code = vt::vt_code({n, 0});
        std::uint64_t run_sum = 0;
        for (const Word& u : code.words)
            run_sum += static_cast<std::uint64_t>(words::runs(u));
        if (run_sum != (std::uint64_t{1} << (n - 1)))
            return "n=" + std::to_string(n);
        const auto report = search::perfectness(code);
        if (report.covered != report.universe || !report.overlaps.empty())
            return "coverage mismatch at n=" + std::to_string(n);
    }
    return std::nullopt;
}

Result optimal_not_perfect_examples() {
    const vt::Code three = vt::Code::from_words({Word::parse("000"), Word::parse("111")});
    if (!search::is_single_deletion_correcting(three))
        return "000/111 does not correct";
    const auto r3 = search::perfectness(three);
    if (r3.is_perfect || r3.covered != 2 || r3.universe != 4)
        return "000/111 census wrong";
    if (three.size() != search::max_single_deletion_code(3).best_size)
        return "000/111 is not optimal-sized";

    const vt::Code four = vt::Code::from_words({Word::parse("0000"), Word::parse("0011"),
                                                Word::parse("1100"), Word::parse("1111")});
    if (!search::is_single_deletion_correcting(four))
        return "length-4 example does not correct";
    if (search::perfectness(four).is_perfect)
        return "length-4 example reported perfect";
    if (four.size() != search::max_single_deletion_code(4).best_size)
        return "length-4 example is not optimal-sized";
    return std::nullopt;
}

Result swap_probe() {
    const vt::Code base = vt::vt_code({6, 0});
    const auto before = search::perfectness(base);
    const auto swapped = search::swap_experiment(
        base, {Word::parse("110100"), Word::parse("001011")},
        {Word::parse("111000"), Word::parse("000111")});
    if (!swapped.still_correcting)
        return "swap broke the correcting property";
    if (before.covered - swapped.report.covered != 4)
        return "coverage deficit is " + std::to_string(before.covered - swapped.report.covered);
    return std::nullopt;
}

Result no_linear_16() {
    if (!search::no_linear_16_code_check())
        return "some 16-word linear length-7 code corrects single deletions";
    return std::nullopt;
}

Result census_matches_formulas() {
    for (int n = 1; n <= 16; ++n) {
        struct Pair {
            shiftreg::RegisterKind kind;
            std::uint64_t formula;
        };
        const Pair pairs[] = {
            {shiftreg::RegisterKind::pcr, shiftreg::z_formula(n)},
            {shiftreg::RegisterKind::ccr, shiftreg::zstar_formula(n)},
            {shiftreg::RegisterKind::psr, shiftreg::s_formula(n)},
            {shiftreg::RegisterKind::csr, shiftreg::sstar_formula(n)},
        };
        for (const auto& p : pairs) {
            const auto census = shiftreg::cycle_census(n, p.kind);
            if (census.cycle_count != p.formula) {
                std::ostringstream os;
                os << shiftreg::kind_name(p.kind) << " n=" << n << " census "
                   << census.cycle_count << " formula " << p.formula;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Result published_census_grid() {
    const std::uint64_t table[10][4] = {
        {2, 1, 2, 1},   {3, 1, 2, 2},   {4, 2, 4, 2},    {6, 2, 4, 4},
        {8, 4, 8, 6},   {14, 6, 10, 10}, {20, 10, 20, 16}, {36, 16, 30, 30},
        {60, 30, 56, 52}, {108, 52, 94, 94},
    };
    for (int n = 1; n <= 10; ++n) {
        const std::uint64_t got[4] = {
            shiftreg::z_formula(n),
            shiftreg::zstar_formula(n),
            shiftreg::s_formula(n),
            shiftreg::sstar_formula(n),
        };
        for (int c = 0; c < 4; ++c)
            if (got[c] != table[n - 1][c])
                return "n=" + std::to_string(n) + " column " + std::to_string(c);
    }
    return std::nullopt;
}

Result complemented_shift_identity() {
    for (int n = 2; n <= 16; ++n)
        if (shiftreg::zstar_formula(n) !=
            shiftreg::cycle_census(n - 1, shiftreg::RegisterKind::csr).cycle_count)
            return "n=" + std::to_string(n);
    return std::nullopt;
}

Result brouwer_reduction() {
    for (int n = 1; n <= 30; ++n)
        if (shiftreg::brouwer_formula(n) != shiftreg::zstar_formula(n))
            return "n=" + std::to_string(n);
    return std::nullopt;
}

Result census_code_size_tie() {
    for (int n = 1; n <= 16; ++n) {
        const auto census =
            shiftreg::cycle_census(n, shiftreg::RegisterKind::csr).cycle_count;
        if (vt::vt0_size(n) != shiftreg::zstar_formula(n + 1) ||
            shiftreg::zstar_formula(n + 1) != census)
            return "n=" + std::to_string(n);
    }
    return std::nullopt;
}

Result step_bijectivity() {
    for (int n = 1; n <= 12; ++n)
        for (const auto kind : {shiftreg::RegisterKind::pcr, shiftreg::RegisterKind::ccr,
                                shiftreg::RegisterKind::psr, shiftreg::RegisterKind::csr}) {
            std::vector<int> preimages(std::size_t{1} << n, 0);
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                ++preimages[shiftreg::step({n, v}, kind).state.cells];
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
                if (preimages[v] != 1)
                    return std::string(shiftreg::kind_name(kind)) + " n=" + std::to_string(n) +
                           " state " + format_word(n, v);
        }
    return std::nullopt;
}

Result pairwise_sum_bijection() {
    for (int n = 2; n <= 14; ++n) {
        const auto ccr_cycles = shiftreg::output_cycles(n, shiftreg::RegisterKind::ccr);
        const auto csr_cycles = shiftreg::output_cycles(n - 1, shiftreg::RegisterKind::csr);
        std::set<shiftreg::OutputCycle> mapped;
        for (const auto& c : ccr_cycles) {
            const auto image = shiftreg::ccr_to_csr(c, n);
            if (!mapped.insert(image).second)
                return "n=" + std::to_string(n) + " map not injective";
            if (shiftreg::csr_to_ccr(image, n) != c)
                return "n=" + std::to_string(n) + " inverse mismatch";
        }
        const std::set<shiftreg::OutputCycle> expected(csr_cycles.begin(), csr_cycles.end());
        if (mapped != expected)
            return "n=" + std::to_string(n) + " map not onto";
    }
    return std::nullopt;
}

Result necklace_identities() {
    for (int m = 1; m <= 14; ++m) {
        const auto counts = shiftreg::necklace_counts(m);
        if (counts.rotation_only != shiftreg::z_formula(m))
            return "m=" + std::to_string(m) + " rotation count";
        if (m >= 2 && counts.primitive_rotation_complement != vt::vt1_size(m - 1))
            return "m=" + std::to_string(m) + " primitive complement count";
    }
    return std::nullopt;
}

} // namespace

std::vector<Check> words_suite() {
    return {
        {"first-order descendant count equals run count, n<=14", first_order_counts},
        {"second-order descendant count matches closed form, n<=14", second_order_counts},
        {"max descendant counts and maximizers, n<=14 k<=3", max_descendant_counts},
        {"LCS distance equals graph distance, n<=10", distance_routes_agree},
        {"descendant counts invariant under complement/reverse, n<=12", descendant_symmetries},
        {"alternating recurrence, n<=14", alternating_recurrence},
    };
}

std::vector<Check> vt_suite() {
    return {
        {"size formula vs enumeration, n<=16", sizes_match_enumeration},
        {"published size grid, n<=8", published_size_grid},
        {"residue ordering a=0 max / a=1 min, n<=20", residue_ordering},
        {"size lower bound 2^n/(n+1), n<=30", size_lower_bound},
        {"decoder completeness, n<=12", decoder_completeness},
        {"codeword balls pairwise disjoint, n<=12", balls_disjoint},
        {"linear exactly for n<=4, checked n<=14", linearity_frontier},
        {"a=0 sizes equal shifted cycle counts, n<=30", sequence_identity},
    };
}

std::vector<Check> search_suite() {
    return {
        {"A(8,1)=30 and smaller optima proven", optimal_sizes},
        {"every residue code is perfect, n<=14", perfect_codes},
        {"ball accounting for perfect codes, n<=14", ball_accounting},
        {"optimal but not perfect examples", optimal_not_perfect_examples},
        {"length-6 codeword swap keeps correction, coverage drops 4", swap_probe},
        {"no linear 16-word length-7 code", no_linear_16},
    };
}

std::vector<Check> shiftreg_suite() {
    return {
        {"census equals closed forms, n<=16", census_matches_formulas},
        {"published census grid, n<=10", published_census_grid},
        {"complemented cycling equals shorter summing census, n<=16",
         complemented_shift_identity},
        {"tournament formula equals cycling formula, n<=30", brouwer_reduction},
        {"cycle counts tie to a=0 code sizes, n<=16", census_code_size_tie},
        {"step is a bijection, n<=12", step_bijectivity},
        {"pairwise-sum bijection between cycle sets, n<=14", pairwise_sum_bijection},
        {"necklace counts match formulas and a=1 sizes, m<=14", necklace_identities},
    };
}

} // namespace vtcli
