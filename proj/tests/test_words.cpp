#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "vtc/numth.hpp"
#include "vtc/words.hpp"

using namespace vtc;
using words::Word;

namespace {

// Independent oracle: enumerate deletion-position subsets instead of the
// library's level-by-level expansion.
std::set<std::string> descendants_by_position_subsets(const Word& u, int e) {
    const int n = u.length();
    std::set<std::string> out;
    std::vector<int> idx(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i)
        idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        std::string sub;
        for (int i = 1; i <= n; ++i)
            if (std::find(idx.begin(), idx.end(), i) == idx.end())
                sub.push_back(static_cast<char>('0' + u.bit(i)));
        out.insert(sub);
        if (e == 0)
            break;
        int i = e - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - (e - 1 - i))
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < e; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::set<std::string> to_strings(const words::DescendantSet& ds) {
    std::set<std::string> out;
    for (const Word& w : ds.members)
        out.insert(w.is_empty() ? std::string() : w.to_string());
    return out;
}

} // namespace

TEST_CASE("word parsing, text form and bit access") {
    const Word w = Word::parse("0000111000");
    CHECK(w.length() == 10);
    CHECK(w.to_string() == "0000111000");
    CHECK(w.bit(1) == 0);
    CHECK(w.bit(5) == 1);
    CHECK(w.weight() == 3);
    CHECK(Word::parse("1").packed() == 1);
    CHECK(Word::parse("10").packed() == 2);
    CHECK_THROWS(Word::parse(""));
    CHECK_THROWS(Word::parse("012"));
    CHECK_THROWS(Word(3, 0b1000));
}

TEST_CASE("words of different lengths are never equal") {
    CHECK(Word::parse("0") != Word::parse("00"));
    CHECK(Word::parse("101") == Word(3, 0b101));
}

TEST_CASE("delete/insert/complement/reverse") {
    const Word w = Word::parse("1001");
    CHECK(w.with_deleted(1).to_string() == "001");
    CHECK(w.with_deleted(4).to_string() == "100");
    CHECK(w.with_inserted(1, 1).to_string() == "11001");
    CHECK(w.with_inserted(5, 1).to_string() == "10011");
    CHECK(w.complemented().to_string() == "0110");
    CHECK(w.reversed().to_string() == "1001");
    CHECK(Word::parse("110").reversed().to_string() == "011");
    CHECK(Word::parse("1").with_deleted(1).is_empty());
}

TEST_CASE("runs") {
    CHECK(words::runs(Word::parse("0000")) == 1);
    CHECK(words::runs(Word::parse("0101")) == 4);
    CHECK(words::runs(Word::parse("0000111000")) == 3);
    CHECK(words::runs(Word::parse("1")) == 1);
}

TEST_CASE("derivative") {
    CHECK(words::derivative(Word::parse("0000111000")).to_string() == "000100100");
    CHECK(words::derivative(Word::parse("00001000")).to_string() == "0001100");
    CHECK(words::derivative(Word::parse("00")).to_string() == "0");
    CHECK_THROWS_AS(words::derivative(Word::parse("1")), std::domain_error);
    // weight(u') == runs(u) - 1 across every word up to length 12
    for (int n = 2; n <= 12; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word u(n, v);
            CHECK(words::derivative(u).weight() == words::runs(u) - 1);
        }
}

TEST_CASE("deficiency") {
    CHECK(words::deficiency(Word::parse("0000111000")) == 0);
    CHECK(words::deficiency(Word::parse("00001000")) == 2);
    // 010: u' = 11 (weight 2), u'' = 0 (weight 0), so the deficiency is 4
    // and |D_2(010)| = binom(4,2) - 4 = 2, matching brute force below.
    CHECK(words::deficiency(Word::parse("010")) == 4);
    CHECK(descendants_by_position_subsets(Word::parse("010"), 2).size() == 2);
    CHECK_THROWS_AS(words::deficiency(Word::parse("01")), std::domain_error);
}

TEST_CASE("descendant sets match the position-subset oracle") {
    CHECK(to_strings(words::descendants(Word::parse("010"), 1)) ==
          std::set<std::string>{"10", "00", "01"});
    CHECK(to_strings(words::descendants(Word::parse("1001"), 1)) ==
          std::set<std::string>{"001", "101", "100"});
    CHECK(words::descendants(Word::parse("0000111000"), 2).size() == 6);

    const Word u = Word::parse("1001");
    CHECK(to_strings(words::descendants(u, 0)) == std::set<std::string>{"1001"});
    CHECK(to_strings(words::descendants(u, 4)) == std::set<std::string>{""});
    CHECK_THROWS_AS(words::descendants(u, 5), std::domain_error);

    std::mt19937_64 gen(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 10);
        const std::uint64_t v = gen() & ((std::uint64_t{1} << n) - 1);
        const int e = static_cast<int>(gen() % static_cast<std::uint64_t>(n + 1));
        const Word w(n, v);
        CHECK(to_strings(words::descendants(w, e)) == descendants_by_position_subsets(w, e));
    }
}

TEST_CASE("every descendant is a subsequence of its parent") {
    const Word u = Word::parse("1100101");
    for (int e = 0; e <= u.length(); ++e)
        for (const Word& d : words::descendants(u, e).members)
            CHECK(words::is_subsequence(d, u));
    CHECK_FALSE(words::is_subsequence(Word::parse("111"), Word::parse("1010")));
}

TEST_CASE("first-order descendant count equals the run count") {
    for (int n = 1; n <= 14; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word u(n, v);
            CHECK(words::descendants(u, 1).size() ==
                  static_cast<std::size_t>(words::runs(u)));
        }
}

TEST_CASE("second-order descendant count matches the closed form") {
    CHECK(words::d2_size_formula(Word::parse("0000111000")) == 6);
    CHECK(words::d2_size_formula(Word::parse("00001000")) == 4);
    CHECK(words::d2_size_formula(Word::parse("111")) == 1);
    for (int n = 3; n <= 14; ++n)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word u(n, v);
            CHECK(words::descendants(u, 2).size() == words::d2_size_formula(u));
        }
}

TEST_CASE("max_descendants closed form and its maximizers") {
    CHECK(words::max_descendants(5, 2) == 7);
    for (int n = 2; n <= 20; ++n)
        CHECK(words::max_descendants(n, 1) == static_cast<std::uint64_t>(n));
    CHECK(words::max_descendants(8, 3) == 26);
    CHECK_THROWS_AS(words::max_descendants(3, 3), std::domain_error);

    for (int k = 1; k <= 3; ++k) {
        for (int n = k + 1; n <= 14; ++n) {
            std::uint64_t best = 0;
            std::vector<std::uint64_t> argmax;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const std::uint64_t count = words::descendants(Word(n, v), k).size();
                if (count > best) {
                    best = count;
                    argmax.assign(1, v);
                } else if (count == best) {
                    argmax.push_back(v);
                }
            }
            CHECK(best == words::max_descendants(n, k));
            const std::uint64_t alt0 = Word::alternating(n, 0).packed();
            const std::uint64_t alt1 = Word::alternating(n, 1).packed();
            CHECK(std::find(argmax.begin(), argmax.end(), alt0) != argmax.end());
            CHECK(std::find(argmax.begin(), argmax.end(), alt1) != argmax.end());
            // The two alternating words are the only maximizers for k = 1
            // and, once the closed form drops below 2^{n-k}, for n >= 2k+1.
            // Below that every word whose D_k fills F_2^{n-k} ties them:
            // the exceptional pairs with n >= k+2 are (4,2), (5,3), (6,3).
            const bool unique = argmax.size() == 2;
            CHECK(unique == (k == 1 || n >= 2 * k + 1));
        }
    }
}

TEST_CASE("alternating-word descendant counts satisfy the binomial recurrence") {
    std::map<std::pair<int, int>, std::uint64_t> m;
    for (int n = 1; n <= 14; ++n)
        for (int k = 0; k <= n; ++k)
            m[{n, k}] = words::descendants(Word::alternating(n, 0), k).size();
    for (int n = 3; n <= 14; ++n)
        for (int k = 2; k < n; ++k)
            CHECK(m[{n, k}] == m[{n - 1, k}] + m[{n - 2, k - 1}]);
}

TEST_CASE("deletion distance examples") {
    const Word u = Word::parse("10110");
    CHECK(words::deletion_distance(u, u) == 0);
    CHECK(words::deletion_distance(Word::parse("000"), Word::parse("111")) == 3);
    CHECK(words::deletion_distance(Word::parse("0101"), Word::parse("0011")) == 1);
    CHECK_THROWS_AS(words::deletion_distance(Word::parse("01"), Word::parse("011")),
                    std::domain_error);
}

TEST_CASE("LCS-based distance equals shortest paths in the confusability graph") {
    for (int n = 1; n <= 10; ++n) {
        const words::ConfusabilityGraph g(n);
        // All-source BFS over the bitset rows, then compare the LCS route.
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
            bool all_match = true;
            for (std::uint32_t v = 0; v < g.node_count(); ++v)
                all_match =
                    all_match && dist[v] == words::deletion_distance(Word(n, u), Word(n, v));
            CHECK(all_match);
        }
    }
}

TEST_CASE("deletion distance behaves like a metric on random triples") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 11);
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        const Word a(n, gen() & mask), b(n, gen() & mask), c(n, gen() & mask);
        const int ab = words::deletion_distance(a, b);
        const int ba = words::deletion_distance(b, a);
        const int bc = words::deletion_distance(b, c);
        const int ac = words::deletion_distance(a, c);
        CHECK(ab == ba);
        CHECK(ab >= 0);
        CHECK((ab == 0) == (a == b));
        CHECK(ac <= ab + bc);
    }
}

TEST_CASE("descendant counts are invariant under complement and reversal") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= std::min(n, 3); ++k)
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                const Word u(n, v);
                const std::size_t base = words::descendants(u, k).size();
                CHECK(words::descendants(u.complemented(), k).size() == base);
                CHECK(words::descendants(u.reversed(), k).size() == base);
            }
}

TEST_CASE("third-order descendant counts are not a function of derivative weights") {
    // Exhibit two words agreeing in wt(u), wt(u'), wt(u''), wt(u''') whose
    // D_3 sizes differ.
    bool found = false;
    for (int n = 5; n <= 10 && !found; ++n) {
        std::map<std::array<int, 4>, std::vector<std::uint64_t>> groups;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
            const Word u(n, v);
            const Word d1 = words::derivative(u);
            const Word d2 = words::derivative(d1);
            const Word d3 = words::derivative(d2);
            groups[{u.weight(), d1.weight(), d2.weight(), d3.weight()}].push_back(v);
        }
        for (const auto& [key, vs] : groups) {
            if (vs.size() < 2)
                continue;
            std::set<std::size_t> sizes;
            for (std::uint64_t v : vs)
                sizes.insert(words::descendants(Word(n, v), 3).size());
            if (sizes.size() > 1) {
                found = true;
                break;
            }
        }
    }
    CHECK(found);
}

TEST_CASE("confusability graph structure") {
    const words::ConfusabilityGraph g1(1);
    CHECK(g1.node_count() == 2);
    CHECK(g1.adjacent(0, 1));
    CHECK(g1.degree(0) == 1);

    const words::ConfusabilityGraph g3(3);
    CHECK_FALSE(g3.adjacent(Word::parse("000").packed(), Word::parse("111").packed()));
    CHECK(g3.adjacent(Word::parse("000").packed(), Word::parse("001").packed()));

    CHECK_THROWS_AS(words::build_confusability_graph(13), std::domain_error);
    CHECK_THROWS_AS(words::build_confusability_graph(0), std::domain_error);

    // Degree multiset is preserved by complementation and reversal.
    for (int n = 2; n <= 9; ++n) {
        const words::ConfusabilityGraph g(n);
        std::multiset<int> plain, comp, rev;
        for (std::uint32_t v = 0; v < g.node_count(); ++v) {
            plain.insert(g.degree(v));
            comp.insert(g.degree(static_cast<std::uint32_t>(g.word(v).complemented().packed())));
            rev.insert(g.degree(static_cast<std::uint32_t>(g.word(v).reversed().packed())));
        }
        CHECK(plain == comp);
        CHECK(plain == rev);
    }

    // Adjacency is symmetric and irreflexive, and matches a direct
    // descendant-intersection check.
    const words::ConfusabilityGraph g4(4);
    for (std::uint32_t u = 0; u < g4.node_count(); ++u) {
        CHECK_FALSE(g4.adjacent(u, u));
        for (std::uint32_t v = 0; v < g4.node_count(); ++v) {
            CHECK(g4.adjacent(u, v) == g4.adjacent(v, u));
            if (u == v)
                continue;
            const auto du = to_strings(words::descendants(g4.word(u), 1));
            const auto dv = to_strings(words::descendants(g4.word(v), 1));
            std::vector<std::string> inter;
            std::set_intersection(du.begin(), du.end(), dv.begin(), dv.end(),
                                  std::back_inserter(inter));
            CHECK(g4.adjacent(u, v) == !inter.empty());
        }
    }
}

TEST_CASE("count_words_with_runs matches enumeration") {
    CHECK(words::count_words_with_runs(7, 1) == 2);
    CHECK(words::count_words_with_runs(4, 2) == 6);
    CHECK(words::count_words_with_runs(7, 7) == 2);
    CHECK_THROWS_AS(words::count_words_with_runs(4, 0), std::domain_error);
    CHECK_THROWS_AS(words::count_words_with_runs(4, 5), std::domain_error);
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::uint64_t> by_runs(static_cast<std::size_t>(n) + 1, 0);
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
            ++by_runs[static_cast<std::size_t>(words::runs(Word(n, v)))];
        for (int r = 1; r <= n; ++r)
            CHECK(by_runs[static_cast<std::size_t>(r)] == words::count_words_with_runs(n, r));
    }
}

TEST_CASE("descendant set size never exceeds the closed-form cap") {
    for (int n = 2; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); v += 17) {
                const Word u(n, v & ((std::uint64_t{1} << n) - 1));
                CHECK(words::descendants(u, k).size() <= words::max_descendants(n, k));
            }
}
