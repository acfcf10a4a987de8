#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "vtc/numth.hpp"
#include "vtc/vt.hpp"
#include "vtc/words.hpp"

using namespace vtc;
using words::Word;

namespace {

std::set<std::string> code_strings(const vt::Code& c) {
    std::set<std::string> out;
    for (const Word& w : c.words)
        out.insert(w.to_string());
    return out;
}

// Oracle: the one codeword that has `received` among its first-order
// descendants (unique whenever the code corrects single deletions).
Word unique_parent_in_code(const vt::Code& c, const Word& received) {
    const Word* found = nullptr;
    for (const Word& u : c.words)
        if (words::descendants(u, 1).contains(received)) {
            REQUIRE(found == nullptr);
            found = &u;
        }
    REQUIRE(found != nullptr);
    return *found;
}

} // namespace

TEST_CASE("checksum") {
    CHECK(vt::vt_checksum(Word::parse("0000")) == 0);
    CHECK(vt::vt_checksum_raw(Word::parse("1001")) == 5);
    CHECK(vt::vt_checksum(Word::parse("1001")) == 0);
    CHECK(vt::vt_checksum_raw(Word::parse("00111")) == 12);
    CHECK(vt::vt_checksum(Word::parse("00111")) == 0);
}

TEST_CASE("params normalize the residue") {
    CHECK(vt::VTParams(4, 7).a == 2);
    CHECK(vt::VTParams(4, -1).a == 4);
    CHECK_THROWS_AS(vt::VTParams(0, 0), std::domain_error);
}

TEST_CASE("small code listings") {
    CHECK(code_strings(vt::vt_code({1, 0})) == std::set<std::string>{"0"});
    CHECK(code_strings(vt::vt_code({2, 0})) == std::set<std::string>{"00", "11"});
    CHECK(code_strings(vt::vt_code({3, 0})) == std::set<std::string>{"000", "101"});
    CHECK(code_strings(vt::vt_code({4, 0})) ==
          std::set<std::string>{"0000", "1001", "0110", "1111"});
    // The published listing shows the length-6 string 110011 here; the
    // enumerated member in its place is 11011.
    CHECK(code_strings(vt::vt_code({5, 0})) ==
          std::set<std::string>{"00000", "10001", "01010", "11011", "11100", "00111"});
    CHECK(code_strings(vt::vt_code({1, 1})) == std::set<std::string>{"1"});
    CHECK_THROWS_AS(vt::vt_code({25, 0}), capacity_error);
}

TEST_CASE("size table for n <= 8") {
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
        for (int a = 0; a <= n; ++a) {
            CHECK(vt::vt_size_formula(n, a) ==
                  table[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(a)]);
        }
    CHECK(vt::vt_size_formula(8, 0) == 30);
    CHECK(vt::vt_size_formula(5, 3) == 6);
    for (int a = 0; a <= 7; ++a)
        CHECK(vt::vt_size_formula(7, a) == 16);
}

TEST_CASE("formula equals enumeration for n <= 16") {
    for (int n = 1; n <= 16; ++n) {
        std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t v = 0; v < total; ++v)
            ++counts[static_cast<std::size_t>(vt::vt_checksum(Word(n, v)))];
        for (int a = 0; a <= n; ++a)
            CHECK(counts[static_cast<std::size_t>(a)] == vt::vt_size_formula(n, a));
    }
}

TEST_CASE("a = 0 dominates and a = 1 is smallest") {
    for (int n = 1; n <= 20; ++n) {
        CHECK(vt::vt0_size(n) == vt::vt_size_formula(n, 0));
        CHECK(vt::vt1_size(n) == vt::vt_size_formula(n, 1));
        for (int a = 0; a <= n; ++a) {
            const std::uint64_t sa = vt::vt_size_formula(n, a);
            CHECK(vt::vt0_size(n) >= sa);
            CHECK(sa >= vt::vt1_size(n));
        }
    }
}

TEST_CASE("a = 0 size meets the 2^n/(n+1) bound") {
    for (int n = 1; n <= 30; ++n)
        CHECK(static_cast<unsigned __int128>(vt::vt0_size(n)) *
                  static_cast<unsigned>(n + 1) >=
              (static_cast<unsigned __int128>(1) << n));
}

TEST_CASE("a = 0 sizes reproduce the shifted classic sequence") {
    // 1, 1, 2, 2, 4, 6, 10, 16, 30, 52, 94, 172, 316, 586, ...
    const std::vector<std::uint64_t> seq = {1,  1,  2,  2,   4,   6,   10,
                                            16, 30, 52, 94, 172, 316, 586};
    for (std::size_t i = 1; i < seq.size(); ++i)
        CHECK(vt::vt0_size(static_cast<int>(i)) == seq[i]);
    CHECK(vt::vt0_size(13) == 586);
}

TEST_CASE("decoding examples") {
    const auto d1 = vt::decode_single_deletion(Word::parse("101"), {4, 0});
    REQUIRE(d1.ok());
    CHECK(d1.recovered->to_string() == "1001");
    CHECK(unique_parent_in_code(vt::vt_code({4, 0}), Word::parse("101")).to_string() == "1001");

    const auto d2 = vt::decode_single_deletion(Word::parse("1110"), {5, 0});
    REQUIRE(d2.ok());
    CHECK(d2.recovered->to_string() == "11100");
    CHECK(unique_parent_in_code(vt::vt_code({5, 0}), Word::parse("1110")).to_string() ==
          "11100");

    const auto d3 = vt::decode_single_deletion(Word::parse("0010"), {5, 0});
    REQUIRE(d3.ok());
    CHECK(d3.recovered->to_string() == "01010");
    CHECK(unique_parent_in_code(vt::vt_code({5, 0}), Word::parse("0010")).to_string() ==
          "01010");

    const auto bad = vt::decode_single_deletion(Word::parse("10"), {4, 0});
    CHECK_FALSE(bad.ok());
    CHECK(bad.failure == vt::DecodeFailure::invalid_length);
}

TEST_CASE("decoder recovers every codeword from every single deletion") {
    for (int n = 2; n <= 10; ++n) {
        for (int a = 0; a <= n; ++a) {
            const vt::Code code = vt::vt_code({n, a});
            for (const Word& x : code.words) {
                for (int p = 1; p <= n; ++p) {
                    const auto outcome =
                        vt::decode_single_deletion(x.with_deleted(p), {n, a});
                    REQUIRE(outcome.ok());
                    CHECK(*outcome.recovered == x);
                }
            }
        }
    }
}

TEST_CASE("descendant balls of distinct codewords stay disjoint") {
    for (int n = 2; n <= 10; ++n) {
        for (int a = 0; a <= n; ++a) {
            const vt::Code code = vt::vt_code({n, a});
            std::set<std::uint64_t> seen;
            for (const Word& x : code.words)
                for (const Word& d : words::descendants(x, 1).members)
                    CHECK(seen.insert(d.packed()).second);
        }
    }
}

TEST_CASE("linear parameters") {
    const auto p1 = vt::linear_params(1);
    CHECK(p1.c == 3);
    CHECK(p1.n == 4);
    const auto p10 = vt::linear_params(10);
    CHECK(p10.c == 6);
    CHECK(p10.n == 16);
    CHECK_THROWS_AS(vt::linear_params(0), std::domain_error);
    for (int k = 1; k <= 10000; ++k) {
        const auto p = vt::linear_params(k);
        CHECK(p.n == p.k + p.c);
        CHECK(numth::binom(static_cast<std::uint64_t>(p.c) + 1, 2) >=
              static_cast<std::uint64_t>(p.n) + 1);
        // c stays the least value whose ceiling expression admits, i.e.
        // c-1 fails the covering inequality whenever c > 1.
        const double target = std::sqrt(2.0 * k + 2.25) + 0.5;
        CHECK(p.c == static_cast<int>(std::ceil(target)));
    }
}

TEST_CASE("linear encoding is systematic, deterministic and decodable") {
    CHECK(vt::linear_encode(Word::parse("0")).to_string() == "0000");
    CHECK(vt::linear_encode(Word::parse("1")).to_string() == "1001");

    // Exhaustive oracle for k = 1, info = 1: the lexicographically smallest
    // check-bit subset reaching residue 0 overall.
    {
        std::vector<std::string> satisfying;
        for (std::uint64_t v = 0; v < 8; ++v) {
            const Word w(4, (std::uint64_t{1} << 3) | v);
            if (vt::vt_checksum(w) == 0)
                satisfying.push_back(w.to_string());
        }
        std::sort(satisfying.begin(), satisfying.end());
        REQUIRE(!satisfying.empty());
        CHECK(vt::linear_encode(Word::parse("1")).to_string() == satisfying.front());
    }

    const Word enc = vt::linear_encode(Word::parse("1111"));
    CHECK(enc.length() == 8);
    CHECK(enc.to_string().substr(0, 4) == "1111");
    CHECK(vt::vt_checksum(enc) == 0);

    // Every encoded block decodes back after any single deletion.
    const vt::LinearEncoder encoder(4);
    for (std::uint64_t v = 0; v < 16; ++v) {
        const Word info(4, v);
        const Word x = encoder.encode(info);
        CHECK(vt::vt_checksum(x) == 0);
        CHECK(x.to_string().substr(0, 4) == info.to_string());
        for (int p = 1; p <= x.length(); ++p) {
            const auto outcome = vt::decode_single_deletion(
                x.with_deleted(p), {encoder.params().n, 0});
            REQUIRE(outcome.ok());
            CHECK(*outcome.recovered == x);
        }
    }
}

TEST_CASE("linearity holds exactly up to length 4") {
    for (int n = 1; n <= 14; ++n)
        CHECK(vt::is_linear(vt::vt_code({n, 0})) == (n <= 4));

    // Witness pair for n >= 5: 10...01 and 1100...100 belong, their sum does not.
    const vt::Code c5 = vt::vt_code({5, 0});
    CHECK(c5.contains(Word::parse("10001")));
    CHECK(c5.contains(Word::parse("11100")));
    CHECK_FALSE(c5.contains(Word(5, Word::parse("10001").packed() ^
                                      Word::parse("11100").packed())));

    CHECK(vt::is_linear(vt::Code::from_words({Word::parse("000"), Word::parse("111")})));
    CHECK_FALSE(vt::is_linear(vt::Code::from_words({Word::parse("111")})));
}

TEST_CASE("code table io round trip") {
    const vt::Code code = vt::vt_code({8, 3});
    std::ostringstream out;
    vt::write_code_table(out, code);
    const std::string text = out.str();
    CHECK(text.rfind("# VT n=8 a=3 size=29\n", 0) == 0);

    std::istringstream in(text);
    const vt::Code back = vt::read_code_table(in);
    CHECK(back.n == code.n);
    CHECK(back.family == vt::CodeFamily::vt);
    CHECK(back.params->a == 3);
    CHECK(back.words == code.words);

    std::istringstream bare("000\n111\n");
    const vt::Code explicit_code = vt::read_code_table(bare);
    CHECK(explicit_code.family == vt::CodeFamily::explicit_set);
    CHECK(explicit_code.size() == 2);

    std::istringstream mixed("000\n11\n");
    CHECK_THROWS_AS(vt::read_code_table(mixed), std::domain_error);
}

TEST_CASE("codes reject malformed word sets") {
    CHECK_THROWS_AS(vt::Code::from_words({Word::parse("01"), Word::parse("01")}),
                    std::domain_error);
    CHECK_THROWS_AS(vt::Code::from_words({}), std::domain_error);
}
