#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vtc/common.hpp"

namespace vtc::words {

// Binary word of length 1..62 with 1-based positions. x1 is the first
// transmitted bit and sits in the most significant of the n packed bits, so
// the packed value orders words exactly like their text form ("0101...").
//
// Length 0 (the empty word) exists only as a descendant; it is produced by
// Word::empty() or by deleting the last remaining bit, never by the public
// constructors.
class Word {
public:
    static constexpr int max_length = 62;

    Word(int n, std::uint64_t packed);
    static Word parse(std::string_view text);
    static Word zeros(int n);
    static Word ones(int n);
    static Word alternating(int n, int first_bit); // 0101... or 1010...
    static Word empty();

    int length() const { return n_; }
    bool is_empty() const { return n_ == 0; }
    std::uint64_t packed() const { return bits_; }

    int bit(int i) const; // 1-based; x1 is the leftmost bit
    int weight() const;

    Word with_deleted(int pos) const;          // length n-1; pos 1..n
    Word with_inserted(int pos, int b) const;  // new bit lands at position pos of the longer word
    Word complemented() const;
    Word reversed() const;

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.n_ != b.n_)
            return a.n_ <=> b.n_;
        return a.bits_ <=> b.bits_;
    }

private:
    Word() : n_(0), bits_(0) {}
    int n_;
    std::uint64_t bits_;
};

// The distinct words obtainable from one parent by exactly `order` deletions.
struct DescendantSet {
    int order = 0;
    int parent_length = 0;
    std::vector<Word> members; // sorted ascending, no duplicates

    std::size_t size() const { return members.size(); }
    int member_length() const { return parent_length - order; }
    bool contains(const Word& w) const;
};

// Graph on all 2^n words of length n, with an edge between u and v exactly
// when they share a first-order descendant. Node index == packed word value.
// Immutable after construction.
class ConfusabilityGraph {
public:
    static constexpr int max_n = 12;

    explicit ConfusabilityGraph(int n);

    int n() const { return n_; }
    std::uint32_t node_count() const { return nodes_; }
    std::size_t row_words() const { return row_words_; }

    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    int degree(std::uint32_t u) const { return degree_[u]; }
    const std::uint64_t* row(std::uint32_t u) const { return &bits_[u * row_words_]; }
    Word word(std::uint32_t index) const { return Word(n_, index); }

    // Shortest-path length; the graph is connected so this always terminates.
    int path_distance(std::uint32_t from, std::uint32_t to) const;

private:
    int n_;
    std::uint32_t nodes_;
    std::size_t row_words_;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degree_;
};

// Number of maximal blocks of equal consecutive bits.
int runs(const Word& u);

// (u1+u2, u2+u3, ..., u_{n-1}+u_n) over F2; requires n >= 2.
// weight(derivative(u)) == runs(u) - 1.
Word derivative(const Word& u);

// 2*wt(u') - wt(u''); requires n >= 3. Always even and >= 0.
int deficiency(const Word& u);

DescendantSet descendants(const Word& u, int order);

// |D_2(u)| in closed form: binom(runs(u)+1, 2) - deficiency(u); n >= 3.
std::uint64_t d2_size_formula(const Word& u);

// Largest possible |D_k(u)| over words of length n: sum_{i=0}^{k} binom(n-k, i).
// Requires n >= k+1.
std::uint64_t max_descendants(int n, int k);

// Half the minimum number of deletions plus insertions turning u into v.
// Restricted to equal lengths, where it equals n - LCS(u, v).
int deletion_distance(const Word& u, const Word& v);

ConfusabilityGraph build_confusability_graph(int n);

// Number of length-n words with exactly r runs: 2*binom(n-1, r-1).
std::uint64_t count_words_with_runs(int n, int r);

// True when `sub` can be obtained from `sup` by deletions.
bool is_subsequence(const Word& sub, const Word& sup);

} // namespace vtc::words
