#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "vtc/vt.hpp"
#include "vtc/words.hpp"

namespace vtc::search {

struct SearchResult {
    int n = 0;
    std::uint64_t best_size = 0;
    vt::Code witness;
    bool proven_optimal = false;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

// Exact largest single-deletion-correcting code of length n, found as a
// maximum independent set of the confusability graph (branch and bound on
// the complement with greedy-coloring bounds, vertices in ascending packed
// order, incumbent seeded with VT_0(n)). A node_budget of 0 means unlimited;
// when the budget runs out the incumbent is returned with
// proven_optimal == false.
SearchResult max_single_deletion_code(int n, std::uint64_t node_budget = 0);
constexpr int max_search_n = 10;

// True iff the first-order descendant sets of all codewords are pairwise
// disjoint. Throws std::domain_error on mixed lengths.
bool is_single_deletion_correcting(const vt::Code& code);

struct OverlapWitness {
    words::Word word;   // a length n-1 word covered more than once
    int multiplicity;
};

struct PerfectnessReport {
    int n = 0;
    std::uint64_t covered = 0;   // distinct length n-1 words hit by some ball
    std::uint64_t universe = 0;  // 2^{n-1}
    std::vector<OverlapWitness> overlaps;
    bool is_perfect = false;
};

// Exact census of how the balls D_1(u), u in code, cover F_2^{n-1}.
PerfectnessReport perfectness(const vt::Code& code);
constexpr int max_perfectness_n = 20;

struct SwapResult {
    bool still_correcting = false;
    PerfectnessReport report;
};

// Replace `remove` (must be a subset of base) by `add` (must be disjoint
// from the remainder) and re-examine the modified code.
SwapResult swap_experiment(const vt::Code& base, const std::vector<words::Word>& remove,
                           const std::vector<words::Word>& add);

enum class ProbeStatus { improved, none_found, inconclusive };

struct ProbeResult {
    ProbeStatus status = ProbeStatus::none_found;
    std::optional<vt::Code> improved; // engaged iff status == improved
    std::uint64_t candidates_tested = 0;
};

// Look for k codewords of base that can be replaced by k+1 words while the
// code stays single-deletion-correcting. Exhaustive up to `budget` candidate
// evaluations; running out reports inconclusive rather than a negative.
ProbeResult improvement_probe(const vt::Code& base, int k,
                              std::uint64_t budget = 100'000'000);

// Verifies by exhaustion over echelon-form bases that no 4-dimensional
// linear subspace of F_2^7 (16 words) corrects single deletions.
bool no_linear_16_code_check();

} // namespace vtc::search
