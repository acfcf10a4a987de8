#include "vtc/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace vtc::search {

using words::ConfusabilityGraph;
using words::Word;

namespace {

// Branch-and-bound maximum clique on the complement of the confusability
// graph (a clique there is an independent set in the graph itself). Greedy
// sequential coloring gives the upper bound; candidates are processed in
// descending color under one static vertex order.
class IndependentSetSolver {
public:
    IndependentSetSolver(const ConfusabilityGraph& g, std::uint64_t budget)
        : nverts_(g.node_count()), row_words_(g.row_words()), budget_(budget) {
        // Static vertex order: graph degree ascending, ties by packed value
        // ascending. The order fixes both the coloring and the branching, so
        // the whole search is deterministic.
        order_of_.resize(nverts_);
        label_of_.resize(nverts_);
        std::vector<std::uint32_t> by_degree(nverts_);
        for (std::uint32_t v = 0; v < nverts_; ++v)
            by_degree[v] = v;
        std::sort(by_degree.begin(), by_degree.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (g.degree(a) != g.degree(b))
                return g.degree(a) < g.degree(b);
            return a < b;
        });
        for (std::uint32_t slot = 0; slot < nverts_; ++slot) {
            order_of_[by_degree[slot]] = slot;
            label_of_[slot] = by_degree[slot];
        }
        comp_.assign(static_cast<std::size_t>(nverts_) * row_words_, 0);
        for (std::uint32_t u = 0; u < nverts_; ++u) {
            std::uint64_t* row = &comp_[static_cast<std::size_t>(order_of_[u]) * row_words_];
            for (std::uint32_t v = 0; v < nverts_; ++v)
                if (v != u && !g.adjacent(u, v))
                    row[order_of_[v] / 64] |= std::uint64_t{1} << (order_of_[v] % 64);
        }
    }

    // Seeds the incumbent size; the search then only reports strictly larger
    // sets, so the caller keeps its seed witness when nothing beats it.
    void run(std::uint64_t seed_size) {
        best_ = seed_size;
        best_set_.clear();
        aborted_ = false;
        nodes_ = 0;
        std::vector<std::uint64_t> all(row_words_, 0);
        for (std::uint32_t v = 0; v < nverts_; ++v)
            all[v / 64] |= std::uint64_t{1} << (v % 64);
        std::vector<std::uint32_t> current;
        expand(current, all);
    }

    std::uint64_t best() const { return best_; }
    std::vector<std::uint32_t> best_set() const {
        std::vector<std::uint32_t> out;
        out.reserve(best_set_.size());
        for (std::uint32_t slot : best_set_)
            out.push_back(label_of_[slot]);
        return out;
    }
    std::uint64_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    const std::uint64_t* row(std::uint32_t v) const { return &comp_[v * row_words_]; }

    static void clear_bit(std::vector<std::uint64_t>& s, std::uint32_t v) {
        s[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
    static bool empty(const std::vector<std::uint64_t>& s) {
        for (std::uint64_t w : s)
            if (w)
                return false;
        return true;
    }

    void color_sort(const std::vector<std::uint64_t>& cand,
                    std::vector<std::pair<std::uint32_t, std::uint32_t>>& order) {
        order.clear();
        std::vector<std::uint64_t> uncolored = cand;
        std::vector<std::uint64_t> q(row_words_);
        std::uint32_t color = 0;
        while (!empty(uncolored)) {
            ++color;
            q = uncolored;
            while (true) {
                std::uint32_t v = nverts_;
                for (std::size_t blk = 0; blk < row_words_; ++blk) {
                    if (q[blk]) {
                        v = static_cast<std::uint32_t>(blk * 64 + std::countr_zero(q[blk]));
                        break;
                    }
                }
                if (v >= nverts_)
                    break;
                order.emplace_back(v, color);
                clear_bit(uncolored, v);
                clear_bit(q, v);
                const std::uint64_t* rv = row(v);
                for (std::size_t blk = 0; blk < row_words_; ++blk)
                    q[blk] &= ~rv[blk];
            }
        }
    }

    void expand(std::vector<std::uint32_t>& current, std::vector<std::uint64_t> cand) {
        if (aborted_)
            return;
        ++nodes_;
        if (budget_ != 0 && nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
        color_sort(cand, order);
        for (std::size_t i = order.size(); i-- > 0;) {
            const auto [v, color] = order[i];
            if (current.size() + color <= best_)
                return; // every remaining candidate has color <= this one
            std::vector<std::uint64_t> next(row_words_);
            const std::uint64_t* rv = row(v);
            bool any = false;
            for (std::size_t blk = 0; blk < row_words_; ++blk) {
                next[blk] = cand[blk] & rv[blk];
                any = any || next[blk];
            }
            current.push_back(v);
            if (!any) {
                if (current.size() > best_) {
                    best_ = current.size();
                    best_set_ = current;
                }
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            if (aborted_)
                return;
            clear_bit(cand, v);
        }
    }

    std::uint32_t nverts_;
    std::size_t row_words_;
    std::vector<std::uint32_t> order_of_; // vertex -> slot in the static order
    std::vector<std::uint32_t> label_of_; // slot -> vertex
    std::vector<std::uint64_t> comp_;
    std::uint64_t best_ = 0;
    std::vector<std::uint32_t> best_set_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_;
    bool aborted_ = false;
};

// Distinct first-order descendants as packed values.
std::vector<std::uint64_t> ball(const Word& u) {
    std::vector<std::uint64_t> ds;
    ds.reserve(static_cast<std::size_t>(u.length()));
    for (const Word& d : words::descendants(u, 1).members)
        ds.push_back(d.is_empty() ? 0 : d.packed());
    return ds;
}

} // namespace

SearchResult max_single_deletion_code(int n, std::uint64_t node_budget) {
    if (n < 1 || n > max_search_n)
        throw capacity_error("max_single_deletion_code: n capped at " +
                             std::to_string(max_search_n));
    const auto start = std::chrono::steady_clock::now();
    const ConfusabilityGraph graph(n);
    vt::Code seed = vt::vt_code(vt::VTParams(n, 0));

    IndependentSetSolver solver(graph, node_budget);
    solver.run(seed.size());

    SearchResult result;
    result.n = n;
    result.nodes_explored = solver.nodes();
    result.proven_optimal = !solver.aborted();
    if (solver.best() > seed.size()) {
        std::vector<Word> ws;
        ws.reserve(solver.best_set().size());
        for (std::uint32_t v : solver.best_set())
            ws.push_back(Word(n, v));
        result.witness = vt::Code::from_words(std::move(ws));
        result.best_size = solver.best();
    } else {
        result.witness = std::move(seed);
        result.best_size = result.witness.size();
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

bool is_single_deletion_correcting(const vt::Code& code) {
    for (const Word& w : code.words)
        if (w.length() != code.n)
            throw std::domain_error("is_single_deletion_correcting: mixed lengths");
    std::unordered_map<std::uint64_t, std::size_t> owner;
    owner.reserve(code.words.size() * static_cast<std::size_t>(code.n));
    for (std::size_t i = 0; i < code.words.size(); ++i) {
        for (std::uint64_t d : ball(code.words[i])) {
            auto [it, inserted] = owner.emplace(d, i);
            if (!inserted && it->second != i)
                return false;
        }
    }
    return true;
}

PerfectnessReport perfectness(const vt::Code& code) {
    if (code.n > max_perfectness_n)
        throw capacity_error("perfectness: n capped at " + std::to_string(max_perfectness_n));
    PerfectnessReport report;
    report.n = code.n;
    report.universe = std::uint64_t{1} << (code.n - 1);
    std::vector<std::uint32_t> cover(report.universe, 0);
    for (const Word& u : code.words)
        for (std::uint64_t d : ball(u))
            ++cover[d];
    for (std::uint64_t y = 0; y < report.universe; ++y) {
        if (cover[y] > 0)
            ++report.covered;
        if (cover[y] > 1) {
            const Word w = (code.n == 1) ? Word::empty() : Word(code.n - 1, y);
            report.overlaps.push_back({w, static_cast<int>(cover[y])});
        }
    }
    report.is_perfect = report.overlaps.empty() && report.covered == report.universe;
    return report;
}

SwapResult swap_experiment(const vt::Code& base, const std::vector<Word>& remove,
                           const std::vector<Word>& add) {
    for (const Word& w : remove)
        if (!base.contains(w))
            throw std::domain_error("swap_experiment: remove set not a subset of the code");
    std::vector<Word> ws;
    ws.reserve(base.size() - remove.size() + add.size());
    for (const Word& w : base.words)
        if (std::find(remove.begin(), remove.end(), w) == remove.end())
            ws.push_back(w);
    for (const Word& w : add)
        if (std::find(ws.begin(), ws.end(), w) != ws.end())
            throw std::domain_error("swap_experiment: add set intersects the remaining code");
    ws.insert(ws.end(), add.begin(), add.end());

    const vt::Code modified = vt::Code::from_words(std::move(ws));
    SwapResult out;
    out.still_correcting = is_single_deletion_correcting(modified);
    out.report = perfectness(modified);
    return out;
}

ProbeResult improvement_probe(const vt::Code& base, int k, std::uint64_t budget) {
    if (k < 0 || k > 3)
        throw std::domain_error("improvement_probe: k must be in 0..3");
    if (base.n > max_search_n)
        throw capacity_error("improvement_probe: n capped at " + std::to_string(max_search_n));
    const int n = base.n;
    const std::uint64_t universe = std::uint64_t{1} << (n - 1);

    std::vector<std::uint32_t> cover(universe, 0);
    std::vector<std::vector<std::uint64_t>> balls;
    balls.reserve(base.size());
    for (const Word& u : base.words) {
        balls.push_back(ball(u));
        for (std::uint64_t d : balls.back())
            ++cover[d];
    }

    ProbeResult result;
    if (static_cast<std::size_t>(k) > base.size()) {
        result.status = ProbeStatus::none_found;
        return result;
    }
    std::vector<std::size_t> subset(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        subset[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);

    // Words no ball of the base reaches; they stay addable under any removal.
    std::vector<std::uint64_t> global_zeros;
    for (std::uint64_t y = 0; y < universe; ++y)
        if (cover[y] == 0)
            global_zeros.push_back(y);

    std::vector<std::uint32_t> removed_count(universe, 0);
    const std::size_t m = base.size();

    auto try_subset = [&](const std::vector<std::size_t>& rem) -> bool {
        // Words left uncovered once the k balls are lifted, plus the words
        // the base never covered.
        std::vector<std::uint64_t> uncovered = global_zeros;
        for (std::size_t idx : rem)
            for (std::uint64_t d : balls[idx])
                ++removed_count[d];
        for (std::size_t idx : rem)
            for (std::uint64_t d : balls[idx])
                if (removed_count[d] > 0 && cover[d] == removed_count[d]) {
                    uncovered.push_back(d);
                    removed_count[d] = 0; // dedupe while collecting
                }
        for (std::size_t idx : rem)
            for (std::uint64_t d : balls[idx])
                removed_count[d] = 0;
        std::sort(uncovered.begin(), uncovered.end());
        uncovered.erase(std::unique(uncovered.begin(), uncovered.end()), uncovered.end());
        if (uncovered.size() > 64)
            throw std::logic_error("improvement_probe: uncovered set too large for mask");

        // Candidates must have their whole ball inside the uncovered set, so
        // they are parents of uncovered words.
        auto uncovered_index = [&](std::uint64_t y) -> int {
            auto it = std::lower_bound(uncovered.begin(), uncovered.end(), y);
            if (it == uncovered.end() || *it != y)
                return -1;
            return static_cast<int>(it - uncovered.begin());
        };

        std::vector<std::uint64_t> parents;
        for (std::uint64_t y : uncovered) {
            const Word yw = (n == 1) ? Word::empty() : Word(n - 1, y);
            for (int pos = 1; pos <= yw.length() + 1; ++pos)
                for (int b = 0; b <= 1; ++b)
                    parents.push_back(yw.with_inserted(pos, b).packed());
        }
        std::sort(parents.begin(), parents.end());
        parents.erase(std::unique(parents.begin(), parents.end()), parents.end());

        struct Candidate {
            std::uint64_t packed;
            std::uint64_t mask; // ball as a bitmask over the uncovered list
        };
        std::vector<Candidate> candidates;
        for (std::uint64_t wp : parents) {
            ++result.candidates_tested;
            const Word w(n, wp);
            std::uint64_t mask = 0;
            bool inside = true;
            for (std::uint64_t d : ball(w)) {
                const int idx = uncovered_index(d);
                if (idx < 0 || idx >= 64) {
                    inside = false;
                    break;
                }
                mask |= std::uint64_t{1} << idx;
            }
            if (inside)
                candidates.push_back({wp, mask});
        }
        if (candidates.size() < static_cast<std::size_t>(k) + 1)
            return false;

        // Need k+1 candidates with pairwise disjoint balls.
        std::vector<std::size_t> chosen;
        auto pick = [&](auto&& self, std::size_t from, std::uint64_t used) -> bool {
            if (chosen.size() == static_cast<std::size_t>(k) + 1)
                return true;
            for (std::size_t i = from; i < candidates.size(); ++i) {
                if (used & candidates[i].mask)
                    continue;
                chosen.push_back(i);
                if (self(self, i + 1, used | candidates[i].mask))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        if (!pick(pick, 0, 0))
            return false;

        std::vector<Word> improved_words;
        for (std::size_t i = 0; i < m; ++i)
            if (std::find(rem.begin(), rem.end(), i) == rem.end())
                improved_words.push_back(base.words[i]);
        for (std::size_t ci : chosen)
            improved_words.push_back(Word(n, candidates[ci].packed));
        result.improved = vt::Code::from_words(std::move(improved_words));
        return true;
    };

    // Ascending combinations of k removal indices.
    while (true) {
        if (result.candidates_tested > budget) {
            result.status = ProbeStatus::inconclusive;
            return result;
        }
        if (try_subset(subset)) {
            result.status = ProbeStatus::improved;
            return result;
        }
        if (k == 0)
            break;
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] ==
                             m - static_cast<std::size_t>(k - i))
            --i;
        if (i < 0)
            break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
    result.status = ProbeStatus::none_found;
    return result;
}

bool no_linear_16_code_check() {
    constexpr int n = 7;
    constexpr int dim = 4;
    // Enumerate every 4-dimensional subspace of F_2^7 exactly once through
    // its reduced-echelon basis: choose pivot columns, then fill the free
    // entries (non-pivot columns to the right of each pivot).
    std::vector<int> pivots(dim);
    bool found = false;
    std::uint64_t subspaces = 0;

    auto check_subspace = [&](const std::array<std::uint32_t, dim>& rows) {
        std::array<std::uint32_t, 16> codewords{};
        for (std::uint32_t s = 0; s < 16; ++s) {
            std::uint32_t w = 0;
            for (int r = 0; r < dim; ++r)
                if ((s >> r) & 1u)
                    w ^= rows[static_cast<std::size_t>(r)];
            codewords[s] = w;
        }
        std::unordered_map<std::uint64_t, std::uint32_t> owner;
        owner.reserve(16 * n);
        for (std::uint32_t w : codewords) {
            const Word word(n, w);
            for (std::uint64_t d : ball(word)) {
                auto [it, inserted] = owner.emplace(d, w);
                if (!inserted && it->second != w)
                    return false;
            }
        }
        return true;
    };

    auto enumerate = [&](auto&& self, int level, int first_col) -> void {
        if (found)
            return;
        if (level == dim) {
            // Free cells: for each row r, the non-pivot columns right of pivots[r].
            std::vector<std::pair<int, int>> free_cells; // (row, column)
            for (int r = 0; r < dim; ++r)
                for (int col = pivots[static_cast<std::size_t>(r)] + 1; col < n; ++col)
                    if (std::find(pivots.begin(), pivots.end(), col) == pivots.end())
                        free_cells.emplace_back(r, col);
            const std::uint32_t combos = std::uint32_t{1} << free_cells.size();
            for (std::uint32_t fill = 0; fill < combos && !found; ++fill) {
                std::array<std::uint32_t, dim> rows{};
                for (int r = 0; r < dim; ++r)
                    rows[static_cast<std::size_t>(r)] =
                        std::uint32_t{1} << (n - 1 - pivots[static_cast<std::size_t>(r)]);
                for (std::size_t f = 0; f < free_cells.size(); ++f)
                    if ((fill >> f) & 1u)
                        rows[static_cast<std::size_t>(free_cells[f].first)] |=
                            std::uint32_t{1} << (n - 1 - free_cells[f].second);
                ++subspaces;
                if (check_subspace(rows))
                    found = true;
            }
            return;
        }
        for (int col = first_col; col <= n - (dim - level); ++col) {
            pivots[static_cast<std::size_t>(level)] = col;
            self(self, level + 1, col + 1);
        }
    };
    enumerate(enumerate, 0, 0);
    // Gaussian binomial [7 choose 4]_2: the echelon enumeration must hit
    // every 4-dimensional subspace exactly once.
    if (subspaces != 11811)
        throw std::logic_error("no_linear_16_code_check: subspace enumeration miscount");
    return !found;
}

} // namespace vtc::search
