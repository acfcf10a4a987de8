#include "vtc/words.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#include "vtc/numth.hpp"

namespace vtc::words {

namespace {

void check_length(int n) {
    if (n < 1 || n > Word::max_length)
        throw std::domain_error("Word: length must be in 1.." +
                                std::to_string(Word::max_length));
}

// Delete the 1-based position p from an n-bit packed value (x1 = MSB).
std::uint64_t delete_bit(std::uint64_t bits, int n, int p) {
    const std::uint64_t low_mask = (p == n) ? 0 : ((std::uint64_t{1} << (n - p)) - 1);
    return ((bits >> (n - p + 1)) << (n - p)) | (bits & low_mask);
}

} // namespace

Word::Word(int n, std::uint64_t packed) : n_(n), bits_(packed) {
    check_length(n);
    if (n < 64 && (packed >> n) != 0)
        throw std::domain_error("Word: packed value has bits beyond position n");
}

Word Word::parse(std::string_view text) {
    check_length(static_cast<int>(text.size()));
    std::uint64_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("Word::parse: expected only '0'/'1'");
        bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return Word(static_cast<int>(text.size()), bits);
}

Word Word::zeros(int n) { return Word(n, 0); }

Word Word::ones(int n) {
    check_length(n);
    return Word(n, (std::uint64_t{1} << n) - 1);
}

Word Word::alternating(int n, int first_bit) {
    check_length(n);
    if (first_bit != 0 && first_bit != 1)
        throw std::domain_error("Word::alternating: bit must be 0 or 1");
    std::uint64_t bits = 0;
    for (int i = 1; i <= n; ++i)
        bits = (bits << 1) | static_cast<std::uint64_t>((i % 2 == 1) ? first_bit : 1 - first_bit);
    return Word(n, bits);
}

Word Word::empty() { return Word(); }

int Word::bit(int i) const {
    if (i < 1 || i > n_)
        throw std::domain_error("Word::bit: position out of range");
    return static_cast<int>((bits_ >> (n_ - i)) & 1u);
}

int Word::weight() const { return std::popcount(bits_); }

Word Word::with_deleted(int pos) const {
    if (pos < 1 || pos > n_)
        throw std::domain_error("Word::with_deleted: position out of range");
    Word w;
    w.n_ = n_ - 1;
    w.bits_ = delete_bit(bits_, n_, pos);
    return w;
}

Word Word::with_inserted(int pos, int b) const {
    if (pos < 1 || pos > n_ + 1)
        throw std::domain_error("Word::with_inserted: position out of range");
    if (b != 0 && b != 1)
        throw std::domain_error("Word::with_inserted: bit must be 0 or 1");
    check_length(n_ + 1);
    const std::uint64_t low_mask = (std::uint64_t{1} << (n_ - pos + 1)) - 1;
    const std::uint64_t bits = ((bits_ & ~low_mask) << 1) |
                               (static_cast<std::uint64_t>(b) << (n_ + 1 - pos)) |
                               (bits_ & low_mask);
    return Word(n_ + 1, bits);
}

Word Word::complemented() const {
    Word w(*this);
    if (n_ > 0)
        w.bits_ = ~bits_ & ((std::uint64_t{1} << n_) - 1);
    return w;
}

Word Word::reversed() const {
    Word w(*this);
    std::uint64_t r = 0;
    std::uint64_t b = bits_;
    for (int i = 0; i < n_; ++i) {
        r = (r << 1) | (b & 1u);
        b >>= 1;
    }
    w.bits_ = r;
    return w;
}

std::string Word::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 1; i <= n_; ++i)
        s[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + bit(i));
    return s;
}

bool DescendantSet::contains(const Word& w) const {
    return std::binary_search(members.begin(), members.end(), w);
}

int runs(const Word& u) {
    if (u.is_empty())
        throw std::domain_error("runs: empty word");
    const std::uint64_t b = u.packed();
    const int n = u.length();
    const std::uint64_t transitions = (b ^ (b >> 1)) & ((std::uint64_t{1} << (n - 1)) - 1);
    return 1 + std::popcount(transitions);
}

Word derivative(const Word& u) {
    if (u.length() < 2)
        throw std::domain_error("derivative: need length >= 2");
    const int n = u.length();
    const std::uint64_t b = u.packed();
    return Word(n - 1, (b ^ (b >> 1)) & ((std::uint64_t{1} << (n - 1)) - 1));
}

int deficiency(const Word& u) {
    if (u.length() < 3)
        throw std::domain_error("deficiency: need length >= 3");
    const Word d1 = derivative(u);
    const Word d2 = derivative(d1);
    return 2 * d1.weight() - d2.weight();
}

DescendantSet descendants(const Word& u, int order) {
    const int n = u.length();
    if (order < 0 || order > n)
        throw std::domain_error("descendants: order must be in 0..length");

    // Level-by-level deletion with deduplication per level.
    std::vector<std::uint64_t> cur{u.packed()};
    std::vector<std::uint64_t> next;
    int len = n;
    for (int e = 0; e < order; ++e) {
        next.clear();
        for (std::uint64_t w : cur)
            for (int p = 1; p <= len; ++p)
                next.push_back(delete_bit(w, len, p));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur.swap(next);
        --len;
    }

    DescendantSet out;
    out.order = order;
    out.parent_length = n;
    out.members.reserve(cur.size());
    for (std::uint64_t w : cur)
        out.members.push_back(len == 0 ? Word::empty() : Word(len, w));
    return out;
}

std::uint64_t d2_size_formula(const Word& u) {
    if (u.length() < 3)
        throw std::domain_error("d2_size_formula: need length >= 3");
    const std::uint64_t base = numth::binom(static_cast<std::uint64_t>(runs(u)) + 1, 2);
    const int def = deficiency(u);
    if (def < 0 || base < static_cast<std::uint64_t>(def))
        throw std::logic_error("d2_size_formula: negative size");
    return base - static_cast<std::uint64_t>(def);
}

std::uint64_t max_descendants(int n, int k) {
    if (k < 0 || n < k + 1)
        throw std::domain_error("max_descendants: need n >= k+1, k >= 0");
    std::uint64_t total = 0;
    const int m = n - k;
    for (int i = 0; i <= k && i <= m; ++i)
        total += numth::binom(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(i));
    return total;
}

int deletion_distance(const Word& u, const Word& v) {
    if (u.length() != v.length())
        throw std::domain_error("deletion_distance: words must have equal length");
    const int n = u.length();
    // Standard quadratic LCS over the two bit strings.
    std::vector<int> prev(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        const int ub = u.bit(i);
        for (int j = 1; j <= n; ++j) {
            if (ub == v.bit(j))
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return n - prev[static_cast<std::size_t>(n)];
}

ConfusabilityGraph::ConfusabilityGraph(int n) : n_(n) {
    if (n < 1 || n > max_n)
        throw std::domain_error("ConfusabilityGraph: n must be in 1.." +
                                std::to_string(max_n));
    nodes_ = std::uint32_t{1} << n;
    row_words_ = (nodes_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(nodes_) * row_words_, 0);
    degree_.assign(nodes_, 0);

    // Bucket every word under each of its first-order descendants; words
    // sharing a bucket are exactly the adjacent pairs.
    const std::uint32_t buckets = (n == 1) ? 1u : (std::uint32_t{1} << (n - 1));
    std::vector<std::vector<std::uint32_t>> parents(buckets);
    std::vector<std::uint64_t> ds;
    for (std::uint32_t w = 0; w < nodes_; ++w) {
        ds.clear();
        for (int p = 1; p <= n; ++p)
            ds.push_back(delete_bit(w, n, p));
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        for (std::uint64_t d : ds)
            parents[static_cast<std::uint32_t>(d)].push_back(w);
    }
    for (const auto& bucket : parents) {
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            for (std::size_t j = i + 1; j < bucket.size(); ++j) {
                const std::uint32_t a = bucket[i];
                const std::uint32_t b = bucket[j];
                std::uint64_t& ra = bits_[a * row_words_ + b / 64];
                if (!(ra >> (b % 64) & 1u)) {
                    ra |= std::uint64_t{1} << (b % 64);
                    bits_[b * row_words_ + a / 64] |= std::uint64_t{1} << (a % 64);
                    ++degree_[a];
                    ++degree_[b];
                }
            }
        }
    }
}

bool ConfusabilityGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
    return (bits_[u * row_words_ + v / 64] >> (v % 64)) & 1u;
}

int ConfusabilityGraph::path_distance(std::uint32_t from, std::uint32_t to) const {
    if (from >= nodes_ || to >= nodes_)
        throw std::domain_error("path_distance: node out of range");
    if (from == to)
        return 0;
    std::vector<int> dist(nodes_, -1);
    std::deque<std::uint32_t> queue;
    dist[from] = 0;
    queue.push_back(from);
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop_front();
        const std::uint64_t* r = row(u);
        for (std::uint32_t blk = 0; blk < row_words_; ++blk) {
            std::uint64_t bitsleft = r[blk];
            while (bitsleft) {
                const std::uint32_t v = blk * 64 + static_cast<std::uint32_t>(std::countr_zero(bitsleft));
                bitsleft &= bitsleft - 1;
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    if (v == to)
                        return dist[v];
                    queue.push_back(v);
                }
            }
        }
    }
    throw std::logic_error("path_distance: graph not connected");
}

ConfusabilityGraph build_confusability_graph(int n) { return ConfusabilityGraph(n); }

std::uint64_t count_words_with_runs(int n, int r) {
    if (n < 1 || r < 1 || r > n)
        throw std::domain_error("count_words_with_runs: need 1 <= r <= n");
    return 2 * numth::binom(static_cast<std::uint64_t>(n) - 1,
                            static_cast<std::uint64_t>(r) - 1);
}

bool is_subsequence(const Word& sub, const Word& sup) {
    if (sub.is_empty())
        return true;
    int i = 1;
    for (int j = 1; j <= sup.length() && i <= sub.length(); ++j)
        if (sup.bit(j) == sub.bit(i))
            ++i;
    return i > sub.length();
}

} // namespace vtc::words
