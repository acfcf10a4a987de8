#include "vtc/vt.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "vtc/numth.hpp"

namespace vtc::vt {

using words::Word;

VTParams::VTParams(int n_, int a_) : n(n_) {
    if (n < 1 || n > Word::max_length)
        throw std::domain_error("VTParams: n must be in 1..62");
    const int m = n + 1;
    a = ((a_ % m) + m) % m;
}

bool Code::contains(const Word& w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

Code Code::from_words(std::vector<Word> ws) {
    Code c;
    c.family = CodeFamily::explicit_set;
    if (ws.empty())
        throw std::domain_error("Code: empty word set");
    c.n = ws.front().length();
    for (const Word& w : ws)
        if (w.length() != c.n)
            throw std::domain_error("Code: mixed word lengths");
    std::sort(ws.begin(), ws.end());
    if (std::adjacent_find(ws.begin(), ws.end()) != ws.end())
        throw std::domain_error("Code: duplicate words");
    c.words = std::move(ws);
    return c;
}

std::uint64_t vt_checksum_raw(const Word& w) {
    std::uint64_t sum = 0;
    std::uint64_t b = w.packed();
    const int n = w.length();
    while (b) {
        const int j = std::countr_zero(b);
        b &= b - 1;
        sum += static_cast<std::uint64_t>(n - j); // bit j holds x_{n-j}
    }
    return sum;
}

int vt_checksum(const Word& w) {
    return static_cast<int>(vt_checksum_raw(w) % static_cast<std::uint64_t>(w.length() + 1));
}

Code vt_code(const VTParams& params) {
    if (params.n > max_enumeration_n)
        throw capacity_error("vt_code: enumeration capped at n <= " +
                             std::to_string(max_enumeration_n) +
                             "; use vt_size_formula for sizes");
    Code c;
    c.n = params.n;
    c.family = CodeFamily::vt;
    c.params = params;
    const std::uint64_t total = std::uint64_t{1} << params.n;
    for (std::uint64_t v = 0; v < total; ++v) {
        const Word w(params.n, v);
        if (vt_checksum(w) == params.a)
            c.words.push_back(w);
    }
    return c;
}

namespace {

// Evaluates sum(c_d(a) * 2^{m/d}) / (2m) over the odd divisors d of m,
// where m = n+1. Intermediate sums can reach 2m * 2^62, hence 128 bits.
std::uint64_t residue_class_count(int m, int a) {
    __int128 sum = 0;
    for (std::uint64_t d : numth::odd_divisors(static_cast<std::uint64_t>(m))) {
        const std::int64_t cd = numth::ramanujan_sum(d, static_cast<std::uint64_t>(a));
        sum += static_cast<__int128>(cd) *
               (static_cast<__int128>(1) << (static_cast<std::uint64_t>(m) / d));
    }
    const __int128 div = 2 * static_cast<__int128>(m);
    if (sum % div != 0)
        throw std::logic_error("vt_size_formula: non-exact division");
    const __int128 q = sum / div;
    if (q < 0)
        throw std::logic_error("vt_size_formula: negative count");
    return static_cast<std::uint64_t>(q);
}

} // namespace

std::uint64_t vt_size_formula(int n, int a) {
    if (n < 1 || n > Word::max_length)
        throw std::domain_error("vt_size_formula: n must be in 1..62");
    const int m = n + 1;
    return residue_class_count(m, ((a % m) + m) % m);
}

std::uint64_t vt0_size(int n) { return vt_size_formula(n, 0); }

std::uint64_t vt1_size(int n) { return vt_size_formula(n, 1); }

DecodeOutcome decode_single_deletion(const Word& received, const VTParams& params) {
    DecodeOutcome out;
    if (received.length() != params.n - 1) {
        out.failure = DecodeFailure::invalid_length;
        return out;
    }
    const int n = params.n;
    const int m = n + 1;
    const int w = received.weight();
    const int s = static_cast<int>(vt_checksum_raw(received) % static_cast<std::uint64_t>(m));
    const int deficit = ((params.a - s) % m + m) % m;

    Word restored = [&] {
        if (deficit <= w) {
            // A 0 was deleted with `deficit` ones to its right: insert just
            // left of the deficit-th one counting from the right.
            int pos = n; // insert at the end when deficit == 0
            int ones = 0;
            for (int i = received.length(); i >= 1; --i) {
                if (received.bit(i) == 1 && ++ones == deficit) {
                    pos = i;
                    break;
                }
            }
            return received.with_inserted(pos, 0);
        }
        // A 1 was deleted with `zeros_left` zeros to its left: insert just
        // right of that many leading zeros.
        const int zeros_left = deficit - 1 - w;
        int pos = 1;
        int zeros = 0;
        for (int i = 1; i <= received.length(); ++i) {
            if (received.bit(i) == 0 && ++zeros == zeros_left) {
                pos = i + 1;
                break;
            }
        }
        return received.with_inserted(pos, 1);
    }();

    if (vt_checksum(restored) != params.a) {
        out.failure = DecodeFailure::not_a_descendant;
        return out;
    }
    out.recovered = restored;
    return out;
}

LinearVTParams linear_params(int k) {
    if (k < 1)
        throw std::domain_error("linear_params: k must be >= 1");
    // c = ceil(sqrt(2k + 9/4) + 1/2), i.e. the least c with (2c-1)^2 >= 8k+9.
    const std::uint64_t target = 8 * static_cast<std::uint64_t>(k) + 9;
    int c = 1;
    while ((2 * static_cast<std::uint64_t>(c) - 1) * (2 * static_cast<std::uint64_t>(c) - 1) < target)
        ++c;
    LinearVTParams p{k, c, k + c};
    if (numth::binom(static_cast<std::uint64_t>(p.c) + 1, 2) <
        static_cast<std::uint64_t>(p.n) + 1)
        throw std::logic_error("linear_params: check positions cannot cover all residues");
    return p;
}

LinearEncoder::LinearEncoder(int k) : params_(linear_params(k)), modulus_(params_.n + 1) {
    if (params_.n > Word::max_length)
        throw capacity_error("LinearEncoder: codeword length exceeds " +
                             std::to_string(Word::max_length));
    // reachable_[j][r]: some subset of check positions k+1+j .. n sums to r.
    const int c = params_.c;
    reachable_.assign(static_cast<std::size_t>(c + 1) * modulus_, 0);
    auto at = [&](int j, int r) -> char& {
        return reachable_[static_cast<std::size_t>(j) * modulus_ + r];
    };
    at(c, 0) = 1;
    for (int j = c - 1; j >= 0; --j) {
        const int pos = params_.k + 1 + j;
        for (int r = 0; r < modulus_; ++r)
            at(j, r) = at(j + 1, r) || at(j + 1, ((r - pos) % modulus_ + modulus_) % modulus_);
    }
}

Word LinearEncoder::encode(const Word& info) const {
    if (info.length() != params_.k)
        throw std::domain_error("LinearEncoder::encode: info length != k");
    const int info_residue =
        static_cast<int>(vt_checksum_raw(info) % static_cast<std::uint64_t>(modulus_));
    int need = (modulus_ - info_residue) % modulus_;

    std::uint64_t bits = info.packed() << params_.c;
    auto at = [&](int j, int r) -> char {
        return reachable_[static_cast<std::size_t>(j) * modulus_ + r];
    };
    for (int j = 0; j < params_.c; ++j) {
        const int pos = params_.k + 1 + j;
        if (at(j + 1, need))
            continue; // leave this check bit cleared
        bits |= std::uint64_t{1} << (params_.n - pos);
        need = ((need - pos) % modulus_ + modulus_) % modulus_;
    }
    if (need != 0)
        throw std::logic_error("LinearEncoder::encode: residue not reachable");
    return Word(params_.n, bits);
}

Word linear_encode(const Word& info) { return LinearEncoder(info.length()).encode(info); }

bool is_linear(const Code& code) {
    const Word zero = Word::zeros(code.n);
    if (!code.contains(zero))
        return false;
    std::unordered_set<std::uint64_t> present;
    present.reserve(code.words.size() * 2);
    for (const Word& w : code.words)
        present.insert(w.packed());
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            if (!present.count(code.words[i].packed() ^ code.words[j].packed()))
                return false;
    return true;
}

void write_code_table(std::ostream& out, const Code& code) {
    switch (code.family) {
    case CodeFamily::vt:
        out << "# VT n=" << code.n << " a=" << code.params->a << " size=" << code.size() << '\n';
        break;
    case CodeFamily::vt_linear:
        out << "# VT-linear n=" << code.n << " k=" << code.linear->k << " size=" << code.size()
            << '\n';
        break;
    case CodeFamily::explicit_set:
        out << "# code n=" << code.n << " size=" << code.size() << '\n';
        break;
    }
    for (const Word& w : code.words)
        out << w.to_string() << '\n';
}

Code read_code_table(std::istream& in) {
    std::vector<Word> ws;
    std::optional<VTParams> header_params;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tag;
            hs >> tag;
            if (tag == "VT") {
                int n = 0, a = -1;
                std::string field;
                while (hs >> field) {
                    if (field.rfind("n=", 0) == 0)
                        n = std::stoi(field.substr(2));
                    else if (field.rfind("a=", 0) == 0)
                        a = std::stoi(field.substr(2));
                }
                if (n > 0 && a >= 0)
                    header_params = VTParams(n, a);
            }
            continue;
        }
        ws.push_back(Word::parse(line));
    }
    Code c = Code::from_words(std::move(ws));
    if (header_params && header_params->n == c.n) {
        c.family = CodeFamily::vt;
        c.params = header_params;
    }
    return c;
}

} // namespace vtc::vt
