#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "vtc/common.hpp"
#include "vtc/words.hpp"

namespace vtc::vt {

// Parameters of VT_a(n): all length-n words with sum(i * x_i) == a (mod n+1).
// a is normalized into 0..n on construction.
struct VTParams {
    int n;
    int a;
    VTParams(int n_, int a_);
};

// Parameters of the systematic linear code with k information bits and
// c = n - k check bits, c minimal with binom(c+1, 2) >= n+1.
struct LinearVTParams {
    int k;
    int c;
    int n;
};

enum class CodeFamily { vt, vt_linear, explicit_set };

// An explicit set of equal-length words plus construction metadata.
struct Code {
    int n = 0;
    CodeFamily family = CodeFamily::explicit_set;
    std::optional<VTParams> params;        // engaged for family == vt
    std::optional<LinearVTParams> linear;  // engaged for family == vt_linear
    std::vector<words::Word> words;        // ascending by packed value, no duplicates

    std::size_t size() const { return words.size(); }
    bool contains(const words::Word& w) const;

    // Validates equal lengths, sorts and rejects duplicates.
    static Code from_words(std::vector<words::Word> ws);
};

enum class DecodeFailure { none, invalid_length, not_a_descendant };

struct DecodeOutcome {
    std::optional<words::Word> recovered;
    DecodeFailure failure = DecodeFailure::none;
    bool ok() const { return recovered.has_value(); }
};

// Raw positional checksum sum(i * x_i), evaluated as an ordinary integer.
std::uint64_t vt_checksum_raw(const words::Word& w);

// The checksum residue mod (n+1).
int vt_checksum(const words::Word& w);

// Full enumeration of VT_a(n); capped at n <= 24 (use vt_size_formula for
// sizes beyond that).
Code vt_code(const VTParams& params);
constexpr int max_enumeration_n = 24;

// |VT_a(n)| in closed form. Exact; a non-exact division throws
// std::logic_error since every divisor sum here is an integer multiple.
std::uint64_t vt_size_formula(int n, int a);
std::uint64_t vt0_size(int n);
std::uint64_t vt1_size(int n);

// Recover the transmitted codeword of VT_a(n) from a word with one bit
// deleted. Inputs of the wrong length fail with invalid_length; a
// reconstruction that misses the checksum (impossible for genuine
// single-deletion inputs) fails with not_a_descendant.
DecodeOutcome decode_single_deletion(const words::Word& received, const VTParams& params);

LinearVTParams linear_params(int k);

// Precomputes the residue-reachability table for one k so that repeated
// encodes are cheap.
class LinearEncoder {
public:
    explicit LinearEncoder(int k);
    const LinearVTParams& params() const { return params_; }

    // info supplies x_1..x_k; check bits are the lexicographically smallest
    // assignment (positions ascending, cleared bit preferred) reaching
    // checksum 0 mod (n+1). Output length n must stay within Word::max_length.
    words::Word encode(const words::Word& info) const;

private:
    LinearVTParams params_;
    std::vector<char> reachable_; // [pos-(k+1)][residue], positions k+1..n+1
    int modulus_;
};

words::Word linear_encode(const words::Word& info);

// True iff the code contains the zero word and is closed under bitwise sum.
bool is_linear(const Code& code);

// Code-table text format: a '#' header line, then one word per line in
// ascending packed order.
void write_code_table(std::ostream& out, const Code& code);
Code read_code_table(std::istream& in);

} // namespace vtc::vt
