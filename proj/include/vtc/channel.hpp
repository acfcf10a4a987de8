#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vtc/vt.hpp"
#include "vtc/words.hpp"

namespace vtc::channel {

// SplitMix64: the fixed generator behind every randomized draw here. The
// algorithm (constants and all) is part of the transcript contract, so the
// same seed reproduces the same simulation anywhere it is reimplemented.
// Any 64-bit seed is valid, including 0.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

enum class DeletionMode {
    always_one, // exactly one deletion per block, position uniform
    per_bit     // each bit independently deleted with probability p
};

struct ChannelConfig {
    int k = 8;                                    // info bits per block
    DeletionMode mode = DeletionMode::always_one;
    double p = 0.0;                               // per-bit deletion probability
    std::uint64_t seed = 0;
    std::uint64_t blocks = 1;
    bool keep_records = false;
};

struct TransmissionRecord {
    std::uint64_t index = 0;
    words::Word sent;
    std::vector<int> deleted_positions; // ascending; empty for an intact block
    words::Word received;
    vt::DecodeOutcome decoded;          // not attempted for multi-deletion blocks
    bool ok = false;

    TransmissionRecord() : sent(words::Word::empty()), received(words::Word::empty()) {}

    // Tab-separated fields in declaration order; '-' for an empty position list.
    std::string to_line() const;
};

struct SimulationSummary {
    ChannelConfig config;
    int n = 0; // codeword length for the configured k
    std::uint64_t blocks = 0;
    std::uint64_t deletions_applied = 0;
    std::uint64_t recovered = 0;
    std::uint64_t failed = 0; // decode mismatches among blocks with <= 1 deletion
    std::uint64_t multi = 0;  // blocks with >= 2 deletions, uncorrectable by design
    std::vector<TransmissionRecord> records; // only when keep_records

    std::string porcelain() const; // "blocks=.. deleted=.. recovered=.. failed=.. multi=.."
};

// Encode random payloads into VT-check blocks, push them through the
// deletion channel, decode, and tally exact recoveries. Blocks with zero or
// one deletion must always come back exactly; any failure is kept as data.
SimulationSummary run_simulation(const ChannelConfig& config);

} // namespace vtc::channel
