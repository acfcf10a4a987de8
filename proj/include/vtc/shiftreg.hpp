#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vtc/common.hpp"

namespace vtc::shiftreg {

// The four feedback rules. With cells (x1, ..., xn), one step outputs x1,
// shifts left, and feeds back (mod 2):
//   PCR: x1          CCR: 1 + x1
//   PSR: x1+...+xn   CSR: 1 + x1+...+xn
enum class RegisterKind { pcr, ccr, psr, csr };

const char* kind_name(RegisterKind kind);

struct RegisterState {
    int n;
    std::uint64_t cells; // x1 at bit n-1, same packing as words::Word
};

struct StepResult {
    int output;
    RegisterState state;
};

// Every rule is invertible, so iterating step() partitions the state space
// into cycles.
StepResult step(const RegisterState& state, RegisterKind kind);

struct CycleCensus {
    RegisterKind kind;
    int n = 0;
    std::uint64_t cycle_count = 0;
    std::map<std::uint64_t, std::uint64_t> cycle_lengths; // period -> multiplicity
};

// Exact census by full state-space traversal; n <= 20.
CycleCensus cycle_census(int n, RegisterKind kind);
constexpr int max_census_n = 20;

// Closed forms for the four counts. Each divisor sum divides exactly; a
// non-exact division throws std::logic_error.
std::uint64_t z_formula(int n);     // PCR: (1/n) sum_{d|n} phi(d) 2^{n/d}
std::uint64_t zstar_formula(int n); // CCR: (1/2n) sum_{odd d|n} phi(d) 2^{n/d}
std::uint64_t s_formula(int n);     // PSR: (1/(2(n+1))) sum_{d|n+1} phi(2d) 2^{(n+1)/d}
std::uint64_t sstar_formula(int n); // CSR: zstar_formula(n+1)

// Tournament-count sum evaluated in exact rational arithmetic and asserted
// integral; numerically equal to zstar_formula(n).
std::uint64_t brouwer_formula(int n);

// One period of a register's output stream, stored as the lexicographically
// least rotation of its fundamental period.
struct OutputCycle {
    int period = 0;
    std::vector<int> bits;

    friend bool operator==(const OutputCycle&, const OutputCycle&) = default;
    friend auto operator<=>(const OutputCycle&, const OutputCycle&) = default;
    std::string to_string() const;
};

OutputCycle canonical_cycle(const std::vector<int>& one_period);

// All distinct output cycles of the register, sorted.
std::vector<OutputCycle> output_cycles(int n, RegisterKind kind);

// Throws std::domain_error unless the cycle is closed under the given
// register's dynamics.
void validate_cycle(const OutputCycle& cycle, int n, RegisterKind kind);

// Sums of adjacent output pairs turn one CCR(n) cycle into one CSR(n-1)
// cycle; the induced map on whole censuses is a bijection. Requires n >= 2.
OutputCycle ccr_to_csr(const OutputCycle& ccr_cycle, int n);

// Inverse map: prefix sums starting from a fixed 0 bit.
OutputCycle csr_to_ccr(const OutputCycle& csr_cycle, int n);

struct NecklaceCounts {
    std::uint64_t rotation_only = 0;                  // orbits under rotation
    std::uint64_t primitive_rotation_complement = 0;  // primitive period m, rotation + color swap
};

// Brute-force canonical-form counts over all 2^m binary strings; m <= 24.
NecklaceCounts necklace_counts(int m);
constexpr int max_necklace_m = 24;

} // namespace vtc::shiftreg
