#include "vtc/shiftreg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "vtc/numth.hpp"

namespace vtc::shiftreg {

namespace {

void check_n(int n, int cap, const char* fn) {
    if (n < 1 || n > cap)
        throw std::domain_error(std::string(fn) + ": n must be in 1.." + std::to_string(cap));
}

std::uint64_t exact_divide(__int128 sum, __int128 div, const char* fn) {
    if (sum % div != 0)
        throw std::logic_error(std::string(fn) + ": non-exact division");
    return static_cast<std::uint64_t>(sum / div);
}

int feedback(const RegisterState& s, RegisterKind kind) {
    const int x1 = static_cast<int>((s.cells >> (s.n - 1)) & 1u);
    const int parity = std::popcount(s.cells) & 1;
    switch (kind) {
    case RegisterKind::pcr: return x1;
    case RegisterKind::ccr: return 1 ^ x1;
    case RegisterKind::psr: return parity;
    case RegisterKind::csr: return 1 ^ parity;
    }
    throw std::logic_error("feedback: bad kind");
}

} // namespace

const char* kind_name(RegisterKind kind) {
    switch (kind) {
    case RegisterKind::pcr: return "PCR";
    case RegisterKind::ccr: return "CCR";
    case RegisterKind::psr: return "PSR";
    case RegisterKind::csr: return "CSR";
    }
    return "?";
}

StepResult step(const RegisterState& state, RegisterKind kind) {
    check_n(state.n, 63, "step");
    const int out = static_cast<int>((state.cells >> (state.n - 1)) & 1u);
    const std::uint64_t mask = (std::uint64_t{1} << state.n) - 1;
    const std::uint64_t next =
        ((state.cells << 1) & mask) | static_cast<std::uint64_t>(feedback(state, kind));
    return {out, {state.n, next}};
}

CycleCensus cycle_census(int n, RegisterKind kind) {
    if (n < 1 || n > max_census_n)
        throw capacity_error("cycle_census: n capped at " + std::to_string(max_census_n));
    CycleCensus census;
    census.kind = kind;
    census.n = n;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start])
            continue;
        std::uint64_t period = 0;
        RegisterState s{n, start};
        do {
            visited[s.cells] = true;
            s = step(s, kind).state;
            ++period;
        } while (s.cells != start);
        ++census.cycle_count;
        ++census.cycle_lengths[period];
    }
    return census;
}

std::uint64_t z_formula(int n) {
    check_n(n, 62, "z_formula");
    __int128 sum = 0;
    for (std::uint64_t d : numth::divisors(static_cast<std::uint64_t>(n)))
        sum += static_cast<__int128>(numth::euler_phi(d))
               * (static_cast<__int128>(1) << (static_cast<std::uint64_t>(n) / d));
    return exact_divide(sum, n, "z_formula");
}

std::uint64_t zstar_formula(int n) {
    check_n(n, 62, "zstar_formula");
    __int128 sum = 0;
    for (std::uint64_t d : numth::odd_divisors(static_cast<std::uint64_t>(n)))
        sum += static_cast<__int128>(numth::euler_phi(d))
               * (static_cast<__int128>(1) << (static_cast<std::uint64_t>(n) / d));
    return exact_divide(sum, 2 * static_cast<__int128>(n), "zstar_formula");
}

std::uint64_t s_formula(int n) {
    check_n(n, 61, "s_formula");
    const std::uint64_t m = static_cast<std::uint64_t>(n) + 1;
    __int128 sum = 0;
    for (std::uint64_t d : numth::divisors(m))
        sum += static_cast<__int128>(numth::euler_phi(2 * d))
               * (static_cast<__int128>(1) << (m / d));
    return exact_divide(sum, 2 * static_cast<__int128>(m), "s_formula");
}

std::uint64_t sstar_formula(int n) {
    check_n(n, 61, "sstar_formula");
    return zstar_formula(n + 1);
}

std::uint64_t brouwer_formula(int n) {
    check_n(n, 62, "brouwer_formula");
    // sum over d|n with n/d odd of (2^{d-1}/d) * sum_{e | n/d} mu(e)/e,
    // accumulated as an exact fraction.
    __int128 num = 0;
    __int128 den = 1;
    auto add = [&](__int128 p, __int128 q) {
        num = num * q + p * den;
        den *= q;
    };
    for (std::uint64_t d : numth::divisors(static_cast<std::uint64_t>(n))) {
        const std::uint64_t m = static_cast<std::uint64_t>(n) / d;
        if (m % 2 == 0)
            continue;
        __int128 inner_num = 0;
        __int128 inner_den = 1;
        for (std::uint64_t e : numth::divisors(m)) {
            // inner += mu(e)/e
            inner_num = inner_num * static_cast<__int128>(e) +
                        static_cast<__int128>(numth::moebius(e)) * inner_den;
            inner_den *= static_cast<__int128>(e);
        }
        // term = 2^{d-1}/d * inner
        const __int128 term_num = (static_cast<__int128>(1) << (d - 1)) * inner_num;
        const __int128 term_den = static_cast<__int128>(d) * inner_den;
        add(term_num, term_den);
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num % den != 0)
        throw std::logic_error("brouwer_formula: sum is not an integer");
    const __int128 q = num / den;
    if (q < 0)
        throw std::logic_error("brouwer_formula: negative count");
    return static_cast<std::uint64_t>(q);
}

std::string OutputCycle::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits)
        s.push_back(static_cast<char>('0' + b));
    return s;
}

OutputCycle canonical_cycle(const std::vector<int>& one_period) {
    if (one_period.empty())
        throw std::domain_error("canonical_cycle: empty period");
    for (int b : one_period)
        if (b != 0 && b != 1)
            throw std::domain_error("canonical_cycle: bits must be 0/1");

    // Reduce to the fundamental period first.
    const int len = static_cast<int>(one_period.size());
    int period = len;
    for (int p = 1; p < len; ++p) {
        if (len % p != 0)
            continue;
        bool ok = true;
        for (int i = p; i < len && ok; ++i)
            ok = one_period[static_cast<std::size_t>(i)] ==
                 one_period[static_cast<std::size_t>(i - p)];
        if (ok) {
            period = p;
            break;
        }
    }
    std::vector<int> base(one_period.begin(), one_period.begin() + period);

    // Lexicographically least rotation.
    std::vector<int> best = base;
    std::vector<int> rot = base;
    for (int r = 1; r < period; ++r) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best)
            best = rot;
    }
    return {period, std::move(best)};
}

std::vector<OutputCycle> output_cycles(int n, RegisterKind kind) {
    if (n < 1 || n > max_census_n)
        throw capacity_error("output_cycles: n capped at " + std::to_string(max_census_n));
    std::vector<OutputCycle> cycles;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> visited(total, false);
    std::vector<int> outputs;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start])
            continue;
        outputs.clear();
        RegisterState s{n, start};
        do {
            visited[s.cells] = true;
            const StepResult r = step(s, kind);
            outputs.push_back(r.output);
            s = r.state;
        } while (s.cells != start);
        cycles.push_back(canonical_cycle(outputs));
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

void validate_cycle(const OutputCycle& cycle, int n, RegisterKind kind) {
    check_n(n, max_census_n, "validate_cycle");
    const int p = cycle.period;
    if (p < 1 || static_cast<int>(cycle.bits.size()) != p)
        throw std::domain_error("validate_cycle: malformed cycle");
    auto bit_at = [&](int i) {
        return static_cast<std::uint64_t>(cycle.bits[static_cast<std::size_t>(i % p)]);
    };
    // Load the first n outputs as the cells and walk one full period.
    RegisterState s{n, 0};
    for (int i = 0; i < n; ++i)
        s.cells = (s.cells << 1) | bit_at(i);
    const std::uint64_t start = s.cells;
    for (int i = 0; i < p; ++i) {
        const StepResult r = step(s, kind);
        if (r.output != cycle.bits[static_cast<std::size_t>(i)])
            throw std::domain_error("validate_cycle: not closed under the register dynamics");
        s = r.state;
    }
    if (s.cells != start)
        throw std::domain_error("validate_cycle: walk does not return to its start state");
    if (canonical_cycle(cycle.bits) != cycle)
        throw std::domain_error("validate_cycle: cycle is not in canonical form");
}

OutputCycle ccr_to_csr(const OutputCycle& ccr_cycle, int n) {
    if (n < 2)
        throw std::domain_error("ccr_to_csr: need n >= 2");
    validate_cycle(ccr_cycle, n, RegisterKind::ccr);
    const int p = ccr_cycle.period;
    std::vector<int> sums(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i)
        sums[static_cast<std::size_t>(i)] =
            ccr_cycle.bits[static_cast<std::size_t>(i)] ^
            ccr_cycle.bits[static_cast<std::size_t>((i + 1) % p)];
    OutputCycle out = canonical_cycle(sums);
    validate_cycle(out, n - 1, RegisterKind::csr);
    return out;
}

OutputCycle csr_to_ccr(const OutputCycle& csr_cycle, int n) {
    if (n < 2)
        throw std::domain_error("csr_to_ccr: need n >= 2");
    validate_cycle(csr_cycle, n - 1, RegisterKind::csr);
    const int q = csr_cycle.period;
    int period_sum = 0;
    for (int b : csr_cycle.bits)
        period_sum ^= b;
    if (period_sum != 1)
        throw std::domain_error("csr_to_ccr: period sum is even, not a CSR cycle");
    // Prefix sums from a fixed starting 0; one CSR period flips the running
    // bit, so two periods close the CCR cycle.
    std::vector<int> prefix;
    prefix.reserve(2 * static_cast<std::size_t>(q));
    int bit = 0;
    for (int i = 0; i < 2 * q; ++i) {
        prefix.push_back(bit);
        bit ^= csr_cycle.bits[static_cast<std::size_t>(i % q)];
    }
    OutputCycle out = canonical_cycle(prefix);
    validate_cycle(out, n, RegisterKind::ccr);
    return out;
}

NecklaceCounts necklace_counts(int m) {
    if (m < 1 || m > max_necklace_m)
        throw capacity_error("necklace_counts: m capped at " + std::to_string(max_necklace_m));
    NecklaceCounts counts;
    const std::uint32_t total = std::uint32_t{1} << m;
    const std::uint32_t mask = total - 1;
    auto rotate_once = [&](std::uint32_t s) {
        return ((s >> 1) | (s << (m - 1))) & mask;
    };
    for (std::uint32_t s = 0; s < total; ++s) {
        bool least_rotation = true;
        bool least_with_complement = true;
        bool primitive = true;
        std::uint32_t r = s;
        for (int i = 1; i <= m; ++i) {
            r = rotate_once(r);
            if (i < m) {
                if (r < s)
                    least_rotation = false;
                if (r == s)
                    primitive = false;
            }
            if ((r ^ mask) < s)
                least_with_complement = false;
        }
        if (least_rotation)
            ++counts.rotation_only;
        if (least_rotation && least_with_complement && primitive)
            ++counts.primitive_rotation_complement;
    }
    return counts;
}

} // namespace vtc::shiftreg
