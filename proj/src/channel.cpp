#include "vtc/channel.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vtc::channel {

using words::Word;

std::string TransmissionRecord::to_line() const {
    std::ostringstream out;
    out << index << '\t' << sent.to_string() << '\t';
    if (deleted_positions.empty()) {
        out << '-';
    } else {
        for (std::size_t i = 0; i < deleted_positions.size(); ++i)
            out << (i ? "," : "") << deleted_positions[i];
    }
    out << '\t' << received.to_string() << '\t';
    if (decoded.ok())
        out << decoded.recovered->to_string();
    else if (decoded.failure == vt::DecodeFailure::invalid_length)
        out << "failure:invalid-length";
    else if (decoded.failure == vt::DecodeFailure::not_a_descendant)
        out << "failure:not-a-descendant";
    else
        out << "skipped";
    out << '\t' << (ok ? "ok" : "lost");
    return out.str();
}

std::string SimulationSummary::porcelain() const {
    std::ostringstream out;
    out << "blocks=" << blocks << " deleted=" << deletions_applied << " recovered=" << recovered
        << " failed=" << failed << " multi=" << multi;
    return out.str();
}

SimulationSummary run_simulation(const ChannelConfig& config) {
    if (config.k < 1)
        throw std::domain_error("run_simulation: k must be >= 1");
    if (config.blocks < 1)
        throw std::domain_error("run_simulation: need at least one block");
    if (config.p < 0.0 || config.p > 1.0)
        throw std::domain_error("run_simulation: p must be in [0, 1]");

    const vt::LinearEncoder encoder(config.k);
    const int n = encoder.params().n;
    const int k = config.k;
    if (k > 62)
        throw capacity_error("run_simulation: payload wider than one PRNG draw");
    const vt::VTParams decode_params(n, 0);

    // Per-bit mode compares one draw per position against p scaled to the
    // full 64-bit range.
    const bool always_delete = config.mode == DeletionMode::per_bit && config.p >= 1.0;
    const std::uint64_t threshold =
        always_delete ? UINT64_MAX
                      : static_cast<std::uint64_t>(std::ldexp(config.p, 64));

    SimulationSummary summary;
    summary.config = config;
    summary.n = n;
    summary.blocks = config.blocks;
    if (config.keep_records)
        summary.records.reserve(config.blocks);

    SplitMix64 rng(config.seed);
    for (std::uint64_t b = 0; b < config.blocks; ++b) {
        // Draw order per block: payload first, then the deletion draws.
        const std::uint64_t payload = rng.next() & ((std::uint64_t{1} << k) - 1);
        const Word info(k, payload);
        const Word sent = encoder.encode(info);

        std::vector<int> positions;
        if (config.mode == DeletionMode::always_one) {
            positions.push_back(1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n)));
        } else {
            for (int i = 1; i <= n; ++i) {
                const std::uint64_t draw = rng.next();
                if (always_delete || (threshold > 0 && draw < threshold))
                    positions.push_back(i);
            }
        }

        Word received = sent;
        // Delete from the right so earlier positions stay valid.
        for (auto it = positions.rbegin(); it != positions.rend(); ++it)
            received = received.with_deleted(*it);

        TransmissionRecord rec;
        rec.index = b;
        rec.sent = sent;
        rec.deleted_positions = positions;
        rec.received = received;
        summary.deletions_applied += positions.size();

        if (positions.size() >= 2) {
            ++summary.multi;
            rec.ok = false;
        } else {
            if (positions.empty()) {
                rec.decoded.recovered = received;
            } else {
                rec.decoded = vt::decode_single_deletion(received, decode_params);
            }
            rec.ok = rec.decoded.ok() && *rec.decoded.recovered == sent;
            if (rec.ok)
                ++summary.recovered;
            else
                ++summary.failed;
        }
        if (config.keep_records)
            summary.records.push_back(std::move(rec));
    }
    return summary;
}

} // namespace vtc::channel
