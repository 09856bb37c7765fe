#pragma once

#include <cstdint>

namespace metasir::rng {

/// Counter-based stream: each output is a bit-mix of a Weyl counter, and the
/// counter start is derived from (master_seed, stream_index). Streams are
/// therefore reproducible independently of scheduling or thread count.
class Stream {
public:
    Stream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    /// uniform in [0,1)
    double next_unit();
    /// Poisson sample; inversion for small means, transformed rejection
    /// (PTRD) for large ones.
    std::uint64_t poisson(double mean);

private:
    std::uint64_t state_;
};

}  // namespace metasir::rng
