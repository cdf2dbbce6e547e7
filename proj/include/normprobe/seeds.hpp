#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace normprobe {

/// SplitMix64 finalizer. Used both as a mixer and as a stream step.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Stable 64-bit FNV-1a over the bytes of `text`.
std::uint64_t fnv1a64(std::string_view text) noexcept;

/// Per-key seed: splitmix64(run_seed ^ splitmix64(fnv1a64(key))).
///
/// A record's randomness depends only on the run seed and its key, never on
/// dispatch order, so resuming or raising concurrency cannot change the data.
std::uint64_t derive_seed(std::uint64_t run_seed, std::string_view key) noexcept;

/// Engine used for every draw in the harness.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Lowercase hex SHA-256 of `text`.
std::string sha256_hex(std::string_view text);

} // namespace normprobe
