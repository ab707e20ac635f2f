#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace goalplace {

/// Bad or inconsistent input data (files, flags, mismatched universes).
/// The CLI maps this to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical procedure failed (divergence, non-convergence, undefined
/// statistic). The CLI maps this to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// splitmix64 step; used everywhere a seed stream has to be split.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives an independent child seed from (master, stream). All components
/// that consume randomness take their seed from this function so that one
/// top-level --seed reproduces every run.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Resolves a requested thread count: 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

/// Runs fn(begin, end) over a static partition of [0, n) on `threads`
/// workers. Chunks are contiguous and assigned by index, so any writer that
/// only touches its own slots is deterministic regardless of thread count.
void parallel_chunks(std::size_t n, unsigned threads,
                     const std::function<void(std::size_t, std::size_t)>& fn);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex chars.
/// Used in run manifests to record which inputs produced an output.
std::string file_digest(const std::string& path);

}  // namespace goalplace
