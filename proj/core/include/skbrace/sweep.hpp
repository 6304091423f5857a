#ifndef SKBRACE_SWEEP_HPP_
#define SKBRACE_SWEEP_HPP_

#include <algorithm>  // for min
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <optional>   // for optional
#include <thread>     // for jthread
#include <vector>     // for vector

namespace skb {

  //! Controls the exhaustive/sampled verification sweeps.
  struct SweepOptions {
    //! Worker threads; 0 means default_threads().
    unsigned threads = 0;
    //! Seed for sampled sweeps.
    std::uint64_t seed = 0x5eed'b4ac'e5ULL;
    //! Carriers up to this order are checked over every triple.
    std::size_t exhaustive_cap = 256;
    //! Number of random triples checked above the cap.
    std::size_t samples = 1'000'000;
    //! Force sampling even below the cap.
    bool force_sampling = false;

    bool exhaustive_for(std::size_t order) const noexcept {
      return !force_sampling && order <= exhaustive_cap;
    }
  };

  //! Thread count taken from SKBRACE_THREADS, else the hardware concurrency.
  unsigned default_threads();

  //! Process-wide defaults used by operations that are not handed explicit
  //! options (the CLI sets these from its global flags).
  SweepOptions& default_sweep();

  namespace detail {
    // Scans [0, n) in contiguous chunks, one per worker, and returns the
    // result of fn for the smallest index at which fn yields a value.  The
    // answer does not depend on the number of workers.
    template <typename T, typename F>
    std::optional<T> find_first(std::size_t n, unsigned threads, F const& fn) {
      if (threads == 0) {
        threads = default_threads();
      }
      threads = static_cast<unsigned>(
          std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
      if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          if (auto r = fn(i)) {
            return r;
          }
        }
        return std::nullopt;
      }
      std::vector<std::optional<T>> hits(threads);
      std::size_t const             chunk = (n + threads - 1) / threads;
      {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
          workers.emplace_back([&, w] {
            std::size_t const lo = w * chunk;
            std::size_t const hi = std::min(n, lo + chunk);
            for (std::size_t i = lo; i < hi; ++i) {
              if (auto r = fn(i)) {
                hits[w] = std::move(r);
                return;
              }
            }
          });
        }
      }
      for (auto& h : hits) {
        if (h) {
          return h;
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

}  // namespace skb

#endif  // SKBRACE_SWEEP_HPP_
