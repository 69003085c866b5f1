#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace f2lin::stats {

// Per-thread instrumentation. row_adds counts row-level XOR additions (not
// copies); the matrix byte counters track live BitMatrix storage so tests can
// bound the auxiliary memory of the in-place algorithms.
struct Counters {
    std::uint64_t row_adds = 0;
    std::uint64_t matrix_bytes = 0;
    std::uint64_t matrix_bytes_peak = 0;
    // optional log of (ncols, cut) pairs from the recursive decomposition
    std::vector<std::pair<std::size_t, std::size_t>>* cut_log = nullptr;
    bool hybrid_switched = false;
    std::size_t hybrid_switch_row = 0;
    std::size_t hybrid_switch_col = 0;
};

inline Counters& counters() {
    thread_local Counters c;
    return c;
}

// Resets counts and detaches any cut log. The live-bytes counter is kept (it
// tracks matrices that are still allocated); the peak restarts from it.
inline void reset() {
    Counters& c = counters();
    c.row_adds = 0;
    c.matrix_bytes_peak = c.matrix_bytes;
    c.cut_log = nullptr;
    c.hybrid_switched = false;
    c.hybrid_switch_row = c.hybrid_switch_col = 0;
}

inline void count_row_add() { ++counters().row_adds; }

inline void on_alloc(std::size_t bytes) {
    Counters& c = counters();
    c.matrix_bytes += bytes;
    if (c.matrix_bytes > c.matrix_bytes_peak) c.matrix_bytes_peak = c.matrix_bytes;
}

inline void on_free(std::size_t bytes) { counters().matrix_bytes -= bytes; }

} // namespace f2lin::stats
