#pragma once

#include <string>
#include <vector>

#include "unison/topology.hpp"

namespace unison {

/// Nonempty word over V whose consecutive letters are equal or adjacent.
using Walk = std::vector<Process>;

bool is_walk(const Graph& g, const Walk& m);

/// No process repeats.
bool is_simple(const Walk& m);

/// Repetitions only as consecutive runs ("aab" yes, "aba" no).
bool is_elementary(const Walk& m);

/// Length >= 1 with equal endpoints. Length-1 factors ("aa") count, so every
/// walk reduces to a repetition-free one.
bool is_circular(const Walk& m);

/// Collapses consecutive repeats.
Walk destutter(const Walk& m);

/// Every walk reachable in one reduction step (a circular factor u replaced
/// by head(u)), deduplicated.
std::vector<Walk> reductions(const Walk& m);

/// Repeatedly contracts the leftmost shortest circular factor until the
/// walk is simple.
Walk reduce_walk(const Walk& m);

/// Simple walks ending at `p` with at most `max_len` edges (all of them when
/// max_len >= n-1), including the trivial walk "p".
std::vector<Walk> simple_walks_ending_at(const Graph& g, Process p,
                                         std::size_t max_len = static_cast<std::size_t>(-1));

/// "0-1-2" style rendering.
std::string to_string(const Walk& m);

}  // namespace unison
