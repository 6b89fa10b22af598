#pragma once

// Parsing constructors: the classic greedy longest-match parser (optimal for
// the unconstrained phrase count), an exhaustive minimum oracle for small
// strings, a hop-bounded greedy heuristic, and an exact branch-and-bound
// solver for the minimum parsing under a hop ceiling.

#include <cstdint>

#include "blz/core.hpp"

namespace blz {

// Resource limits for exact_blz. `upper_bound` (0 = none) lets the caller
// assert a known incumbent size; the search then only explores parsings at
// most that large. `threads` is accepted for interface stability; results
// are identical for every value.
struct SolverBudget {
  uint64_t max_nodes = 100'000'000;
  double time_limit_sec = 600.0;
  uint32_t upper_bound = 0;
  uint32_t threads = 1;
};

struct SolveResult {
  Parsing parsing;
  uint32_t size = 0;
  bool proven_optimal = false;
  uint64_t nodes = 0;
};

// Greedy longest-match parsing: each phrase copies the longest prefix of the
// remainder that also occurs starting strictly earlier (self-overlap
// allowed), then takes one more symbol as its literal. The copy body is
// capped so the final literal stays inside the string. Among sources of
// maximal length the smallest start is chosen. Minimizes the phrase count
// over all valid parsings.
Parsing greedy_lz76(const SymbolString& s);

// Exhaustive minimum phrase count over all valid parsings, enumerating every
// boundary set. Oracle-grade but exponential; refuses strings longer than 16
// (PreconditionError).
uint32_t exact_lz_bruteforce(const SymbolString& s);

// Left-to-right greedy parsing that keeps every hop number <= c: a phrase
// extends while some source keeps all its interior hops within the ceiling.
// Among the sources admitting the chosen length it picks one minimizing the
// maximum hop over the copied body, breaking ties by smallest source start.
// c = 0 always yields the all-singletons parsing.
Parsing greedy_bounded_blz(const SymbolString& s, uint32_t c);

// Exact minimum-size parsing with hop_max <= c, by branch and bound over
// phrase boundaries and source choices (hop feasibility depends on which
// source each phrase uses, so all valid sources are branched on). The
// incumbent starts from greedy_bounded_blz, longer phrases are tried first,
// and a static per-suffix lower bound (the unconstrained greedy optimum of
// the remainder, full left context available) prunes the search. If the
// budget runs out the best incumbent is returned with proven_optimal =
// false. Ties on size resolve to the lexicographically smallest boundary
// set, then the smallest source vector, independent of `threads`.
SolveResult exact_blz(const SymbolString& s, uint32_t c,
                      const SolverBudget& budget = {});

}  // namespace blz
