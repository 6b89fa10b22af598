#pragma once

// Square-free words and the size floor they impose on hop-bounded parsings:
// a square-free string of length n admits no hop-bounded parsing with fewer
// than ceil(n^(1/(c+1))) - 1 phrases, while its unconstrained greedy parsing
// stays logarithmic — so the price of bounding hops is unbounded.

#include <cstdint>
#include <optional>
#include <utility>

#include "blz/core.hpp"
#include "blz/parsers.hpp"

namespace blz {

// Prefix of length n of the fixed point of the morphism
//   0 -> 012, 1 -> 02, 2 -> 1
// over the alphabet {"0", "1", "2"}. The word is square-free; the generator
// verifies that on every call and fails loudly rather than return a word
// with a square. Prefixes are stable: thue_word(k) is a prefix of
// thue_word(n) for k <= n.
SymbolString thue_word(uint32_t n);

// First square, as (start, length) of the repeated block: s[start, start+len-1]
// == s[start+len, start+2*len-1]. 1-based; nullopt when square-free.
std::optional<std::pair<uint32_t, uint32_t>> find_square(const SymbolString& s);

bool is_square_free(const SymbolString& s);

// floor-free integer form of ceil(n^(1/(c+1))) - 1 (0 for n = 0).
uint32_t parsing_size_floor(uint64_t n, uint32_t c);

struct BoundReport {
  uint64_t n = 0;
  uint32_t c = 0;
  uint32_t parsing_size = 0;
  uint32_t lower_bound = 0;  // ceil(n^(1/(c+1))) - 1
  uint32_t lz76_size = 0;    // unconstrained greedy phrase count
  double ratio = 0.0;        // parsing_size / lz76_size
  bool ok = false;           // parsing_size >= lower_bound
};

// Checks the size floor for a hop-bounded parsing of a square-free string.
// Refuses strings that are not square-free, parsings that are invalid, and
// parsings whose hop_max exceeds c (PreconditionError / InvalidParsingError).
BoundReport audit_lower_bound(const SymbolString& s, uint32_t c,
                              const Parsing& p);

}  // namespace blz
