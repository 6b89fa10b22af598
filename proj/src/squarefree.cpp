#include "blz/squarefree.hpp"

#include <string>

namespace blz {

SymbolString thue_word(uint32_t n) {
  SymbolString s;
  for (const char* name : {"0", "1", "2"}) s.table.intern(name);
  if (n == 0) return s;

  // Iterate the morphism on the whole word; since the word is a fixed point
  // each round only extends the previous one.
  std::vector<uint32_t> word{0};
  while (word.size() < n) {
    std::vector<uint32_t> next;
    next.reserve(word.size() * 3);
    for (uint32_t sym : word) {
      switch (sym) {
        case 0: next.insert(next.end(), {0, 1, 2}); break;
        case 1: next.insert(next.end(), {0, 2}); break;
        default: next.push_back(1); break;
      }
    }
    word = std::move(next);
  }
  word.resize(n);
  s.syms = std::move(word);

  if (auto sq = find_square(s))
    throw Error("thue_word: generated word has a square at position " +
                std::to_string(sq->first) + " of block length " +
                std::to_string(sq->second));
  return s;
}

std::optional<std::pair<uint32_t, uint32_t>> find_square(const SymbolString& s) {
  uint32_t n = s.length();
  // For each block length, count consecutive positions agreeing with their
  // shift; a run of `len` agreements is a square. O(n^2) overall.
  for (uint32_t len = 1; 2 * len <= n; len++) {
    uint32_t run = 0;
    for (uint32_t i = 0; i + len < n; i++) {
      if (s.syms[i] == s.syms[i + len]) {
        if (++run >= len) return std::make_pair(i + 2 - len, len);
      } else {
        run = 0;
      }
    }
  }
  return std::nullopt;
}

bool is_square_free(const SymbolString& s) { return !find_square(s); }

uint32_t parsing_size_floor(uint64_t n, uint32_t c) {
  if (n == 0) return 0;
  uint32_t e = c + 1;
  // r = floor(n^(1/e)) by integer arithmetic: largest r with r^e <= n.
  auto root_fits = [&](uint64_t r) {
    uint64_t acc = 1;
    for (uint32_t i = 0; i < e; i++) {
      if (acc > n / r) return false;
      acc *= r;
    }
    return acc <= n;
  };
  uint64_t r = 1;
  while (root_fits(r + 1)) r++;
  uint64_t r_pow = 1;
  for (uint32_t i = 0; i < e; i++) r_pow *= r;  // fits: r^e <= n
  // ceil(n^(1/e)) is r for an exact power and r+1 otherwise; subtract one.
  return static_cast<uint32_t>(r_pow == n ? r - 1 : r);
}

BoundReport audit_lower_bound(const SymbolString& s, uint32_t c,
                              const Parsing& p) {
  if (auto sq = find_square(s))
    throw PreconditionError(
        "audit_lower_bound: input is not square-free (square at position " +
        std::to_string(sq->first) + ", block length " +
        std::to_string(sq->second) + ")");
  HopProfile hp = compute_hops(s, p);  // validates the parsing
  if (hp.hop_max > c)
    throw PreconditionError("audit_lower_bound: parsing has hop_max " +
                            std::to_string(hp.hop_max) +
                            " above the ceiling " + std::to_string(c));
  BoundReport r;
  r.n = s.length();
  r.c = c;
  r.parsing_size = p.size();
  r.lower_bound = parsing_size_floor(r.n, c);
  r.lz76_size = greedy_lz76(s).size();
  r.ratio = r.lz76_size ? static_cast<double>(r.parsing_size) / r.lz76_size : 0.0;
  r.ok = r.parsing_size >= r.lower_bound;
  return r;
}

}  // namespace blz
