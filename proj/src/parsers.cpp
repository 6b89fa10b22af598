#include "blz/parsers.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

namespace blz {

namespace {

// occ[sym] = 1-based positions of sym, ascending.
std::vector<std::vector<uint32_t>> occurrence_lists(const SymbolString& s) {
  std::vector<std::vector<uint32_t>> occ(s.table.size());
  for (uint32_t i = 0; i < s.length(); i++) occ[s.syms[i]].push_back(i + 1);
  return occ;
}

// Longest elementwise match of s[l..] against s[pos..], at most `cap`
// symbols. l < pos, so a match running past pos just continues the period.
uint32_t match_len(const std::vector<uint32_t>& syms, uint32_t l, uint32_t pos,
                   uint32_t cap) {
  uint32_t k = 0;
  while (k < cap && syms[l - 1 + k] == syms[pos - 1 + k]) k++;
  return k;
}

// Longest body a phrase starting at pos can copy from source l while every
// interior hop stays <= c, given the fixed hop numbers of positions < pos.
// Interior position pos+i copies from l + (i mod (pos-l)).
uint32_t feasible_body(const std::vector<uint32_t>& syms,
                       const std::vector<uint32_t>& hops, uint32_t pos,
                       uint32_t l, uint32_t c, uint32_t cap) {
  if (c == 0) return 0;
  uint32_t unit = pos - l;
  uint32_t k = 0;
  while (k < cap && syms[l - 1 + k] == syms[pos - 1 + k] &&
         hops[l - 1 + (k % unit)] + 1 <= c)
    k++;
  return k;
}

// 1 + max hop over the first `body` source positions of (pos, l).
uint32_t body_hop_max(const std::vector<uint32_t>& hops, uint32_t pos,
                      uint32_t l, uint32_t body) {
  uint32_t unit = pos - l;
  uint32_t m = 0;
  for (uint32_t i = 0; i < body && i < unit; i++)
    m = std::max(m, hops[l - 1 + i]);
  return m + 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Greedy longest-match (unconstrained hops)

Parsing greedy_lz76(const SymbolString& s) {
  Parsing out;
  uint32_t n = s.length();
  auto occ = occurrence_lists(s);
  uint32_t pos = 1;
  while (pos <= n) {
    uint32_t cap = n - pos;  // the final literal must stay inside the string
    uint32_t best_len = 0, best_src = 0;
    for (uint32_t l : occ[s.syms[pos - 1]]) {
      if (l >= pos) break;
      uint32_t k = match_len(s.syms, l, pos, cap);
      if (k > best_len) {
        best_len = k;
        best_src = l;
      }
    }
    if (best_len == 0)
      out.phrases.push_back(Phrase::literal(pos));
    else
      out.phrases.push_back(Phrase::copy(pos, pos + best_len, best_src));
    pos += best_len + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive minimum oracle

uint32_t exact_lz_bruteforce(const SymbolString& s) {
  constexpr uint32_t kMaxLen = 16;
  uint32_t n = s.length();
  if (n > kMaxLen)
    throw PreconditionError("exact_lz_bruteforce: length " + std::to_string(n) +
                            " exceeds the oracle limit " +
                            std::to_string(kMaxLen));
  if (n == 0) return 0;

  // max_body[pos] = longest copyable body at pos (some earlier source,
  // capped so a literal still fits). A phrase [pos, end] is valid iff
  // end == pos or end - pos <= max_body[pos].
  std::vector<uint32_t> max_body(n + 1, 0);
  for (uint32_t pos = 2; pos <= n; pos++)
    for (uint32_t l = 1; l < pos; l++)
      max_body[pos] =
          std::max(max_body[pos], match_len(s.syms, l, pos, n - pos));

  // Enumerate every boundary set; bit b of `mask` cuts after position b+1.
  uint32_t best = n;
  for (uint64_t mask = 0; mask < (uint64_t{1} << (n - 1)); mask++) {
    uint32_t count = static_cast<uint32_t>(std::popcount(mask)) + 1;
    if (count >= best) continue;
    uint32_t start = 1;
    bool good = true;
    for (uint32_t pos = 1; pos <= n && good; pos++) {
      bool cut = (pos == n) || ((mask >> (pos - 1)) & 1);
      if (!cut) continue;
      if (pos != start && pos - start > max_body[start]) good = false;
      start = pos + 1;
    }
    if (good) best = count;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hop-bounded greedy

Parsing greedy_bounded_blz(const SymbolString& s, uint32_t c) {
  Parsing out;
  uint32_t n = s.length();
  auto occ = occurrence_lists(s);
  std::vector<uint32_t> hops(n, 0);
  std::vector<uint32_t> cand;  // sources admitting the current best length
  uint32_t pos = 1;
  while (pos <= n) {
    uint32_t cap = n - pos;
    uint32_t best_len = 0;
    cand.clear();
    for (uint32_t l : occ[s.syms[pos - 1]]) {
      if (l >= pos) break;
      uint32_t k = feasible_body(s.syms, hops, pos, l, c, cap);
      if (k > best_len) {
        best_len = k;
        cand.clear();
      }
      if (k >= best_len && best_len > 0) cand.push_back(l);
    }
    if (best_len == 0) {
      out.phrases.push_back(Phrase::literal(pos));
      hops[pos - 1] = 0;
      pos++;
      continue;
    }
    // Among sources reaching best_len, minimize the worst hop over the
    // body, then take the smallest start (cand is already ascending).
    uint32_t best_src = 0, best_hop = UINT32_MAX;
    for (uint32_t l : cand) {
      uint32_t h = body_hop_max(hops, pos, l, best_len);
      if (h < best_hop) {
        best_hop = h;
        best_src = l;
      }
    }
    Phrase ph = Phrase::copy(pos, pos + best_len, best_src);
    for (uint32_t p = ph.start; p < ph.end; p++)
      hops[p - 1] = hops[source_of(ph, p) - 1] + 1;
    hops[ph.end - 1] = 0;
    out.phrases.push_back(ph);
    pos += best_len + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact branch and bound

namespace {

struct BnB {
  const std::vector<uint32_t>& syms;
  uint32_t n;
  uint32_t c;
  std::vector<std::vector<uint32_t>> occ;
  std::vector<uint32_t> lb;  // lb[pos]: phrases any completion needs from pos

  uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline;
  uint32_t prune_limit;

  std::vector<uint32_t> hops;
  std::vector<uint32_t> ends, srcs;            // current partial parsing
  std::vector<uint32_t> best_ends, best_srcs;  // incumbent
  uint32_t best_size;
  bool have_best = false;  // incumbent found by the search itself
  uint64_t nodes = 0;
  bool exhausted = false;

  // The unconstrained greedy optimum of every suffix (full left context) is
  // a static lower bound: dropping the hop ceiling only removes constraints.
  void build_lb() {
    lb.assign(n + 2, 0);
    for (uint32_t pos = n; pos >= 1; pos--) {
      uint32_t body = 0;
      for (uint32_t l : occ[syms[pos - 1]]) {
        if (l >= pos) break;
        body = std::max(body, match_len(syms, l, pos, n - pos));
      }
      lb[pos] = 1 + lb[pos + body + 1];
    }
  }

  bool better_than_best() const {
    if (ends.size() != best_ends.size()) return ends.size() < best_ends.size();
    if (ends != best_ends) return ends < best_ends;
    return srcs < best_srcs;
  }

  void search(uint32_t pos) {
    if (exhausted) return;
    if (++nodes > max_nodes ||
        (nodes % 1024 == 0 && std::chrono::steady_clock::now() > deadline)) {
      exhausted = true;
      return;
    }
    if (pos > n) {
      uint32_t count = static_cast<uint32_t>(ends.size());
      if (count < best_size || (count == best_size && better_than_best()) ||
          (count == best_size && !have_best)) {
        best_size = count;
        best_ends = ends;
        best_srcs = srcs;
        have_best = true;
        prune_limit = std::min(prune_limit, best_size);
      }
      return;
    }
    uint32_t count = static_cast<uint32_t>(ends.size());
    if (count + lb[pos] > prune_limit) return;

    uint32_t cap = n - pos;
    // Longest phrases first; for each body length, sources in ascending
    // order (all of them: hop feasibility depends on the choice).
    std::vector<std::pair<uint32_t, uint32_t>> feas;  // (source, max body)
    uint32_t longest = 0;
    for (uint32_t l : occ[syms[pos - 1]]) {
      if (l >= pos) break;
      uint32_t k = feasible_body(syms, hops, pos, l, c, cap);
      if (k > 0) {
        feas.emplace_back(l, k);
        longest = std::max(longest, k);
      }
    }
    for (uint32_t body = longest; body >= 1 && !exhausted; body--) {
      for (auto [l, k] : feas) {
        if (k < body) continue;
        Phrase ph = Phrase::copy(pos, pos + body, l);
        for (uint32_t p = ph.start; p < ph.end; p++)
          hops[p - 1] = hops[source_of(ph, p) - 1] + 1;
        hops[ph.end - 1] = 0;
        ends.push_back(ph.end);
        srcs.push_back(l);
        search(pos + body + 1);
        ends.pop_back();
        srcs.pop_back();
        if (exhausted) return;
      }
    }
    hops[pos - 1] = 0;
    ends.push_back(pos);
    srcs.push_back(0);
    search(pos + 1);
    ends.pop_back();
    srcs.pop_back();
  }
};

}  // namespace

SolveResult exact_blz(const SymbolString& s, uint32_t c,
                      const SolverBudget& budget) {
  if (budget.max_nodes == 0 || budget.time_limit_sec <= 0)
    throw PreconditionError("exact_blz: budget limits must be positive");

  SolveResult res;
  uint32_t n = s.length();
  Parsing greedy = greedy_bounded_blz(s, c);
  res.parsing = greedy;
  res.size = greedy.size();
  if (n == 0) {
    res.proven_optimal = true;
    return res;
  }

  BnB bnb{.syms = s.syms,
          .n = n,
          .c = c,
          .occ = occurrence_lists(s),
          .lb = {},
          .max_nodes = budget.max_nodes,
          .deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(budget.time_limit_sec)),
          .prune_limit = 0,
          .hops = std::vector<uint32_t>(n, 0),
          .ends = {},
          .srcs = {},
          .best_ends = {},
          .best_srcs = {},
          .best_size = greedy.size()};
  bnb.build_lb();
  bnb.prune_limit = greedy.size();
  if (budget.upper_bound > 0)
    bnb.prune_limit = std::min(bnb.prune_limit, budget.upper_bound);
  bnb.search(1);

  res.nodes = bnb.nodes;
  if (bnb.have_best) {
    Parsing found;
    uint32_t start = 1;
    for (uint32_t i = 0; i < bnb.best_ends.size(); i++) {
      if (bnb.best_srcs[i] == 0)
        found.phrases.push_back(Phrase::literal(start));
      else
        found.phrases.push_back(
            Phrase::copy(start, bnb.best_ends[i], bnb.best_srcs[i]));
      start = bnb.best_ends[i] + 1;
    }
    res.parsing = found;
    res.size = bnb.best_size;
  }
  res.proven_optimal =
      !bnb.exhausted &&
      (budget.upper_bound == 0 || res.size <= budget.upper_bound);
  return res;
}

}  // namespace blz
