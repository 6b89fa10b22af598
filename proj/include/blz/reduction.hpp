#pragma once

// Graph-to-string reduction tying minimum vertex covers to minimum
// hop-bounded parsings, with the matching witness-parsing builder, the
// cover-extraction map for arbitrary valid parsings, and a small exact
// vertex cover solver used as an oracle.
//
// For a graph with n vertices and m edges and parameters (c, ell) the
// generated text is built in levels:
//
//   alpha(1) = P X Y
//     P = v_1 #p_1 ... v_n #p_n e_1 #p_{n+1} ... e_m #p_{n+m}
//     X = X_1 ... X_n,   X_i = v_i' v_i #v_i
//     Y = Y_1 ... Y_m,   Y_i = v_p' v_p e_i $_i v_q' v_q e_i $_i #e_i
//                        for edge e_i = {v_p, v_q} with p < q
//   beta(i)    = alpha(i) #i_1  alpha(i) #i_2  ...  alpha(i) #i_ell
//   alpha(i+1) = alpha(i) beta(i)
//
// and the text is alpha(c). |alpha(1)| = 5n + 11m and
// |alpha(i+1)| = (ell+1)|alpha(i)| + ell. A cover of size k yields a
// hop-bounded parsing of size 4n + 6m + k + ell(c-1), and conversely (for
// ell > k) a parsing of that size yields a cover of size k.

#include <cstdint>
#include <utility>
#include <vector>

#include "blz/core.hpp"

namespace blz {

struct Graph {
  uint32_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // 1-based endpoints

  uint32_t m() const { return static_cast<uint32_t>(edges.size()); }
  // Throws PreconditionError on out-of-range endpoints, self-loops, or
  // duplicate edges (regardless of endpoint order).
  void validate() const;
};

struct VertexCover {
  std::vector<uint32_t> vertices;  // sorted, unique

  uint32_t size() const { return static_cast<uint32_t>(vertices.size()); }
  bool contains(uint32_t v) const;
};

bool is_cover(const Graph& g, const VertexCover& c);

struct ReductionParams {
  uint32_t c = 1;    // hop ceiling, >= 1
  uint32_t ell = 1;  // copies per level, >= 1
};

// Token positions [start, end] of one structural segment of the text.
struct Segment {
  uint32_t start = 0;
  uint32_t end = 0;

  bool operator==(const Segment&) const = default;
};

struct SegmentIndex {
  Segment P;
  std::vector<Segment> X;      // X[i-1] = X_i
  std::vector<Segment> Y;      // Y[i-1] = Y_i
  std::vector<Segment> alpha;  // alpha[i-1] = alpha(i), i = 1..c
  std::vector<Segment> beta;   // beta[i-1] = beta(i), i = 1..c-1
  // copies[i-1][g-1] = the g-th alpha(i) copy inside beta(i)
  std::vector<std::vector<Segment>> copies;
};

struct ReductionInstance {
  SymbolString text;
  Graph graph;
  ReductionParams params;
  SegmentIndex segments;
};

// Builds the instance for a validated graph. Symbol names are fixed
// ("v1", "v1'", "#p1", "#v1", "e1", "$1", "#e1", "#<level>_<copy>") and ids
// are assigned in first-appearance order, so output is reproducible
// byte-for-byte.
ReductionInstance build_reduction(const Graph& g, const ReductionParams& p);

// 4n + 6m + k + ell(c-1): the parsing size a cover of size k certifies.
// Requires 0 <= k <= n and ell > k (PreconditionError otherwise).
uint64_t target_size(const Graph& g, uint32_t k, const ReductionParams& p);

// The parsing a vertex cover certifies: P as singletons; X_i in three
// phrases when v_i is in the cover, two otherwise; each Y_i in four phrases
// shaped by which endpoints are covered; each alpha(i) copy in one phrase
// sourced at the alpha(i) prefix. Size = 4n + 6m + |cover| + ell(c-1) and
// hop_max <= c. Throws PreconditionError if `cover` is not a cover.
Parsing witness_parsing(const ReductionInstance& inst, const VertexCover& cover);

// Maps any valid parsing of the text to a vertex cover: takes v_i whenever
// X_i is parsed into three phrases; then, while the result is not yet a
// cover, takes the smaller endpoint of every edge whose Y_i is parsed into
// five or more phrases or into four phrases containing a position with hop
// >= 2; any still-uncovered edge contributes its smaller endpoint. For a
// parsing of size S the result has at most S - (4n + 6m + ell(c-1))
// vertices whenever the parsing respects the hop ceiling.
VertexCover extract_cover(const ReductionInstance& inst, const Parsing& p);

// Exact minimum vertex cover by branch and bound; refuses graphs with more
// than 20 vertices. Returns the cover; its size is the cover number.
VertexCover vertex_cover_exact(const Graph& g);

}  // namespace blz
