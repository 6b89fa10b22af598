#include "blz/reduction.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace blz {

namespace {

// Edge endpoints in canonical (smaller, larger) order; Y segments and all
// cover logic use this orientation.
std::pair<uint32_t, uint32_t> oriented(const std::pair<uint32_t, uint32_t>& e) {
  return {std::min(e.first, e.second), std::max(e.first, e.second)};
}

void check_cover_wellformed(const Graph& g, const VertexCover& c) {
  uint32_t prev = 0;
  for (uint32_t v : c.vertices) {
    if (v < 1 || v > g.n)
      throw PreconditionError("cover vertex " + std::to_string(v) +
                              " out of range [1, " + std::to_string(g.n) + "]");
    if (v <= prev)
      throw PreconditionError("cover vertices must be strictly ascending");
    prev = v;
  }
}

}  // namespace

void Graph::validate() const {
  std::set<std::pair<uint32_t, uint32_t>> seen;
  for (const auto& e : edges) {
    if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
      throw PreconditionError("edge (" + std::to_string(e.first) + ", " +
                              std::to_string(e.second) +
                              ") has an endpoint outside [1, " +
                              std::to_string(n) + "]");
    if (e.first == e.second)
      throw PreconditionError("self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(oriented(e)).second)
      throw PreconditionError("duplicate edge (" + std::to_string(e.first) +
                              ", " + std::to_string(e.second) + ")");
  }
}

bool VertexCover::contains(uint32_t v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool is_cover(const Graph& g, const VertexCover& c) {
  check_cover_wellformed(g, c);
  for (const auto& e : g.edges)
    if (!c.contains(e.first) && !c.contains(e.second)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Instance construction

ReductionInstance build_reduction(const Graph& g, const ReductionParams& p) {
  g.validate();
  if (p.c < 1) throw PreconditionError("reduction requires c >= 1");
  if (p.ell < 1) throw PreconditionError("reduction requires ell >= 1");

  ReductionInstance inst;
  inst.graph = g;
  inst.params = p;
  SymbolString& t = inst.text;
  SegmentIndex& seg = inst.segments;
  uint32_t n = g.n, m = g.m();

  auto push = [&t](const std::string& name) {
    t.syms.push_back(t.table.intern(name));
  };
  auto here = [&t] { return static_cast<uint32_t>(t.syms.size()); };

  // P: every vertex and edge symbol once, each followed by a fresh separator.
  for (uint32_t i = 1; i <= n; i++) {
    push("v" + std::to_string(i));
    push("#p" + std::to_string(i));
  }
  for (uint32_t j = 1; j <= m; j++) {
    push("e" + std::to_string(j));
    push("#p" + std::to_string(n + j));
  }
  seg.P = {1, here()};

  // X blocks: v_i' v_i #v_i.
  for (uint32_t i = 1; i <= n; i++) {
    uint32_t start = here() + 1;
    push("v" + std::to_string(i) + "'");
    push("v" + std::to_string(i));
    push("#v" + std::to_string(i));
    seg.X.push_back({start, here()});
  }

  // Y blocks: both endpoint halves, then a fresh terminator.
  for (uint32_t j = 1; j <= m; j++) {
    auto [ep, eq] = oriented(g.edges[j - 1]);
    uint32_t start = here() + 1;
    for (uint32_t v : {ep, eq}) {
      push("v" + std::to_string(v) + "'");
      push("v" + std::to_string(v));
      push("e" + std::to_string(j));
      push("$" + std::to_string(j));
    }
    // The second half ends $_j #e_j rather than plain $_j.
    push("#e" + std::to_string(j));
    seg.Y.push_back({start, here()});
  }
  seg.alpha.push_back({1, here()});

  // Levels: alpha(lvl+1) = alpha(lvl) followed by ell separated copies.
  for (uint32_t lvl = 1; lvl + 1 <= p.c; lvl++) {
    uint32_t alen = here();
    uint32_t bstart = alen + 1;
    std::vector<Segment> level_copies;
    for (uint32_t gamma = 1; gamma <= p.ell; gamma++) {
      uint32_t cstart = here() + 1;
      for (uint32_t i = 0; i < alen; i++) t.syms.push_back(t.syms[i]);
      level_copies.push_back({cstart, here()});
      push("#" + std::to_string(lvl) + "_" + std::to_string(gamma));
    }
    seg.copies.push_back(std::move(level_copies));
    seg.beta.push_back({bstart, here()});
    seg.alpha.push_back({1, here()});
  }
  return inst;
}

uint64_t target_size(const Graph& g, uint32_t k, const ReductionParams& p) {
  g.validate();
  if (p.c < 1 || p.ell < 1)
    throw PreconditionError("target_size requires c >= 1 and ell >= 1");
  if (k > g.n)
    throw PreconditionError("cover size " + std::to_string(k) +
                            " exceeds vertex count " + std::to_string(g.n));
  if (p.ell <= k)
    throw PreconditionError("target_size requires ell > k (got ell = " +
                            std::to_string(p.ell) + ", k = " +
                            std::to_string(k) + ")");
  return 4ull * g.n + 6ull * g.m() + k + uint64_t{p.ell} * (p.c - 1);
}

// ---------------------------------------------------------------------------
// Witness parsing

Parsing witness_parsing(const ReductionInstance& inst, const VertexCover& cover) {
  const Graph& g = inst.graph;
  check_cover_wellformed(g, cover);
  if (!is_cover(g, cover))
    throw PreconditionError("witness_parsing: the given set is not a vertex cover");

  uint32_t n = g.n, m = g.m();
  const SegmentIndex& seg = inst.segments;
  Parsing out;

  // v_i sits at position 2i-1 of P, e_j at position 2n + 2j - 1.
  auto vP = [](uint32_t i) { return 2 * i - 1; };
  auto eP = [n](uint32_t j) { return 2 * n + 2 * j - 1; };

  for (uint32_t pos = 1; pos <= 2 * (n + m); pos++)
    out.phrases.push_back(Phrase::literal(pos));

  for (uint32_t i = 1; i <= n; i++) {
    uint32_t xs = seg.X[i - 1].start;
    if (cover.contains(i)) {
      // Selected: three singletons, leaving v_i' v_i as a hop-0 source pair.
      out.phrases.push_back(Phrase::literal(xs));
      out.phrases.push_back(Phrase::literal(xs + 1));
      out.phrases.push_back(Phrase::literal(xs + 2));
    } else {
      out.phrases.push_back(Phrase::literal(xs));
      out.phrases.push_back(Phrase::copy(xs + 1, xs + 2, vP(i)));
    }
  }

  for (uint32_t j = 1; j <= m; j++) {
    auto [ep, eq] = oriented(g.edges[j - 1]);
    uint32_t b = seg.Y[j - 1].start;
    uint32_t xp = seg.X[ep - 1].start, xq = seg.X[eq - 1].start;
    bool inp = cover.contains(ep), inq = cover.contains(eq);
    if (inp && inq) {
      out.phrases.push_back(Phrase::copy(b, b + 2, xp));
      out.phrases.push_back(Phrase::literal(b + 3));
      out.phrases.push_back(Phrase::copy(b + 4, b + 6, xq));
      out.phrases.push_back(Phrase::copy(b + 7, b + 8, b + 3));
    } else if (inp) {
      out.phrases.push_back(Phrase::copy(b, b + 2, xp));
      out.phrases.push_back(Phrase::literal(b + 3));
      out.phrases.push_back(Phrase::copy(b + 4, b + 5, xq));
      out.phrases.push_back(Phrase::copy(b + 6, b + 8, b + 2));
    } else {
      out.phrases.push_back(Phrase::copy(b, b + 1, xp));
      out.phrases.push_back(Phrase::copy(b + 2, b + 3, eP(j)));
      out.phrases.push_back(Phrase::copy(b + 4, b + 6, xq));
      out.phrases.push_back(Phrase::copy(b + 7, b + 8, b + 3));
    }
  }

  // Every alpha(i) copy is one phrase sourced at the alpha(i) prefix, so its
  // hops are the prefix hops plus one; the separator is the literal.
  for (const auto& level : seg.copies)
    for (const Segment& cp : level)
      out.phrases.push_back(Phrase::copy(cp.start, cp.end + 1, 1));

  return out;
}

// ---------------------------------------------------------------------------
// Cover extraction

VertexCover extract_cover(const ReductionInstance& inst, const Parsing& p) {
  require_valid(inst.text, p);
  HopProfile hp = compute_hops(inst.text, p);

  const Graph& g = inst.graph;
  uint32_t n = g.n, m = g.m();
  const SegmentIndex& seg = inst.segments;

  auto phrases_inside = [&p](const Segment& s) {
    uint32_t count = 0;
    for (const Phrase& ph : p.phrases)
      if (ph.start >= s.start && ph.end <= s.end) count++;
    return count;
  };
  auto hop_max_inside = [&hp](const Segment& s) {
    uint32_t h = 0;
    for (uint32_t pos = s.start; pos <= s.end; pos++)
      h = std::max(h, hp.at(pos));
    return h;
  };

  std::vector<bool> in_cover(n + 1, false);
  auto covered = [&] {
    for (const auto& e : g.edges)
      if (!in_cover[e.first] && !in_cover[e.second]) return false;
    return true;
  };

  // Selected vertices: X_i split into three phrases.
  for (uint32_t i = 1; i <= n; i++)
    if (phrases_inside(seg.X[i - 1]) == 3) in_cover[i] = true;

  // Defective Y blocks pay for one endpoint each.
  if (!covered()) {
    for (uint32_t j = 1; j <= m; j++) {
      uint32_t cnt = phrases_inside(seg.Y[j - 1]);
      if (cnt >= 5 || (cnt == 4 && hop_max_inside(seg.Y[j - 1]) >= 2))
        in_cover[oriented(g.edges[j - 1]).first] = true;
    }
  }

  // Safety net: cover anything still exposed with its smaller endpoint.
  for (const auto& e : g.edges)
    if (!in_cover[e.first] && !in_cover[e.second])
      in_cover[oriented(e).first] = true;

  VertexCover out;
  for (uint32_t v = 1; v <= n; v++)
    if (in_cover[v]) out.vertices.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Exact vertex cover

namespace {

struct VcSearch {
  const Graph& g;
  std::vector<bool> chosen;
  std::vector<uint32_t> cur;
  std::vector<uint32_t> best;

  void run() {
    if (cur.size() + 1 >= best.size()) {
      // Even one more vertex cannot beat the incumbent unless everything
      // is already covered.
      for (const auto& e : g.edges)
        if (!chosen[e.first] && !chosen[e.second]) return;
      if (cur.size() < best.size()) best = cur;
      return;
    }
    const std::pair<uint32_t, uint32_t>* open = nullptr;
    for (const auto& e : g.edges)
      if (!chosen[e.first] && !chosen[e.second]) {
        open = &e;
        break;
      }
    if (!open) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    for (uint32_t v : {std::min(open->first, open->second),
                       std::max(open->first, open->second)}) {
      chosen[v] = true;
      cur.push_back(v);
      run();
      cur.pop_back();
      chosen[v] = false;
    }
  }
};

}  // namespace

VertexCover vertex_cover_exact(const Graph& g) {
  g.validate();
  constexpr uint32_t kMaxVertices = 20;
  if (g.n > kMaxVertices)
    throw PreconditionError("vertex_cover_exact: " + std::to_string(g.n) +
                            " vertices exceeds the oracle limit " +
                            std::to_string(kMaxVertices));
  VcSearch s{.g = g,
             .chosen = std::vector<bool>(g.n + 1, false),
             .cur = {},
             .best = {}};
  s.best.resize(g.n);
  for (uint32_t v = 1; v <= g.n; v++) s.best[v - 1] = v;
  s.run();
  VertexCover out;
  out.vertices = s.best;
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

}  // namespace blz
