#include <algorithm>
#include <bit>
#include <random>
#include <tuple>
#include <vector>

#include "blz/core.hpp"
#include "blz/parsers.hpp"
#include "blz/reduction.hpp"
#include "doctest.h"

using namespace blz;

namespace {

Graph k2() { return Graph{2, {{1, 2}}}; }
Graph k3() { return Graph{3, {{1, 2}, {1, 3}, {2, 3}}}; }
Graph c4() { return Graph{4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}; }
Graph edgeless(uint32_t n) { return Graph{n, {}}; }

VertexCover cov(std::initializer_list<uint32_t> vs) {
  VertexCover c;
  c.vertices.assign(vs);
  return c;
}

// Hop values across one segment of the instance text.
std::vector<uint32_t> segment_hops(const ReductionInstance& inst,
                                   const Parsing& p, Segment seg) {
  HopProfile hp = compute_hops(inst.text, p);
  std::vector<uint32_t> row;
  for (uint32_t pos = seg.start; pos <= seg.end; ++pos)
    row.push_back(hp.hops[pos - 1]);
  return row;
}

// Minimum vertex cover by subset enumeration — independent oracle.
uint32_t vc_bruteforce(const Graph& g) {
  uint32_t best = g.n;
  for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    bool covers = true;
    for (const auto& e : g.edges) {
      if (!((mask >> (e.first - 1)) & 1) && !((mask >> (e.second - 1)) & 1)) {
        covers = false;
        break;
      }
    }
    if (covers)
      best = std::min(best, static_cast<uint32_t>(std::popcount(mask)));
  }
  return best;
}

Graph random_graph(std::mt19937_64& rng, uint32_t max_n, uint32_t max_m) {
  Graph g;
  g.n = 2 + static_cast<uint32_t>(rng() % (max_n - 1));
  uint32_t possible = g.n * (g.n - 1) / 2;
  uint32_t want = 1 + static_cast<uint32_t>(rng() % std::min(max_m, possible));
  std::vector<std::pair<uint32_t, uint32_t>> all;
  for (uint32_t u = 1; u <= g.n; ++u)
    for (uint32_t v = u + 1; v <= g.n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  g.edges.assign(all.begin(), all.begin() + want);
  return g;
}

// Any-cover heuristic: repeatedly take the highest-degree endpoint among
// uncovered edges.
VertexCover greedy_cover(const Graph& g) {
  VertexCover c;
  std::vector<bool> in(g.n + 1, false);
  auto covered = [&](const std::pair<uint32_t, uint32_t>& e) {
    return in[e.first] || in[e.second];
  };
  while (true) {
    std::vector<uint32_t> deg(g.n + 1, 0);
    bool any = false;
    for (const auto& e : g.edges) {
      if (covered(e)) continue;
      any = true;
      ++deg[e.first];
      ++deg[e.second];
    }
    if (!any) break;
    uint32_t pick = static_cast<uint32_t>(
        std::max_element(deg.begin() + 1, deg.end()) - deg.begin());
    in[pick] = true;
  }
  for (uint32_t v = 1; v <= g.n; ++v)
    if (in[v]) c.vertices.push_back(v);
  return c;
}

}  // namespace

TEST_CASE("graph validation") {
  CHECK_NOTHROW(k2().validate());
  CHECK_NOTHROW(edgeless(0).validate());
  CHECK_THROWS_AS((Graph{2, {{1, 1}}}.validate()), PreconditionError);
  CHECK_THROWS_AS((Graph{2, {{1, 2}, {2, 1}}}.validate()), PreconditionError);
  CHECK_THROWS_AS((Graph{2, {{1, 3}}}.validate()), PreconditionError);
  CHECK_THROWS_AS((Graph{2, {{0, 1}}}.validate()), PreconditionError);
}

TEST_CASE("is_cover") {
  CHECK(is_cover(k2(), cov({1})));
  CHECK(is_cover(k2(), cov({2})));
  CHECK(is_cover(k2(), cov({1, 2})));
  CHECK_FALSE(is_cover(k2(), cov({})));
  CHECK(is_cover(edgeless(3), cov({})));
  CHECK_FALSE(is_cover(k3(), cov({3})));
  CHECK(is_cover(k3(), cov({1, 2})));
}

TEST_CASE("instance layout for the single-edge graph") {
  ReductionInstance inst = build_reduction(k2(), {1, 1});
  CHECK(inst.text.length() == 21);  // 5n + 11m = 10 + 11

  const char* want[] = {"v1", "#p1", "v2",  "#p2", "e1",  "#p3", "v1'",
                        "v1", "#v1", "v2'", "v2",  "#v2", "v1'", "v1",
                        "e1", "$1",  "v2'", "v2",  "e1",  "$1",  "#e1"};
  for (uint32_t pos = 1; pos <= 21; ++pos) CHECK(inst.text.token(pos) == want[pos - 1]);

  CHECK(inst.segments.P == Segment{1, 6});
  REQUIRE(inst.segments.X.size() == 2);
  CHECK(inst.segments.X[0] == Segment{7, 9});
  CHECK(inst.segments.X[1] == Segment{10, 12});
  REQUIRE(inst.segments.Y.size() == 1);
  CHECK(inst.segments.Y[0] == Segment{13, 21});
  REQUIRE(inst.segments.alpha.size() == 1);
  CHECK(inst.segments.alpha[0] == Segment{1, 21});
  CHECK(inst.segments.beta.empty());
  CHECK(inst.segments.copies.empty());
}

TEST_CASE("instance layout across levels") {
  // One extra level with two separated copies: 3*21 + 2 = 65 positions.
  ReductionInstance inst = build_reduction(k2(), {2, 2});
  CHECK(inst.text.length() == 65);
  REQUIRE(inst.segments.alpha.size() == 2);
  CHECK(inst.segments.alpha[0] == Segment{1, 21});
  CHECK(inst.segments.alpha[1] == Segment{1, 65});
  REQUIRE(inst.segments.beta.size() == 1);
  CHECK(inst.segments.beta[0] == Segment{22, 65});
  REQUIRE(inst.segments.copies.size() == 1);
  REQUIRE(inst.segments.copies[0].size() == 2);
  CHECK(inst.segments.copies[0][0] == Segment{22, 42});
  CHECK(inst.segments.copies[0][1] == Segment{44, 64});
  CHECK(inst.text.token(22) == "v1");   // copies repeat the level below
  CHECK(inst.text.token(42) == "#e1");
  CHECK(inst.text.token(43) == "#1_1");
  CHECK(inst.text.token(65) == "#1_2");
}

TEST_CASE("trivial and edge-ordering instances") {
  ReductionInstance one = build_reduction(edgeless(1), {1, 1});
  CHECK(one.text.length() == 5);
  const char* want[] = {"v1", "#p1", "v1'", "v1", "#v1"};
  for (uint32_t pos = 1; pos <= 5; ++pos) CHECK(one.text.token(pos) == want[pos - 1]);

  // Edge endpoints are oriented smaller-first inside Y regardless of input
  // order.
  ReductionInstance flipped = build_reduction(Graph{2, {{2, 1}}}, {1, 1});
  CHECK(flipped.text.token(13) == "v1'");
  CHECK(flipped.text.token(17) == "v2'");

  CHECK_THROWS_AS((void)build_reduction(k2(), {0, 1}), PreconditionError);
  CHECK_THROWS_AS((void)build_reduction(k2(), {1, 0}), PreconditionError);
}

TEST_CASE("text length obeys the recurrence on random graphs") {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 20; ++iter) {
    Graph g = random_graph(rng, 8, 12);
    uint32_t c = 1 + static_cast<uint32_t>(rng() % 3);
    uint32_t ell = 1 + static_cast<uint32_t>(rng() % 4);
    ReductionInstance inst = build_reduction(g, {c, ell});
    uint64_t len = 5ull * g.n + 11ull * g.m();
    for (uint32_t lvl = 2; lvl <= c; ++lvl) len = (ell + 1) * len + ell;
    CHECK(inst.text.length() == len);
    CHECK(inst.segments.alpha.back().end == inst.text.length());
    CHECK(inst.segments.Y.size() == g.m());
  }
}

TEST_CASE("target size formula") {
  CHECK(target_size(k2(), 1, {1, 2}) == 15);
  CHECK(target_size(k3(), 2, {2, 3}) == 35);
  CHECK(target_size(edgeless(1), 0, {3, 1}) == 6);
  CHECK(target_size(edgeless(3), 0, {1, 1}) == 12);
  CHECK_THROWS_AS((void)target_size(k2(), 3, {1, 4}), PreconditionError);
  CHECK_THROWS_AS((void)target_size(k2(), 1, {1, 1}), PreconditionError);
  CHECK_THROWS_AS((void)target_size(k2(), 2, {1, 2}), PreconditionError);
}

TEST_CASE("witness parsing: worked examples") {
  SUBCASE("single edge, one-vertex cover") {
    ReductionInstance inst = build_reduction(k2(), {1, 2});
    Parsing w = witness_parsing(inst, cov({1}));
    REQUIRE(validate_parsing(inst.text, w).ok());
    CHECK(w.size() == 15);
    CHECK(compute_hops(inst.text, w).hop_max == 1);
  }
  SUBCASE("triangle, two-vertex cover, two levels") {
    ReductionInstance inst = build_reduction(k3(), {2, 3});
    Parsing w = witness_parsing(inst, cov({1, 2}));
    REQUIRE(validate_parsing(inst.text, w).ok());
    CHECK(w.size() == 35);
    CHECK(compute_hops(inst.text, w).hop_max == 2);
    CHECK(w.size() == target_size(k3(), 2, {2, 3}));
  }
  SUBCASE("edgeless graph, empty cover") {
    ReductionInstance inst = build_reduction(edgeless(3), {1, 1});
    Parsing w = witness_parsing(inst, cov({}));
    REQUIRE(validate_parsing(inst.text, w).ok());
    CHECK(w.size() == 12);
    CHECK(compute_hops(inst.text, w).hop_max <= 1);
  }
  SUBCASE("rejects non-covers and malformed covers") {
    ReductionInstance inst = build_reduction(k3(), {1, 1});
    CHECK_THROWS_AS((void)witness_parsing(inst, cov({})), PreconditionError);
    CHECK_THROWS_AS((void)witness_parsing(inst, cov({3})), PreconditionError);
    CHECK_THROWS_AS((void)witness_parsing(inst, cov({2, 1})),
                    PreconditionError);
    CHECK_THROWS_AS((void)witness_parsing(inst, cov({1, 5})),
                    PreconditionError);
  }
}

TEST_CASE("witness parsing: size matches the target on random graphs") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 15; ++iter) {
    Graph g = random_graph(rng, 7, 10);
    VertexCover c = greedy_cover(g);
    uint32_t cc = 1 + static_cast<uint32_t>(rng() % 3);
    ReductionParams params{cc, g.n};
    if (c.size() >= params.ell) continue;  // target formula needs ell > k
    ReductionInstance inst = build_reduction(g, params);
    Parsing w = witness_parsing(inst, c);
    REQUIRE(validate_parsing(inst.text, w).ok());
    CHECK(compute_hops(inst.text, w).hop_max <= cc);
    CHECK(w.size() == target_size(g, c.size(), params));
  }
}

// The five frozen hop rows across an edge block Y_i = v_p' v_p e_i $_i
// v_q' v_q e_i $_i #e_i (nine positions). Rows depend only on which
// endpoints the parsing "selects", so they hold in any instance context.
static const std::vector<uint32_t> kRowBoth = {1, 1, 0, 0, 1, 1, 0, 1, 0};
static const std::vector<uint32_t> kRowOnlyP = {1, 1, 0, 0, 1, 0, 1, 1, 0};
static const std::vector<uint32_t> kRowOnlyQ = {1, 0, 1, 0, 1, 1, 0, 1, 0};
static const std::vector<uint32_t> kRowUncovI = {1, 0, 0, 0, 1, 0, 1, 1, 0};
static const std::vector<uint32_t> kRowUncovIIa = {1, 0, 1, 0, 1, 0, 0, 1, 0};
static const std::vector<uint32_t> kRowUncovIIb = {1, 0, 1, 0, 1, 0, 1, 0, 0};

TEST_CASE("golden hop rows: covered shapes via the witness") {
  SUBCASE("single-edge instance") {
    ReductionInstance inst = build_reduction(k2(), {1, 2});
    CHECK(segment_hops(inst, witness_parsing(inst, cov({1, 2})),
                       inst.segments.Y[0]) == kRowBoth);
    CHECK(segment_hops(inst, witness_parsing(inst, cov({1})),
                       inst.segments.Y[0]) == kRowOnlyP);
    CHECK(segment_hops(inst, witness_parsing(inst, cov({2})),
                       inst.segments.Y[0]) == kRowOnlyQ);
  }
  SUBCASE("triangle instance with levels") {
    ReductionInstance inst = build_reduction(k3(), {2, 3});
    // cover {1,2}: edge (1,2) has both endpoints, (1,3) and (2,3) only p.
    Parsing w12 = witness_parsing(inst, cov({1, 2}));
    CHECK(segment_hops(inst, w12, inst.segments.Y[0]) == kRowBoth);
    CHECK(segment_hops(inst, w12, inst.segments.Y[1]) == kRowOnlyP);
    CHECK(segment_hops(inst, w12, inst.segments.Y[2]) == kRowOnlyP);
    // cover {2,3}: edges (1,2) and (1,3) keep only q, (2,3) both.
    Parsing w23 = witness_parsing(inst, cov({2, 3}));
    CHECK(segment_hops(inst, w23, inst.segments.Y[0]) == kRowOnlyQ);
    CHECK(segment_hops(inst, w23, inst.segments.Y[1]) == kRowOnlyQ);
    CHECK(segment_hops(inst, w23, inst.segments.Y[2]) == kRowBoth);
  }
}

namespace {

// Parsing of the single-edge instance that selects no vertex: P as
// singletons, both X blocks in two phrases, Y_1 in the requested shape.
// shape 0: |v1' v1|e1|$1|v2' v2|e1 $1 #e1|      (five phrases)
// shape 1: |v1' v1|e1 $1|v2' v2|e1|$1 #e1|      (five phrases)
// shape 2: |v1' v1|e1 $1|v2' v2|e1 $1|#e1|      (five phrases)
Parsing k2_unselected(int shape) {
  Parsing p;
  for (uint32_t pos = 1; pos <= 6; ++pos)
    p.phrases.push_back(Phrase::literal(pos));
  p.phrases.push_back(Phrase::literal(7));        // v1'
  p.phrases.push_back(Phrase::copy(8, 9, 1));     // v1 #v1 (v1 from P)
  p.phrases.push_back(Phrase::literal(10));       // v2'
  p.phrases.push_back(Phrase::copy(11, 12, 3));   // v2 #v2 (v2 from P)
  p.phrases.push_back(Phrase::copy(13, 14, 7));   // v1' v1 from X_1
  if (shape == 0) {
    p.phrases.push_back(Phrase::literal(15));      // e1
    p.phrases.push_back(Phrase::literal(16));      // $1
    p.phrases.push_back(Phrase::copy(17, 18, 10)); // v2' v2 from X_2
    p.phrases.push_back(Phrase::copy(19, 21, 15)); // e1 $1 #e1
  } else {
    p.phrases.push_back(Phrase::copy(15, 16, 5));  // e1 $1 (e1 from P)
    p.phrases.push_back(Phrase::copy(17, 18, 10)); // v2' v2 from X_2
    if (shape == 1) {
      p.phrases.push_back(Phrase::literal(19));      // e1
      p.phrases.push_back(Phrase::copy(20, 21, 16)); // $1 #e1
    } else {
      p.phrases.push_back(Phrase::copy(19, 20, 5));  // e1 $1, sourced at the edge list
      p.phrases.push_back(Phrase::literal(21));      // #e1
    }
  }
  return p;
}

}  // namespace

TEST_CASE("golden hop rows: uncovered five-phrase shapes") {
  ReductionInstance inst = build_reduction(k2(), {1, 1});
  for (int shape : {0, 1, 2}) {
    Parsing p = k2_unselected(shape);
    REQUIRE(validate_parsing(inst.text, p).ok());
    auto row = segment_hops(inst, p, inst.segments.Y[0]);
    if (shape == 0) CHECK(row == kRowUncovI);
    if (shape == 1) CHECK(row == kRowUncovIIa);
    if (shape == 2) CHECK(row == kRowUncovIIb);
  }
}

TEST_CASE("cover extraction") {
  SUBCASE("witness parsings map back to their cover") {
    ReductionInstance i2 = build_reduction(k2(), {1, 2});
    CHECK(extract_cover(i2, witness_parsing(i2, cov({1}))).vertices ==
          std::vector<uint32_t>{1});
    CHECK(extract_cover(i2, witness_parsing(i2, cov({1, 2}))).vertices ==
          std::vector<uint32_t>{1, 2});
    ReductionInstance i3 = build_reduction(k3(), {2, 3});
    CHECK(extract_cover(i3, witness_parsing(i3, cov({1, 2}))).vertices ==
          std::vector<uint32_t>{1, 2});
    CHECK(extract_cover(i3, witness_parsing(i3, cov({2, 3}))).vertices ==
          std::vector<uint32_t>{2, 3});
  }

  SUBCASE("a parsing selecting no vertex falls through to the edge phase") {
    ReductionInstance inst = build_reduction(k2(), {1, 1});
    VertexCover c = extract_cover(inst, k2_unselected(0));
    CHECK(c.vertices == std::vector<uint32_t>{1});  // smaller endpoint
  }

  SUBCASE("invalid parsings are rejected") {
    ReductionInstance inst = build_reduction(k2(), {1, 1});
    Parsing bogus;
    bogus.phrases.push_back(Phrase::literal(1));
    CHECK_THROWS_AS((void)extract_cover(inst, bogus), InvalidParsingError);
  }

  SUBCASE("bound holds for hop-bounded greedy parsings") {
    for (auto [g, cc, ell] :
         {std::tuple<Graph, uint32_t, uint32_t>{k2(), 1, 2},
          std::tuple<Graph, uint32_t, uint32_t>{k3(), 2, 3},
          std::tuple<Graph, uint32_t, uint32_t>{c4(), 2, 4}}) {
      ReductionInstance inst = build_reduction(g, {cc, ell});
      Parsing phi = greedy_bounded_blz(inst.text, cc);
      REQUIRE(validate_parsing(inst.text, phi).ok());
      REQUIRE(compute_hops(inst.text, phi).hop_max <= cc);
      VertexCover c = extract_cover(inst, phi);
      CHECK(is_cover(g, c));
      uint64_t floor = 4ull * g.n + 6ull * g.m() + uint64_t{ell} * (cc - 1);
      REQUIRE(phi.size() >= floor);
      CHECK(c.size() <= phi.size() - floor);
    }
  }
}

TEST_CASE("exact vertex cover oracle") {
  CHECK(vertex_cover_exact(k2()).size() == 1);
  CHECK(vertex_cover_exact(k3()).size() == 2);
  CHECK(vertex_cover_exact(c4()).size() == 2);
  CHECK(vertex_cover_exact(edgeless(5)).size() == 0);
  CHECK_THROWS_AS((void)vertex_cover_exact(edgeless(21)), PreconditionError);

  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = random_graph(rng, 10, 16);
    VertexCover c = vertex_cover_exact(g);
    CHECK(is_cover(g, c));
    CHECK(c.size() == vc_bruteforce(g));
  }
}
