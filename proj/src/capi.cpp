// C interface: thin wrappers that translate exceptions into status codes
// and expose the library types as opaque handles.

#include "blz.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "blz/core.hpp"
#include "blz/io.hpp"
#include "blz/parsers.hpp"
#include "blz/reduction.hpp"
#include "blz/squarefree.hpp"

struct blz_string {
  blz::SymbolString v;
};
struct blz_parsing {
  blz::Parsing v;
};
struct blz_triples {
  blz::TripleSeq v;
};
struct blz_graph {
  blz::Graph v;
};
struct blz_instance {
  blz::ReductionInstance v;
  blz_string text_view;  // borrowed out via blz_instance_text
};

namespace {

thread_local std::string g_error;

int fail(int code, std::string msg) {
  g_error = std::move(msg);
  return code;
}

// Runs the body and maps thrown library errors onto status codes.
template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const blz::FormatError& e) {
    return fail(BLZ_ERROR_FORMAT, e.what());
  } catch (const blz::IoError& e) {
    return fail(BLZ_ERROR_IO, e.what());
  } catch (const blz::InvalidParsingError& e) {
    return fail(BLZ_ERROR_INVALID_PARSING, e.what());
  } catch (const blz::PreconditionError& e) {
    return fail(BLZ_ERROR_PRECONDITION, e.what());
  } catch (const blz::RangeError& e) {
    return fail(BLZ_ERROR_RANGE, e.what());
  } catch (const std::exception& e) {
    return fail(BLZ_ERROR_INTERNAL, e.what());
  }
}

bool absent(const void* p) { return p == nullptr; }

int null_arg(const char* which) {
  return fail(BLZ_ERROR_INVALID_ARGUMENT,
              std::string(which) + " must not be null");
}

blz::VertexCover cover_from(const uint32_t* vertices, uint32_t count) {
  blz::VertexCover c;
  c.vertices.assign(vertices, vertices + count);
  return c;
}

// Copies an ascending vertex list into a caller buffer.
int write_cover_out(const blz::VertexCover& c, uint32_t* out, uint32_t cap,
                    uint32_t* out_size) {
  if (c.size() > cap) {
    return fail(BLZ_ERROR_RANGE, "cover buffer holds " + std::to_string(cap) +
                                     " entries, need " +
                                     std::to_string(c.size()));
  }
  if (c.size() > 0) std::copy(c.vertices.begin(), c.vertices.end(), out);
  *out_size = c.size();
  return BLZ_OK;
}

blz_instance* make_instance(blz::ReductionInstance inst) {
  auto* h = new blz_instance{std::move(inst), {}};
  h->text_view.v = h->v.text;
  return h;
}

}  // namespace

extern "C" {

const char* blz_version(void) { return "1.0.0"; }

const char* blz_last_error(void) { return g_error.c_str(); }

/* ---------------------------------------------------------------- strings */

int blz_string_from_text(const char* tokens, blz_string** out) {
  if (absent(tokens)) return null_arg("tokens");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_string{blz::SymbolString::from_text(tokens)};
    return BLZ_OK;
  });
}

int blz_string_load(const char* path, blz_string** out) {
  if (absent(path)) return null_arg("path");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_string{blz::read_string_file(blz::load_file(path))};
    return BLZ_OK;
  });
}

int blz_string_save(const blz_string* s, const char* path) {
  if (absent(s)) return null_arg("s");
  if (absent(path)) return null_arg("path");
  return guarded([&] {
    blz::save_file(path, blz::write_string_file(s->v));
    return BLZ_OK;
  });
}

int blz_string_length(const blz_string* s, uint32_t* out) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  *out = s->v.length();
  return BLZ_OK;
}

int blz_string_sigma(const blz_string* s, uint32_t* out) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  *out = s->v.table.size();
  return BLZ_OK;
}

int blz_string_token(const blz_string* s, uint32_t pos, const char** out) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = s->v.token(pos).c_str();
    return BLZ_OK;
  });
}

int blz_string_equal(const blz_string* a, const blz_string* b, int* out) {
  if (absent(a)) return null_arg("a");
  if (absent(b)) return null_arg("b");
  if (absent(out)) return null_arg("out");
  *out = a->v.same_content(b->v) ? 1 : 0;
  return BLZ_OK;
}

void blz_string_free(blz_string* s) { delete s; }

/* --------------------------------------------------------------- parsings */

int blz_parsing_load(const char* path, blz_parsing** out) {
  if (absent(path)) return null_arg("path");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_parsing{blz::read_parsing_file(blz::load_file(path))};
    return BLZ_OK;
  });
}

int blz_parsing_save(const blz_parsing* p, const char* path) {
  if (absent(p)) return null_arg("p");
  if (absent(path)) return null_arg("path");
  return guarded([&] {
    blz::save_file(path, blz::write_parsing_file(p->v));
    return BLZ_OK;
  });
}

int blz_parsing_size(const blz_parsing* p, uint32_t* out) {
  if (absent(p)) return null_arg("p");
  if (absent(out)) return null_arg("out");
  *out = p->v.size();
  return BLZ_OK;
}

int blz_parsing_phrase(const blz_parsing* p, uint32_t index, uint32_t* start,
                       uint32_t* end, uint32_t* source) {
  if (absent(p)) return null_arg("p");
  if (absent(start)) return null_arg("start");
  if (absent(end)) return null_arg("end");
  if (absent(source)) return null_arg("source");
  if (index < 1 || index > p->v.size()) {
    return fail(BLZ_ERROR_RANGE,
                "phrase index " + std::to_string(index) + " outside [1, " +
                    std::to_string(p->v.size()) + "]");
  }
  const blz::Phrase& ph = p->v.phrases[index - 1];
  *start = ph.start;
  *end = ph.end;
  *source = ph.source.value_or(0);
  return BLZ_OK;
}

void blz_parsing_free(blz_parsing* p) { delete p; }

/* ---------------------------------------------------------- core operations */

int blz_validate(const blz_string* s, const blz_parsing* p, int* ok) {
  if (absent(s)) return null_arg("s");
  if (absent(p)) return null_arg("p");
  if (absent(ok)) return null_arg("ok");
  blz::ValidationReport report = blz::validate_parsing(s->v, p->v);
  *ok = report.ok() ? 1 : 0;
  if (!report.ok()) g_error = report.to_string();
  return BLZ_OK;
}

int blz_hops(const blz_string* s, const blz_parsing* p, uint32_t* hops,
             uint32_t cap, uint32_t* hop_max) {
  if (absent(s)) return null_arg("s");
  if (absent(p)) return null_arg("p");
  if (absent(hop_max)) return null_arg("hop_max");
  return guarded([&]() -> int {
    blz::HopProfile hp = blz::compute_hops(s->v, p->v);
    if (hops != nullptr) {
      if (cap < hp.hops.size()) {
        return fail(BLZ_ERROR_RANGE,
                    "hops buffer holds " + std::to_string(cap) +
                        " entries, need " + std::to_string(hp.hops.size()));
      }
      std::copy(hp.hops.begin(), hp.hops.end(), hops);
    }
    *hop_max = hp.hop_max;
    return BLZ_OK;
  });
}

int blz_encode(const blz_string* s, const blz_parsing* p, blz_triples** out) {
  if (absent(s)) return null_arg("s");
  if (absent(p)) return null_arg("p");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_triples{blz::encode(s->v, p->v)};
    return BLZ_OK;
  });
}

int blz_decode(const blz_triples* t, blz_string** out) {
  if (absent(t)) return null_arg("t");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_string{blz::decode(t->v)};
    return BLZ_OK;
  });
}

int blz_access(const blz_triples* t, uint32_t pos, const char** symbol,
               uint32_t* accesses) {
  if (absent(t)) return null_arg("t");
  if (absent(symbol)) return null_arg("symbol");
  if (absent(accesses)) return null_arg("accesses");
  return guarded([&] {
    blz::AccessResult r = blz::access_char(t->v, pos);
    *symbol = t->v.table.name(r.symbol).c_str();
    *accesses = r.accesses;
    return BLZ_OK;
  });
}

/* ---------------------------------------------------------- triple streams */

int blz_triples_load(const char* path, blz_triples** out) {
  if (absent(path)) return null_arg("path");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_triples{blz::read_triples_file(blz::load_file(path))};
    return BLZ_OK;
  });
}

int blz_triples_save(const blz_triples* t, const char* path) {
  if (absent(t)) return null_arg("t");
  if (absent(path)) return null_arg("path");
  return guarded([&] {
    blz::save_file(path, blz::write_triples_file(t->v));
    return BLZ_OK;
  });
}

int blz_triples_count(const blz_triples* t, uint32_t* out) {
  if (absent(t)) return null_arg("t");
  if (absent(out)) return null_arg("out");
  *out = static_cast<uint32_t>(t->v.triples.size());
  return BLZ_OK;
}

int blz_triples_get(const blz_triples* t, uint32_t index, uint32_t* offset,
                    uint32_t* length, const char** literal) {
  if (absent(t)) return null_arg("t");
  if (absent(offset)) return null_arg("offset");
  if (absent(length)) return null_arg("length");
  if (absent(literal)) return null_arg("literal");
  if (index < 1 || index > t->v.triples.size()) {
    return fail(BLZ_ERROR_RANGE,
                "triple index " + std::to_string(index) + " outside [1, " +
                    std::to_string(t->v.triples.size()) + "]");
  }
  return guarded([&] {
    const blz::EncodedTriple& tr = t->v.triples[index - 1];
    *offset = tr.offset;
    *length = tr.length;
    *literal = t->v.table.name(tr.literal).c_str();
    return BLZ_OK;
  });
}

void blz_triples_free(blz_triples* t) { delete t; }

/* ---------------------------------------------------------------- parsers */

int blz_parse_greedy(const blz_string* s, blz_parsing** out) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_parsing{blz::greedy_lz76(s->v)};
    return BLZ_OK;
  });
}

int blz_parse_min_bruteforce(const blz_string* s, uint32_t* size) {
  if (absent(s)) return null_arg("s");
  if (absent(size)) return null_arg("size");
  return guarded([&] {
    *size = blz::exact_lz_bruteforce(s->v);
    return BLZ_OK;
  });
}

int blz_parse_bounded(const blz_string* s, uint32_t c, blz_parsing** out) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_parsing{blz::greedy_bounded_blz(s->v, c)};
    return BLZ_OK;
  });
}

int blz_parse_exact(const blz_string* s, uint32_t c, const blz_budget* budget,
                    blz_parsing** out, blz_solve_stats* stats) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    blz::SolverBudget b;
    if (budget != nullptr) {
      if (budget->max_nodes != 0) b.max_nodes = budget->max_nodes;
      if (budget->time_limit_sec != 0.0)
        b.time_limit_sec = budget->time_limit_sec;
      b.upper_bound = budget->upper_bound;
      if (budget->threads != 0) b.threads = budget->threads;
    }
    blz::SolveResult r = blz::exact_blz(s->v, c, b);
    *out = new blz_parsing{std::move(r.parsing)};
    if (stats != nullptr) {
      stats->size = r.size;
      stats->proven_optimal = r.proven_optimal ? 1 : 0;
      stats->nodes = r.nodes;
    }
    return BLZ_OK;
  });
}

/* ------------------------------------------------- graphs and the reduction */

int blz_graph_new(uint32_t n, uint32_t m, const uint32_t* us,
                  const uint32_t* vs, blz_graph** out) {
  if (m > 0 && absent(us)) return null_arg("us");
  if (m > 0 && absent(vs)) return null_arg("vs");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    blz::Graph g;
    g.n = n;
    g.edges.reserve(m);
    for (uint32_t i = 0; i < m; ++i) g.edges.emplace_back(us[i], vs[i]);
    g.validate();
    *out = new blz_graph{std::move(g)};
    return BLZ_OK;
  });
}

int blz_graph_load(const char* path, blz_graph** out) {
  if (absent(path)) return null_arg("path");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_graph{blz::read_graph_file(blz::load_file(path))};
    return BLZ_OK;
  });
}

int blz_graph_save(const blz_graph* g, const char* path) {
  if (absent(g)) return null_arg("g");
  if (absent(path)) return null_arg("path");
  return guarded([&] {
    blz::save_file(path, blz::write_graph_file(g->v));
    return BLZ_OK;
  });
}

int blz_graph_counts(const blz_graph* g, uint32_t* n, uint32_t* m) {
  if (absent(g)) return null_arg("g");
  if (absent(n)) return null_arg("n");
  if (absent(m)) return null_arg("m");
  *n = g->v.n;
  *m = g->v.m();
  return BLZ_OK;
}

void blz_graph_free(blz_graph* g) { delete g; }

int blz_reduce(const blz_graph* g, uint32_t c, uint32_t ell,
               blz_instance** out) {
  if (absent(g)) return null_arg("g");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = make_instance(blz::build_reduction(g->v, {c, ell}));
    return BLZ_OK;
  });
}

int blz_instance_text(const blz_instance* inst, const blz_string** out) {
  if (absent(inst)) return null_arg("inst");
  if (absent(out)) return null_arg("out");
  *out = &inst->text_view;
  return BLZ_OK;
}

int blz_instance_save(const blz_instance* inst, const char* tokens_path,
                      const char* segments_path) {
  if (absent(inst)) return null_arg("inst");
  if (absent(tokens_path)) return null_arg("tokens_path");
  if (absent(segments_path)) return null_arg("segments_path");
  return guarded([&] {
    blz::save_file(tokens_path, blz::write_string_file(inst->v.text));
    blz::save_file(segments_path, blz::write_segments_file(inst->v));
    return BLZ_OK;
  });
}

int blz_instance_load(const char* tokens_path, const char* segments_path,
                      blz_instance** out) {
  if (absent(tokens_path)) return null_arg("tokens_path");
  if (absent(segments_path)) return null_arg("segments_path");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = make_instance(blz::read_instance(blz::load_file(tokens_path),
                                            blz::load_file(segments_path)));
    return BLZ_OK;
  });
}

void blz_instance_free(blz_instance* inst) { delete inst; }

int blz_target_size(const blz_graph* g, uint32_t k, uint32_t c, uint32_t ell,
                    uint64_t* out) {
  if (absent(g)) return null_arg("g");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = blz::target_size(g->v, k, {c, ell});
    return BLZ_OK;
  });
}

int blz_witness(const blz_instance* inst, const uint32_t* cover,
                uint32_t cover_size, blz_parsing** out) {
  if (cover_size > 0 && absent(cover)) return null_arg("cover");
  if (absent(inst)) return null_arg("inst");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_parsing{
        blz::witness_parsing(inst->v, cover_from(cover, cover_size))};
    return BLZ_OK;
  });
}

int blz_extract_cover(const blz_instance* inst, const blz_parsing* p,
                      uint32_t* cover, uint32_t cap, uint32_t* out_size) {
  if (absent(inst)) return null_arg("inst");
  if (absent(p)) return null_arg("p");
  if (absent(cover) && cap > 0) return null_arg("cover");
  if (absent(out_size)) return null_arg("out_size");
  return guarded([&] {
    blz::VertexCover c = blz::extract_cover(inst->v, p->v);
    return write_cover_out(c, cover, cap, out_size);
  });
}

int blz_vertex_cover(const blz_graph* g, uint32_t* cover, uint32_t cap,
                     uint32_t* out_size) {
  if (absent(g)) return null_arg("g");
  if (absent(cover) && cap > 0) return null_arg("cover");
  if (absent(out_size)) return null_arg("out_size");
  return guarded([&] {
    blz::VertexCover c = blz::vertex_cover_exact(g->v);
    return write_cover_out(c, cover, cap, out_size);
  });
}

int blz_is_cover(const blz_graph* g, const uint32_t* cover,
                 uint32_t cover_size, int* out) {
  if (absent(g)) return null_arg("g");
  if (cover_size > 0 && absent(cover)) return null_arg("cover");
  if (absent(out)) return null_arg("out");
  for (uint32_t i = 1; i < cover_size; ++i) {
    if (cover[i] <= cover[i - 1]) {
      return fail(BLZ_ERROR_INVALID_ARGUMENT,
                  "cover vertices must be strictly ascending");
    }
  }
  *out = blz::is_cover(g->v, cover_from(cover, cover_size)) ? 1 : 0;
  return BLZ_OK;
}

/* ------------------------------------------------------- square-free words */

int blz_thue(uint32_t length, blz_string** out) {
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    *out = new blz_string{blz::thue_word(length)};
    return BLZ_OK;
  });
}

int blz_square_free(const blz_string* s, uint32_t* square_start,
                    uint32_t* square_len, int* out) {
  if (absent(s)) return null_arg("s");
  if (absent(out)) return null_arg("out");
  auto sq = blz::find_square(s->v);
  *out = sq.has_value() ? 0 : 1;
  if (sq.has_value()) {
    if (square_start != nullptr) *square_start = sq->first;
    if (square_len != nullptr) *square_len = sq->second;
  }
  return BLZ_OK;
}

int blz_audit_bound(const blz_string* s, uint32_t c, const blz_parsing* p,
                    blz_bound_report* out) {
  if (absent(s)) return null_arg("s");
  if (absent(p)) return null_arg("p");
  if (absent(out)) return null_arg("out");
  return guarded([&] {
    blz::BoundReport r = blz::audit_lower_bound(s->v, c, p->v);
    out->n = r.n;
    out->c = r.c;
    out->parsing_size = r.parsing_size;
    out->lower_bound = r.lower_bound;
    out->lz76_size = r.lz76_size;
    out->ratio = r.ratio;
    out->ok = r.ok ? 1 : 0;
    return BLZ_OK;
  });
}

} /* extern "C" */
