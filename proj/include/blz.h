#ifndef BLZ_H
#define BLZ_H

/**
 * C interface to the bounded-access Lempel-Ziv toolkit.
 *
 * Parsings split a string into phrases that are either one literal symbol or
 * a copy of earlier text plus one trailing literal. Every non-final position
 * of a copy phrase is reached through its source; the number of indirections
 * is the position's hop count. Parsers here either ignore hops (classic
 * greedy), keep them under a ceiling c greedily, or minimize the phrase
 * count under the ceiling exactly. A graph reduction connects minimum vertex
 * covers to minimum hop-bounded parsings, and square-free words witness how
 * expensive the ceiling can get.
 *
 * Conventions:
 *  - Every function returns BLZ_OK (0) or a negative blz_status; on failure
 *    blz_last_error() describes the problem (thread-local, overwritten by
 *    the next failing call on the same thread).
 *  - Objects come back through out-parameters as opaque handles that must be
 *    released with the matching _free function. Handles are independent;
 *    inputs are never retained.
 *  - const char** out-parameters hand out pointers owned by the queried
 *    handle, valid until that handle is freed.
 *  - All string/parsing positions are 1-based.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BLZ_OK = 0,
  BLZ_ERROR_INVALID_ARGUMENT = -1, /**< null handle or malformed argument */
  BLZ_ERROR_IO = -2,               /**< file open/read/write failure */
  BLZ_ERROR_FORMAT = -3,           /**< malformed file or triple stream */
  BLZ_ERROR_INVALID_PARSING = -4,  /**< parsing does not fit the string */
  BLZ_ERROR_PRECONDITION = -5,     /**< domain precondition violated */
  BLZ_ERROR_RANGE = -6,            /**< position or buffer out of range */
  BLZ_ERROR_INTERNAL = -7          /**< unexpected internal failure */
} blz_status;

typedef struct blz_string blz_string;     /**< symbol string + alphabet */
typedef struct blz_parsing blz_parsing;   /**< phrase list */
typedef struct blz_triples blz_triples;   /**< encoded (offset,length,literal) stream */
typedef struct blz_graph blz_graph;       /**< undirected simple graph */
typedef struct blz_instance blz_instance; /**< graph-to-string reduction instance */

/** @return library version string, e.g. "1.0.0". */
const char* blz_version(void);

/** @return description of the current thread's most recent failure ("" if none). */
const char* blz_last_error(void);

/* -------------------------------------------------------------------------
 * Strings
 */

/**
 * Parses whitespace-separated tokens into a string; symbol ids are assigned
 * in first-appearance order. An empty or all-whitespace text yields the
 * empty string.
 */
int blz_string_from_text(const char* tokens, blz_string** out);

/** Reads a token-stream file ("alphabet"/"sym" header, then body tokens). */
int blz_string_load(const char* path, blz_string** out);

/** Writes the canonical token-stream form; never leaves partial files. */
int blz_string_save(const blz_string* s, const char* path);

int blz_string_length(const blz_string* s, uint32_t* out);

/** Number of symbols in the alphabet. */
int blz_string_sigma(const blz_string* s, uint32_t* out);

/** Token name at position pos (1-based); pointer owned by the handle. */
int blz_string_token(const blz_string* s, uint32_t pos, const char** out);

/** Same length and same token names position by position. */
int blz_string_equal(const blz_string* a, const blz_string* b, int* out);

void blz_string_free(blz_string* s);

/* -------------------------------------------------------------------------
 * Parsings
 */

/** Reads a parsing file (one "phrase <start> <end> <source>" line each). */
int blz_parsing_load(const char* path, blz_parsing** out);

int blz_parsing_save(const blz_parsing* p, const char* path);

/** Number of phrases. */
int blz_parsing_size(const blz_parsing* p, uint32_t* out);

/**
 * Phrase number `index` (1-based). *source is 0 for a literal phrase,
 * otherwise the 1-based start of the copied region.
 */
int blz_parsing_phrase(const blz_parsing* p, uint32_t index, uint32_t* start,
                       uint32_t* end, uint32_t* source);

void blz_parsing_free(blz_parsing* p);

/* -------------------------------------------------------------------------
 * Core operations
 */

/**
 * Checks that p is a valid parsing of s. Returns BLZ_OK with *ok = 0 when
 * the parsing is merely invalid (the violation list is then available from
 * blz_last_error()); returns an error only for null arguments.
 */
int blz_validate(const blz_string* s, const blz_parsing* p, int* ok);

/**
 * Hop numbers of every position. `hops` may be NULL to fetch only the
 * maximum; otherwise it receives length(s) entries and `cap` must be at
 * least that (BLZ_ERROR_RANGE otherwise). Positions ending a phrase have
 * hop 0; every other position has its source's hop plus one.
 */
int blz_hops(const blz_string* s, const blz_parsing* p, uint32_t* hops,
             uint32_t cap, uint32_t* hop_max);

/**
 * Triple stream of a valid parsing: (0, 0, literal) for literal phrases,
 * (source, length-1, final literal) for copy phrases.
 */
int blz_encode(const blz_string* s, const blz_parsing* p, blz_triples** out);

/** Rebuilds the string a triple stream encodes (BLZ_ERROR_FORMAT if malformed). */
int blz_decode(const blz_triples* t, blz_string** out);

/**
 * Random access to position pos of the encoded string without decoding:
 * *symbol receives the token name (owned by t), *accesses the number of
 * triples read, which is the position's hop count plus one.
 */
int blz_access(const blz_triples* t, uint32_t pos, const char** symbol,
               uint32_t* accesses);

/* -------------------------------------------------------------------------
 * Triple streams
 */

int blz_triples_load(const char* path, blz_triples** out);
int blz_triples_save(const blz_triples* t, const char* path);
int blz_triples_count(const blz_triples* t, uint32_t* out);

/** Triple number `index` (1-based); *literal is owned by the handle. */
int blz_triples_get(const blz_triples* t, uint32_t index, uint32_t* offset,
                    uint32_t* length, const char** literal);

void blz_triples_free(blz_triples* t);

/* -------------------------------------------------------------------------
 * Parsers
 */

/**
 * Greedy longest-match parsing (hop counts unconstrained). Minimizes the
 * phrase count; among longest sources the earliest is used.
 */
int blz_parse_greedy(const blz_string* s, blz_parsing** out);

/**
 * Exhaustive minimum phrase count over all valid parsings; refuses strings
 * longer than 16 symbols (BLZ_ERROR_PRECONDITION). Oracle for tests.
 */
int blz_parse_min_bruteforce(const blz_string* s, uint32_t* size);

/**
 * Greedy parsing that keeps every hop count at most c. c = 0 degenerates to
 * one literal phrase per position.
 */
int blz_parse_bounded(const blz_string* s, uint32_t c, blz_parsing** out);

/** Resource limits for blz_parse_exact; zero fields mean "default". */
typedef struct {
  uint64_t max_nodes;    /**< search nodes before giving up (default 1e8) */
  double time_limit_sec; /**< wall-clock limit (default 600) */
  uint32_t upper_bound;  /**< only look for parsings at most this large */
  uint32_t threads;      /**< accepted for stability; results never depend on it */
} blz_budget;

typedef struct {
  uint32_t size;       /**< phrases in the returned parsing */
  int proven_optimal;  /**< 1 iff minimality was proven within the budget */
  uint64_t nodes;      /**< search nodes explored */
} blz_solve_stats;

/**
 * Minimum-size parsing with every hop count at most c, by exhaustive branch
 * and bound over phrase boundaries and sources. When the budget runs out the
 * best parsing found so far is returned and stats->proven_optimal is 0 —
 * never a silent failure. `budget` and `stats` may be NULL.
 */
int blz_parse_exact(const blz_string* s, uint32_t c, const blz_budget* budget,
                    blz_parsing** out, blz_solve_stats* stats);

/* -------------------------------------------------------------------------
 * Graphs and the cover reduction
 */

/**
 * Builds a graph from m edge endpoint pairs (1-based). Rejects self-loops,
 * duplicate edges, and out-of-range endpoints.
 */
int blz_graph_new(uint32_t n, uint32_t m, const uint32_t* us,
                  const uint32_t* vs, blz_graph** out);

/** Reads a graph file: "<n> <m>" then one "<u> <v>" line per edge. */
int blz_graph_load(const char* path, blz_graph** out);
int blz_graph_save(const blz_graph* g, const char* path);
int blz_graph_counts(const blz_graph* g, uint32_t* n, uint32_t* m);
void blz_graph_free(blz_graph* g);

/**
 * Builds the reduction text for the graph with hop ceiling c >= 1 and ell
 * >= 1 copies per level. The instance owns the text, the graph, and the
 * segment index used by witness construction and cover extraction.
 */
int blz_reduce(const blz_graph* g, uint32_t c, uint32_t ell,
               blz_instance** out);

/** Borrowed view of the instance text, valid while the instance lives. */
int blz_instance_text(const blz_instance* inst, const blz_string** out);

/** Writes the token-stream file and the segment-index sidecar. */
int blz_instance_save(const blz_instance* inst, const char* tokens_path,
                      const char* segments_path);

/**
 * Loads an exported instance pair. The sidecar's graph and parameters are
 * rebuilt and both files must match the rebuilt instance exactly
 * (BLZ_ERROR_FORMAT otherwise).
 */
int blz_instance_load(const char* tokens_path, const char* segments_path,
                      blz_instance** out);

void blz_instance_free(blz_instance* inst);

/**
 * The parsing size a vertex cover of size k certifies:
 * 4n + 6m + k + ell(c-1). Requires k <= n and ell > k.
 */
int blz_target_size(const blz_graph* g, uint32_t k, uint32_t c, uint32_t ell,
                    uint64_t* out);

/**
 * The parsing a vertex cover certifies, of exactly the target size for
 * |cover|, with every hop count at most the instance's c. `cover` holds
 * strictly ascending 1-based vertices; it must cover every edge
 * (BLZ_ERROR_PRECONDITION otherwise).
 */
int blz_witness(const blz_instance* inst, const uint32_t* cover,
                uint32_t cover_size, blz_parsing** out);

/**
 * Maps any valid parsing of the instance text to a vertex cover, writing at
 * most `cap` ascending vertices (cap >= n always suffices). For a parsing
 * respecting the instance's hop ceiling the cover size is bounded by
 * size(p) - (4n + 6m + ell(c-1)).
 */
int blz_extract_cover(const blz_instance* inst, const blz_parsing* p,
                      uint32_t* cover, uint32_t cap, uint32_t* out_size);

/**
 * Exact minimum vertex cover (branch and bound; refuses graphs with more
 * than 20 vertices). Writes the ascending cover into `cover` (up to `cap`
 * entries); *out_size is the cover number.
 */
int blz_vertex_cover(const blz_graph* g, uint32_t* cover, uint32_t cap,
                     uint32_t* out_size);

/** *out = 1 iff the ascending vertex list covers every edge. */
int blz_is_cover(const blz_graph* g, const uint32_t* cover,
                 uint32_t cover_size, int* out);

/* -------------------------------------------------------------------------
 * Square-free words and the parsing-size floor
 */

/**
 * Prefix of length n of the square-free fixed point of 0->012, 1->02, 2->1
 * over the alphabet {"0","1","2"}. The generator re-verifies square-freeness
 * on every call.
 */
int blz_thue(uint32_t length, blz_string** out);

/**
 * *out = 1 iff s contains no square (no immediate repetition xx of a
 * nonempty block x). When a square exists and the pointers are non-NULL,
 * square_start and square_len receive the first square's position and block
 * length.
 */
int blz_square_free(const blz_string* s, uint32_t* square_start,
                    uint32_t* square_len, int* out);

typedef struct {
  uint64_t n;            /**< string length */
  uint32_t c;            /**< hop ceiling audited against */
  uint32_t parsing_size; /**< phrases in the audited parsing */
  uint32_t lower_bound;  /**< ceil(n^(1/(c+1))) - 1 */
  uint32_t lz76_size;    /**< unconstrained greedy phrase count */
  double ratio;          /**< parsing_size / lz76_size */
  int ok;                /**< 1 iff parsing_size >= lower_bound */
} blz_bound_report;

/**
 * Audits the size floor of a hop-bounded parsing of a square-free string.
 * Rejects strings with squares and parsings that are invalid or exceed the
 * ceiling c (BLZ_ERROR_PRECONDITION / BLZ_ERROR_INVALID_PARSING).
 */
int blz_audit_bound(const blz_string* s, uint32_t c, const blz_parsing* p,
                    blz_bound_report* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BLZ_H */
