#include <random>
#include <string>
#include <vector>

#include "blz/core.hpp"
#include "blz/parsers.hpp"
#include "doctest.h"

using namespace blz;

namespace {

// Visits every string of the given length over {'a', 'a'+1, ...}.
template <typename F>
void for_all_strings(uint32_t alpha, uint32_t n, F&& f) {
  std::vector<uint32_t> digits(n, 0);
  while (true) {
    std::string chars;
    for (uint32_t d : digits) chars.push_back(static_cast<char>('a' + d));
    f(SymbolString::from_chars(chars));
    uint32_t i = 0;
    while (i < n && ++digits[i] == alpha) {
      digits[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
}

SymbolString random_string(std::mt19937_64& rng, uint32_t n, uint32_t alpha) {
  std::string chars;
  for (uint32_t i = 0; i < n; ++i)
    chars.push_back(static_cast<char>('a' + rng() % alpha));
  return SymbolString::from_chars(chars);
}

bool all_literal(const Parsing& p) {
  for (const Phrase& ph : p.phrases)
    if (!ph.is_literal()) return false;
  return true;
}

}  // namespace

TEST_CASE("greedy parsing of the worked examples") {
  Parsing p = greedy_lz76(SymbolString::from_chars("0011"));
  REQUIRE(p.size() == 3);
  CHECK(p.phrases[0] == Phrase::literal(1));
  CHECK(p.phrases[1] == Phrase::copy(2, 3, 1));
  CHECK(p.phrases[2] == Phrase::literal(4));

  Parsing a = greedy_lz76(SymbolString::from_chars("aaaa"));
  REQUIRE(a.size() == 2);
  CHECK(a.phrases[1] == Phrase::copy(2, 4, 1));

  Parsing ab = greedy_lz76(SymbolString::from_chars("abab"));
  REQUIRE(ab.size() == 3);
  CHECK(ab.phrases[2] == Phrase::copy(3, 4, 1));

  CHECK(greedy_lz76(SymbolString{}).size() == 0);
  CHECK(greedy_lz76(SymbolString::from_chars("z")).size() == 1);
}

TEST_CASE("exhaustive minimum on small examples") {
  CHECK(exact_lz_bruteforce(SymbolString::from_chars("a")) == 1);
  CHECK(exact_lz_bruteforce(SymbolString::from_chars("ab")) == 2);
  CHECK(exact_lz_bruteforce(SymbolString::from_chars("aaaa")) == 2);
  CHECK(exact_lz_bruteforce(SymbolString::from_chars("abab")) == 3);
  CHECK(exact_lz_bruteforce(SymbolString{}) == 0);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS((void)exact_lz_bruteforce(random_string(rng, 17, 2)),
                  PreconditionError);
}

TEST_CASE("greedy matches the exhaustive minimum (small strings)") {
  for (uint32_t n = 1; n <= 10; ++n) {
    for_all_strings(2, n, [&](const SymbolString& s) {
      CAPTURE(s.to_text());
      CHECK(greedy_lz76(s).size() == exact_lz_bruteforce(s));
    });
  }
  for (uint32_t n = 1; n <= 6; ++n) {
    for_all_strings(3, n, [&](const SymbolString& s) {
      CAPTURE(s.to_text());
      CHECK(greedy_lz76(s).size() == exact_lz_bruteforce(s));
    });
  }
}

TEST_CASE("hop-bounded greedy: worked examples") {
  // a^8 with ceiling 1: one literal plus one long self-overlapping copy.
  SymbolString a8 = SymbolString::from_chars("aaaaaaaa");
  Parsing p1 = greedy_bounded_blz(a8, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1.phrases[1] == Phrase::copy(2, 8, 1));
  CHECK(compute_hops(a8, p1).hop_max == 1);

  // aabbaabb: the ceiling blocks the long copy the greedy parser would take.
  SymbolString s = SymbolString::from_chars("aabbaabb");
  CHECK(greedy_lz76(s).size() == 4);
  Parsing pb = greedy_bounded_blz(s, 1);
  CHECK(pb.size() == 5);
  CHECK(compute_hops(s, pb).hop_max <= 1);

  // ceiling 0 forces singletons.
  Parsing p0 = greedy_bounded_blz(s, 0);
  CHECK(p0.size() == 8);
  CHECK(all_literal(p0));

  CHECK(greedy_bounded_blz(SymbolString{}, 1).size() == 0);
}

TEST_CASE("hop-bounded greedy: properties on random strings") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 150; ++iter) {
    uint32_t n = 1 + static_cast<uint32_t>(rng() % 60);
    uint32_t alpha = 2 + static_cast<uint32_t>(rng() % 3);
    SymbolString s = random_string(rng, n, alpha);
    for (uint32_t c : {0u, 1u, 2u, 3u}) {
      Parsing p = greedy_bounded_blz(s, c);
      CAPTURE(s.to_text());
      CAPTURE(c);
      REQUIRE(validate_parsing(s, p).ok());
      if (c == 0) {
        CHECK(all_literal(p));
      } else {
        CHECK(compute_hops(s, p).hop_max <= c);
      }
    }
    // a ceiling at least the length never binds, so the greedy choices are
    // the unconstrained ones and the sizes agree.
    CHECK(greedy_bounded_blz(s, n).size() == greedy_lz76(s).size());
  }
}

TEST_CASE("exact solver: worked examples") {
  // aabbaabb: the unconstrained minimum is 4 (|a|ab|ba|abb|), but that
  // parsing chains two hops through position 2, so under ceiling 1 the
  // optimum rises to 5 (e.g. |a|ab|b|aa|bb|, every copy sourced at a
  // phrase-end or literal position).
  SymbolString s = SymbolString::from_chars("aabbaabb");
  SolveResult r = exact_blz(s, 1);
  CHECK(r.size == 5);
  CHECK(r.proven_optimal);
  REQUIRE(validate_parsing(s, r.parsing).ok());
  CHECK(compute_hops(s, r.parsing).hop_max <= 1);

  SolveResult r0 = exact_blz(s, 0);
  CHECK(r0.size == 8);
  CHECK(r0.proven_optimal);
  CHECK(all_literal(r0.parsing));

  SolveResult ra = exact_blz(SymbolString::from_chars("aaaa"), 1);
  CHECK(ra.size == 2);
  CHECK(ra.proven_optimal);

  SolveResult rempty = exact_blz(SymbolString{}, 1);
  CHECK(rempty.size == 0);
  CHECK(rempty.proven_optimal);
}

TEST_CASE("exact solver: agreement and monotonicity on random strings") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    uint32_t n = 1 + static_cast<uint32_t>(rng() % 12);
    SymbolString s = random_string(rng, n, 2 + rng() % 2);
    CAPTURE(s.to_text());

    uint32_t unconstrained = exact_lz_bruteforce(s);
    uint32_t prev = UINT32_MAX;
    for (uint32_t c : {1u, 2u, 3u}) {
      SolveResult r = exact_blz(s, c);
      REQUIRE(validate_parsing(s, r.parsing).ok());
      CHECK(compute_hops(s, r.parsing).hop_max <= c);
      CHECK(r.proven_optimal);
      CHECK(r.size <= greedy_bounded_blz(s, c).size());
      CHECK(r.size >= unconstrained);
      // ceilings only relax as c grows.
      CHECK(r.size <= prev);
      prev = r.size;
    }
    // a ceiling of n never binds.
    CHECK(exact_blz(s, n).size == unconstrained);
  }
}

TEST_CASE("exact solver: determinism and thread-count independence") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 10; ++iter) {
    uint32_t n = 10 + static_cast<uint32_t>(rng() % 4);
    SymbolString s = random_string(rng, n, 2);
    SolveResult a = exact_blz(s, 2);
    SolveResult b = exact_blz(s, 2);
    SolverBudget four;
    four.threads = 4;
    SolveResult c = exact_blz(s, 2, four);
    CHECK(a.parsing == b.parsing);
    CHECK(a.parsing == c.parsing);
    CHECK(a.size == c.size);
  }
}

TEST_CASE("exact solver: budgets") {
  SymbolString s = SymbolString::from_chars("aabbaabbaabbaabb");

  SUBCASE("rejects empty budgets") {
    SolverBudget bad;
    bad.max_nodes = 0;
    CHECK_THROWS_AS((void)exact_blz(s, 1, bad), PreconditionError);
    SolverBudget bad2;
    bad2.time_limit_sec = 0.0;
    CHECK_THROWS_AS((void)exact_blz(s, 1, bad2), PreconditionError);
  }

  SUBCASE("node budget exhaustion still returns the incumbent") {
    SolverBudget tiny;
    tiny.max_nodes = 1;
    SolveResult r = exact_blz(s, 1, tiny);
    CHECK_FALSE(r.proven_optimal);
    CHECK(r.size == greedy_bounded_blz(s, 1).size());
    CHECK(validate_parsing(s, r.parsing).ok());
  }

  SUBCASE("a matching caller bound keeps the proof") {
    SolverBudget b;
    b.upper_bound = 5;
    SolveResult r = exact_blz(SymbolString::from_chars("aabbaabb"), 1, b);
    CHECK(r.size == 5);
    CHECK(r.proven_optimal);
  }

  SUBCASE("an unreachable caller bound forfeits the proof") {
    SolverBudget b;
    b.upper_bound = 4;  // the ceiling-1 optimum is 5
    SolveResult r = exact_blz(SymbolString::from_chars("aabbaabb"), 1, b);
    CHECK(r.size >= 5);
    CHECK_FALSE(r.proven_optimal);
  }
}
