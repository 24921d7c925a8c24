#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("fibonacci engine flags")
{
  auto e = fibonacci();
  CHECK(e->minimal() == Tri::yes);
  CHECK(e->aperiodic() == Tri::yes);
  CHECK(e->kind() == EngineKind::substitution);
}

TEST_CASE("fibonacci factors agree with the iterated substitution")
{
  auto e = fibonacci();
  auto word = fibonacci_word();
  for (std::size_t len = 0; len <= 14; ++len) {
    CAPTURE(len);
    auto got = rendered(e, allowed_words(e, len));
    CHECK(got == factors(word, len));
    CHECK(got.size() == len + 1);
  }
  CHECK(rendered(e, allowed_words(e, 2)) == std::set<std::string>{"aa", "ab", "ba"});
  CHECK(rendered(e, allowed_words(e, 3)) == std::set<std::string>{"aab", "aba", "baa", "bab"});
  CHECK_FALSE(is_allowed(e, letters(e, "bb")));
  CHECK(is_allowed(e, Letters()));
}

TEST_CASE("golden mean words avoid bb")
{
  auto e = golden();
  for (std::size_t len = 1; len <= 12; ++len) {
    std::set<std::string> expect;
    for (unsigned m = 0; m < (1u << len); ++m) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i)
        s += (m >> (len - 1 - i)) & 1 ? 'b' : 'a';
      if (s.find("bb") == std::string::npos)
        expect.insert(s);
    }
    CHECK(rendered(e, allowed_words(e, len)) == expect);
  }
  CHECK(is_irreducible(e));
}

TEST_CASE("Y engine")
{
  auto e = engine("houghton_y");
  CHECK(rendered(e, allowed_words(e, 2)) == std::set<std::string>{"aa", "ab", "bb"});
  CHECK(is_allowed(e, letters(e, "ab")));
  CHECK_FALSE(is_irreducible(e));
  CHECK(rendered(e, periodic_points(e, 1)) == std::set<std::string>{"a", "b"});
  CHECK_THROWS_AS(recurrence_bound(e, letters(e, "a")), Error);
  try {
    proper_recode(e, 1);
    FAIL("expected NotAperiodic");
  } catch (Error const &err) {
    CHECK(err.code() == ErrorCode::not_aperiodic);
  }
}

TEST_CASE("empty subshift")
{
  try {
    parse_subshift("alphabet: a\nkind: sft\nforbidden: aa\n");
    FAIL("expected EmptySubshift");
  } catch (Error const &err) {
    CHECK(err.code() == ErrorCode::empty_subshift);
  }
}

TEST_CASE("recurrence bound matches the largest gap in a long factor")
{
  auto e = fibonacci();
  auto word = fibonacci_word();
  for (std::string w : {"a", "b", "aab", "abaab"}) {
    // the least R such that every window of length R of the fixed point contains w
    int oracle = 0;
    for (std::size_t len = w.size();; ++len) {
      bool all = true;
      for (auto const &f : factors(word.substr(0, 4000), len))
        all = all && f.find(w) != std::string::npos;
      if (all) {
        oracle = static_cast<int>(len);
        break;
      }
    }
    CAPTURE(w);
    CHECK(recurrence_bound(e, letters(e, w)) == oracle);
  }
  CHECK(recurrence_bound(e, letters(e, "a")) == 2);
  CHECK(recurrence_bound(e, letters(e, "b")) == 3);
}

TEST_CASE("periodic points of small shifts")
{
  auto full = parse_subshift("alphabet: 0 1\nkind: sft\nforbidden:\n");
  CHECK(periodic_points(full, 2).size() == 4);
  auto proper = parse_subshift("alphabet: a b c\nkind: sft\nforbidden: aa bb cc\n");
  CHECK(periodic_points(proper, 1).empty());
}

TEST_CASE("sft approximations of fibonacci")
{
  auto e = fibonacci();
  auto x2 = sft_approximation(e, 2);
  CHECK(rendered(x2, allowed_words(x2, 6)) == rendered(golden(), allowed_words(golden(), 6)));
  auto x3 = sft_approximation(e, 3);
  for (std::size_t len = 0; len <= 3; ++len)
    CHECK(rendered(x3, allowed_words(x3, len)) == rendered(e, allowed_words(e, len)));
  auto g = golden();
  auto g2 = sft_approximation(g, 2);
  CHECK(rendered(g2, allowed_words(g2, 8)) == rendered(g, allowed_words(g, 8)));
}

TEST_CASE("proper recoding")
{
  auto e = fibonacci();
  for (int d : {1, 2, 4}) {
    auto [r, map] = proper_recode(e, d);
    CAPTURE(d);
    CHECK(is_proper(r, d));
    CHECK(r->alphabet().size() == allowed_words(e, static_cast<std::size_t>(map.block_length)).size());
    // no letter repeats within distance d
    for (auto const &w : allowed_words(r, static_cast<std::size_t>(d) + 1)) {
      for (std::size_t i = 1; i < w.size(); ++i)
        CHECK(w[i] != w[0]);
    }
    // the decoded language is the source language
    for (auto const &w : allowed_words(r, 3))
      CHECK(is_allowed(e, map.decode(w)));
  }
}

TEST_CASE("sturmian language is fibonacci up to letter exchange")
{
  auto s = engine("sturmian");
  double alpha = (std::sqrt(5.0) - 1) / 2;
  std::string mech;
  for (long n = 0; n < 5000; ++n)
    mech += (std::floor((n + 1) * alpha) - std::floor(n * alpha)) > 0 ? 'b' : 'a';
  for (std::size_t len = 1; len <= 8; ++len) {
    auto got = rendered(s, allowed_words(s, len));
    auto expect = factors(mech, len);
    std::set<std::string> swapped;
    for (auto w : expect) {
      for (auto &c : w)
        c = c == 'a' ? 'b' : 'a';
      swapped.insert(w);
    }
    CAPTURE(len);
    CHECK((got == expect || got == swapped));
  }
  // the canonical points sit one step apart on the same orbit: the sturmian point reads x(0) then the fixed point
  auto fw = text(fibonacci(), point_window(fibonacci(), 10));
  auto sw = text(s, point_window(s, 10));
  for (auto &c : sw)
    c = c == 'a' ? 'b' : 'a';
  CHECK(sw.substr(11) == fw.substr(10, 10));
}

TEST_CASE("point windows are allowed")
{
  for (auto name : {"fibonacci", "golden", "houghton_y", "houghton_yprime", "sturmian", "thue_morse"}) {
    auto e = engine(name);
    for (int m : {0, 2, 7}) {
      CAPTURE(name);
      auto w = point_window(e, m);
      CHECK(w.size() == static_cast<std::size_t>(2 * m + 1));
      CHECK(is_allowed(e, w));
    }
  }
}

TEST_CASE("language consistency")
{
  for (auto name : {"fibonacci", "golden", "thue_morse"}) {
    auto e = engine(name);
    for (std::size_t len = 1; len <= 9; ++len) {
      auto shorter = rendered(e, allowed_words(e, len - 1));
      for (auto const &w : allowed_words(e, len)) {
        auto t = text(e, w);
        CHECK(shorter.count(t.substr(1)));
        CHECK(shorter.count(t.substr(0, len - 1)));
      }
    }
  }
}
