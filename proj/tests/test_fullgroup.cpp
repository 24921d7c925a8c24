#include "cantorfull/kernels.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// f and g agree at every centre of y away from the ends
bool agree_on(Element const &f, Element const &g, Letters const &y, long margin)
{
  for (long c = margin; c + margin < static_cast<long>(y.size()); ++c) {
    if (f.displacement_at(y, c) != g.displacement_at(y, c))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("constant tables")
{
  auto e = fibonacci();
  auto phi = shift(e, 1);
  CHECK(phi.bijective());
  CHECK(equal(compose(phi, shift(e, 2)), shift(e, 3)));
  CHECK(equal(inverse(phi), shift(e, -1)));
  CHECK(is_identity(compose(phi, inverse(phi))));
  auto cf = canonical_form(shift(e, 3));
  CHECK(cf.radius == 0);
  CHECK(cf.table == std::vector<int>{3, 3});
}

TEST_CASE("a non-bijective table is rejected with a witness")
{
  auto e = fibonacci();
  try {
    make_element(e, 0, {0, 1});
    FAIL("expected a bijectivity error");
  } catch (Error const &err) {
    bool code = err.code() == ErrorCode::not_injective || err.code() == ErrorCode::not_surjective;
    CHECK(code);
    CHECK_FALSE(err.witness().empty());
  }
}

TEST_CASE("the Y transposition is an involution")
{
  auto e = engine("houghton_y");
  auto t = element_from(e, 2, [&](std::string_view w) {
    auto s = text(e, Letters(w.substr(2)));
    return s == "abb" ? 1 : s == "aab" ? -1 : 0;
  });
  CHECK(t.bijective());
  CHECK(is_identity(compose(t, t)));
  CHECK_FALSE(is_identity(t));
  CHECK(equal(t, houghton_transposition(e, HoughtonSpace::y)));
}

TEST_CASE("identity on non-free engines")
{
  auto p2 = engine("period2");
  CHECK(is_identity(shift(p2, 2)));
  CHECK_FALSE(is_identity(shift(p2, 1)));
  auto y = engine("houghton_y");
  // phi on [b] is not injective, but it is still not the identity
  auto on_b = make_semigroup_element(y, 0, {0, 1});
  CHECK_FALSE(is_identity(on_b));
}

TEST_CASE("3-cycles")
{
  auto e = fibonacci();
  auto u = cyl(e, -1, "aab");
  REQUIRE(is_good(u));
  auto s = sigma_U(u);
  CHECK(order(s).finite);
  CHECK(order(s).n == 3);
  CHECK(equal(inverse(s), compose(s, s)));
  CHECK_FALSE(equal(s, inverse(s)));
  CHECK(is_subset(support(s), unite(unite(shift_image(u, -1), u), shift_image(u, 1))));
  CHECK(is_empty(support(identity(e))));
  CHECK(support(shift(e, 1)) == CloSet::full(e));
  auto phi = shift(e, 1);
  auto back = compose(compose(compose(phi, s), inverse(s)), inverse(phi));
  auto cf = canonical_form(back);
  CHECK(cf.radius == 0);
  CHECK(cf.table == std::vector<int>{0, 0});
}

TEST_CASE("canonical forms drop unread positions")
{
  auto e = fibonacci();
  auto s = sigma_U(cyl(e, -1, "aab"));
  auto padded = element_from(e, 3, [&](std::string_view w) { return s.displacement_at(w, 3); });
  CHECK(canonical_form(padded) == canonical_form(s));
  CHECK(canonical_form(padded).radius == 2);
  CHECK(equal(padded, s));
}

TEST_CASE("dump round trip")
{
  std::mt19937 rng(7);
  for (auto const &name : {"fibonacci", "golden"}) {
    auto e = engine(name);
    for (auto const &f : random_elements(e, 20, rng)) {
      auto g = parse_dump(e, f.dump());
      CHECK(equal(f, g));
      CHECK(g.dump() == f.dump());
    }
  }
}

TEST_CASE("group law against pointwise evaluation")
{
  std::mt19937 rng(2024);
  auto e = fibonacci();
  auto y = letters(e, fibonacci_word(16));
  auto fs = random_elements(e, 30, rng);
  REQUIRE(fs.size() == 30);
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    auto const &f = fs[i];
    auto const &g = fs[i + 1];
    auto fg = compose(f, g);
    bool ok = true;
    for (long c = 40; c + 40 < static_cast<long>(y.size()); ++c) {
      long direct = act(f, y, act(g, y, c));
      ok = ok && act(fg, y, c) == direct;
      ok = ok && act(inverse(f), y, act(f, y, c)) == c;
    }
    CHECK(ok);
  }
}

TEST_CASE("golden mean group law on random strings")
{
  std::mt19937 rng(99);
  auto e = golden();
  auto y = letters(e, golden_word(rng, 4000));
  auto fs = random_elements(e, 20, rng);
  for (std::size_t i = 0; i + 2 < fs.size(); ++i) {
    auto lhs = compose(compose(fs[i], fs[i + 1]), fs[i + 2]);
    auto rhs = compose(fs[i], compose(fs[i + 1], fs[i + 2]));
    CHECK(equal(lhs, rhs));
    CHECK(agree_on(lhs, rhs, y, 40));
    CHECK(equal(inverse(inverse(fs[i])), fs[i]));
  }
}

TEST_CASE("order by iteration")
{
  auto e = fibonacci();
  auto y = letters(e, fibonacci_word(16));
  for (std::string a : {"a", "b", "aab"}) {
    auto f = compose(shift(e, -1), first_return(cyl(e, 0, a)));
    auto r = order(f);
    REQUIRE(r.finite);
    // the least n with f^n fixing every sampled point
    long oracle = 0;
    for (long n = 1; n <= 720 && !oracle; ++n) {
      bool fixed = true;
      for (long c = 60; c + 60 < static_cast<long>(y.size()) && fixed; ++c) {
        long p = c;
        for (long k = 0; k < n; ++k)
          p = act(f, y, p);
        fixed = p == c;
      }
      if (fixed)
        oracle = n;
    }
    CAPTURE(a);
    CHECK(r.n == oracle);
  }
  CHECK(order(identity(e)).n == 1);
  CHECK_FALSE(order(shift(e, 1), 50).finite);
}

TEST_CASE("closet algebra")
{
  auto e = fibonacci();
  auto a0 = cyl(e, 0, "a");
  CHECK(complement(complement(a0)) == a0);
  CHECK(shift_image(a0, 1) == cyl(e, 1, "a"));
  auto aa = intersect(a0, cyl(e, 1, "a"));
  CHECK_FALSE(is_empty(aa));
  CHECK(aa == cyl(e, 0, "aa"));
  CHECK(is_disjoint(cyl(e, 0, "b"), cyl(e, 1, "b")));
  CHECK(unite(a0, cyl(e, 0, "b")) == CloSet::full(e));
  CHECK(difference(a0, a0) == CloSet::empty(e));
  auto s = sigma_U(cyl(e, -1, "aab"));
  CHECK(element_image(cyl(e, -1, "aab"), s) == shift_image(cyl(e, -1, "aab"), 1));
  CHECK(preimage(element_image(a0, s), s) == a0);
}

TEST_CASE("ball sizes")
{
  auto e = fibonacci();
  CHECK(ball_sizes({shift(e, 1)}, 3).sizes == std::vector<std::size_t>{3, 5, 7});
  auto s = sigma_U(cyl(e, -1, "aab"));
  CHECK(ball_sizes({s}, 2).sizes == std::vector<std::size_t>{3, 3});
  auto gens = std::vector<Element>{shift(e, 1), s};
  auto omp = ball_sizes(gens, 4, true);
  auto serial = ball_sizes_serial(gens, 4, true);
  CHECK(omp.sizes == serial.sizes);
  REQUIRE(omp.elements.size() == serial.elements.size());
  for (std::size_t i = 0; i < omp.elements.size(); ++i)
    CHECK(omp.elements[i].key() == serial.elements[i].key());
  for (std::size_t r = 1; r < omp.sizes.size(); ++r)
    CHECK(omp.sizes[r] > omp.sizes[r - 1]);
}

TEST_CASE("engine mismatch")
{
  CHECK_THROWS_AS(compose(shift(fibonacci(), 1), shift(golden(), 1)), Error);
}

TEST_CASE("parallel kernels match their serial references")
{
  std::mt19937 rng(31);
  for (auto const &name : {"fibonacci", "golden"}) {
    auto e = engine(name);
    auto fs = random_elements(e, 12, rng);
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      int r = std::max(fs[i].radius(), fs[i + 1].radius()) + fs[i + 1].dbound() + 1;
      auto serial = kernels::compose_table_serial(fs[i], fs[i + 1], r);
      CHECK(serial == kernels::compose_table_omp(fs[i], fs[i + 1], r));
      auto const &f = fs[i];
      CHECK(kernels::certificate_serial(e, f.radius(), f.dbound(), f.table()) ==
            kernels::certificate_omp(e, f.radius(), f.dbound(), f.table()));
    }
  }
}

TEST_CASE("canonical radius is the least radius the table factors through")
{
  std::mt19937 rng(17);
  for (auto const &name : {"fibonacci", "golden"}) {
    auto e = engine(name);
    for (auto const &f : random_elements(e, 15, rng)) {
      int big = f.radius() + 2;
      auto const &words = e->layer(static_cast<std::size_t>(2 * big + 1)).words;
      std::vector<int> table;
      for (auto const &w : words)
        table.push_back(f.displacement_at(w, big));
      // smallest r whose central (2r+1)-window determines the entry, found upwards
      int least = big;
      for (int r = 0; r < big; ++r) {
        std::map<std::string, int> seen;
        bool factors = true;
        for (std::size_t i = 0; i < words.size() && factors; ++i) {
          auto [it, fresh] = seen.emplace(words[i].substr(static_cast<std::size_t>(big - r), 2 * r + 1), table[i]);
          factors = fresh || it->second == table[i];
        }
        if (factors) {
          least = r;
          break;
        }
      }
      auto cf = canonical_form(build_element(e, big, table, Certify::trusted));
      CHECK(cf.radius == least);
    }
  }
}
