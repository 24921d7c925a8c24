#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

// net flux across the origin: points sent from the negative half into N minus points sent out of N
long flux(WindowedPermutation const &p)
{
  long in = 0, out = 0;
  for (long n = -p.interior(); n <= p.interior(); ++n) {
    if (n < 0 && p(n) >= 0)
      ++in;
    if (n >= 0 && p(n) < 0)
      ++out;
  }
  return in - out;
}

}  // namespace

TEST_CASE("orbit permutations of simple elements")
{
  auto e = fibonacci();
  auto p = orbit_permutation(shift(e, 1), 20);
  for (long n = -p.interior(); n <= p.interior(); ++n)
    CHECK(p(n) == n + 1);
  auto q = orbit_permutation(identity(e), 20);
  for (long n = -q.interior(); n <= q.interior(); ++n)
    CHECK(q(n) == n);
}

TEST_CASE("sigma_U moves the orbit in 3-cycles")
{
  auto e = fibonacci();
  auto u = cyl(e, -1, "aab");
  auto s = sigma_U(u);
  auto p = orbit_permutation(s, 60);
  auto moved = unite(unite(shift_image(u, -1), u), shift_image(u, 1));
  auto x = point_window(e, 200);
  for (long n = -p.interior(); n <= p.interior(); ++n) {
    // phi^n x is centred at 200 - n
    bool in = moved.contains_at(x, 200 - n);
    CHECK((p(n) != n) == in);
    if (in)
      CHECK(p(p(p(n))) == n);
  }
}

TEST_CASE("orbit permutation is a homomorphism on the interior")
{
  std::mt19937 rng(5);
  auto e = fibonacci();
  auto fs = random_elements(e, 10, rng);
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    auto pf = orbit_permutation(fs[i], 80);
    auto pg = orbit_permutation(fs[i + 1], 80);
    auto pfg = orbit_permutation(compose(fs[i], fs[i + 1]), 80);
    for (long n = -60; n <= 60; ++n)
      CHECK(pfg(n) == pf(pg(n)));
  }
}

TEST_CASE("index map")
{
  auto e = fibonacci();
  CHECK(index_mod(shift(e, 1)) == 1);
  CHECK(index_mod(shift(e, -3)) == -3);
  CHECK(index_mod(sigma_U(cyl(e, -1, "aab"))) == 0);
  CHECK(index_mod(first_return(cyl(e, 0, "a"))) == 1);
  std::mt19937 rng(11);
  for (auto const &f : random_elements(e, 20, rng)) {
    long m = index_mod(f);
    CHECK(m == flux(orbit_permutation(f, 100)));
    for (long s : {-7L, 3L, 12L})
      CHECK(index_mod_at(f, s) == m);
  }
}

TEST_CASE("stabiliser checks and Putnam blocks")
{
  auto e = fibonacci();
  CHECK(stabilizer_check(identity(e), 40));
  CHECK_FALSE(stabilizer_check(shift(e, 1), 40));
  auto trivial = putnam_blocks({identity(e)}, 40);
  CHECK(trivial.invariant);
  try {
    putnam_blocks({shift(e, 1)}, 40);
    FAIL("expected StabilizerViolated");
  } catch (Error const &err) {
    CHECK(err.code() == ErrorCode::stabilizer_violated);
  }
  // 3-cycles whose support avoids the crossing at 0
  auto x = point_window(e, 60);
  for (auto const &w : e->layer(5).words) {
    auto u = CloSet::cylinder(e, Word{w, -2});
    if (!is_good(u))
      continue;
    auto s = sigma_U(u);
    if (!stabilizer_check(s, 60))
      continue;
    auto b = putnam_blocks({s, inverse(s)}, 60);
    CHECK(b.invariant);
    for (std::size_t i = 1; i < b.blocks.size(); ++i)
      CHECK(b.blocks[i].first == b.blocks[i - 1].second + 1);
  }
}

TEST_CASE("clopen orbits")
{
  CHECK(clopen_orbit(CloSet::full(fibonacci())).size == 1);
  auto a = clopen_orbit(cyl(fibonacci(), 0, "a"), 64);
  CHECK_FALSE(a.finite);
  CHECK(a.size == 64);
  auto p = engine("period2");
  auto r = clopen_orbit(cyl(p, 0, "a"));
  CHECK(r.finite);
  CHECK(r.size == 2);
}

TEST_CASE("LEF certificates")
{
  auto e = fibonacci();
  auto id = identity(e);
  auto c1 = lef_certificate({id});
  CHECK(c1.n == 1);
  CHECK(c1.p == 1);
  auto c2 = lef_certificate({shift(e, 1), id});
  CHECK(c2.p == 2);
  CHECK(verify_certificate(c2, {shift(e, 1), id}));

  // the golden-mean points of period <= 2: a shift moves every non-constant one
  auto g = sft_approximation(e, 2);
  auto pts = periodic_points(g, 2);
  CHECK(rendered(g, pts) == std::set<std::string>{"aa", "ab", "ba"});

  auto m = matui_generators(e);
  auto s = m.generators.front();
  std::vector<Element> els = {identity(m.engine), shift(m.engine, 1), s, compose(s, s)};
  auto c = lef_certificate(els);
  CHECK(c.n <= 8);
  CHECK(c.p <= 12);
  CHECK(verify_certificate(c, els));
  std::set<std::pair<std::size_t, std::size_t>> separated;
  for (auto const &w : c.witnesses)
    separated.insert({w.first, w.second});
  CHECK(separated.size() == 6);
}
