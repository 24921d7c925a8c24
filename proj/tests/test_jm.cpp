#include <cmath>
#include <numbers>

#include "cantorfull/jm.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

long double angle(long n, long j)
{
  long double r = std::sqrt(static_cast<long double>(std::labs(j)) / static_cast<long double>(n));
  return std::numbers::pi_v<long double> / 4 * std::min<long double>(r, 1);
}

// plain left-to-right product in extended precision over a generous range
long double naive(BoundedPermutationView const &g, long n)
{
  long double p = 1;
  for (long j = -n - g.bound - 2; j <= n + g.bound + 2; ++j)
    p *= std::cos(angle(n, j) - angle(n, g(j)));
  return p;
}

}  // namespace

TEST_CASE("theta")
{
  CHECK(theta(7, 0) == 0);
  CHECK(theta(4, 1) == doctest::Approx(std::numbers::pi / 8).epsilon(1e-15));
  CHECK(theta(3, 7) == std::numbers::pi / 4);
  CHECK(theta(3, -3) == std::numbers::pi / 4);
}

TEST_CASE("closed forms")
{
  auto id = translation_view(0);
  CHECK(correlation(id, 10) == 1.0);
  CHECK(hn_lower_bound(id, 10) == 1.0);
  auto t = transposition_view(0, 1);
  CHECK(std::abs(correlation(t, 1) - 0.5) <= 1e-15);
  CHECK(hn_lower_bound(t, 1) == doctest::Approx(std::exp(-std::pow(std::numbers::pi / 4, 2) * 2)));
  CHECK(hn_lower_bound(t, 1) <= correlation(t, 1));
}

TEST_CASE("correlation against an extended-precision product")
{
  auto e = fibonacci();
  std::vector<BoundedPermutationView> views = {translation_view(1), translation_view(-2), transposition_view(0, 1),
                                               transposition_view(-3, 5),
                                               view_of(orbit_permutation(sigma_U(cyl(e, -1, "aab")), 700))};
  for (auto const &g : views) {
    for (long n : {2L, 10L, 100L, 500L}) {
      double c = correlation(g, n);
      CHECK(std::abs(c - static_cast<double>(naive(g, n))) < 1e-12);
      CHECK(c == correlation_serial(g, n));
      CHECK(std::abs(c - correlation_logsum(g, n)) < 1e-9 * c);
      CHECK(hn_lower_bound(g, n) <= c + 1e-12);
      CHECK(c <= 1.0);
    }
  }
}

TEST_CASE("symmetry and reflection")
{
  for (auto const &g : {translation_view(1), transposition_view(-1, 2), eventually_translation({{0, 3}, {3, 0}}, 0, 0)}) {
    for (long n : {5L, 50L}) {
      CHECK(correlation(inverse_view(g), n) == doctest::Approx(correlation(g, n)).epsilon(1e-14));
      CHECK(correlation(reflected_view(g), n) == doctest::Approx(correlation(g, n)).epsilon(1e-14));
    }
  }
}

TEST_CASE("decay reports")
{
  auto r = decay_report(translation_view(0), {10, 100});
  for (auto const &row : r.rows) {
    CHECK(row.c == 1.0);
    CHECK(row.ratio == 0.0);
  }
  auto phi = decay_report(translation_view(1), {10, 100, 1000, 10000});
  for (std::size_t i = 1; i < phi.rows.size(); ++i)
    CHECK(phi.rows[i].one_minus_c < phi.rows[i - 1].one_minus_c);
  CHECK(phi.max_ratio < 0.5);
  CHECK(report_tsv(phi).rfind("n\tC\tB\tone_minus_C\tratio\n", 0) == 0);
  CHECK_THROWS_AS(decay_report(translation_view(1), {1, 10}), Error);
  CHECK_THROWS_AS(decay_report(translation_view(1), {100, 10}), Error);
}
