#include <algorithm>

#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

namespace {

constexpr int extension_cap = 8;

CloSet symmetric_difference(CloSet const &a, CloSet const &b)
{
  return unite(difference(a, b), difference(b, a));
}

}  // namespace

CloSet lamplighter_set(Lamplighter const &l, std::vector<long> const &f)
{
  CloSet acc = CloSet::empty(l.u.engine());
  for (long n : f)
    acc = symmetric_difference(acc, element_image(l.v, power(l.psi, n)));
  return acc;
}

Element lamplighter_sigma(Lamplighter const &l, std::vector<long> const &f)
{
  auto a = lamplighter_set(l, f);
  auto up = shift_image(a, 1);
  int r = std::max(a.radius(), up.radius());
  auto ca = a.at_radius(r), cup = up.at_radius(r);
  std::vector<int> table(ca.mask().size(), 0);
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = ca.mask()[i] ? 1 : (cup.mask()[i] ? -1 : 0);
  return build_element(a.engine(), r, std::move(table), Certify::group);
}

Lamplighter lamplighter_pair(CloSet const &u, int k)
{
  Engine const &engine = u.engine();
  if (!is_disjoint(u, shift_image(u, 1)))
    throw Error(ErrorCode::precondition_violated, "U meets phi(U)");
  if (clopen_orbit(u).finite)
    throw Error(ErrorCode::odometer_like, "the phi-orbit of U is finite");

  auto psi = first_return(u);
  auto cu = u.canonical();
  int r = cu.radius();
  std::optional<CloSet> v;
  for (int e = 1; e <= extension_cap && !v; ++e) {
    for (auto const &w : engine->layer(static_cast<std::size_t>(2 * r + 1 + e)).words) {
      if (!cu.contains(std::string_view(w).substr(0, static_cast<std::size_t>(2 * r + 1))))
        continue;
      auto c = CloSet::cylinder(engine, Word{w, -r});
      if (!clopen_orbit(c, psi).finite) {
        v = c;
        break;
      }
    }
  }
  if (!v)
    throw Error(ErrorCode::search_exhausted,
                "no right extension of U up to " + std::to_string(extension_cap) + " letters has an infinite psi-orbit");

  auto phi = shift(engine, 1);
  auto Psi = compose(psi, compose(phi, compose(psi, shift(engine, -1))));
  Lamplighter l{cu, *v, psi, Psi, identity(engine)};
  l.sigma0 = lamplighter_sigma(l, {0});
  l.involution = is_identity(compose(l.sigma0, l.sigma0));

  auto Psi_inv = inverse(Psi);
  l.conjugation = true;
  for (int mask = 0; mask < 32 && l.conjugation; ++mask) {
    std::vector<long> f, g;
    for (int i = 0; i < 5; ++i) {
      if (mask & (1 << i)) {
        f.push_back(i - 2);
        g.push_back(i - 1);
      }
    }
    auto lhs = compose(Psi, compose(lamplighter_sigma(l, f), Psi_inv));
    l.conjugation = equal(lhs, lamplighter_sigma(l, g));
  }

  std::vector<CloSet> images;
  for (long n = -k; n <= k; ++n)
    images.push_back(element_image(l.v, power(psi, n)));
  l.independent = true;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j)
      l.independent = l.independent && !(images[i] == images[j]);
  }
  return l;
}

}  // namespace cantorfull
