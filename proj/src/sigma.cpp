#include <algorithm>
#include <tuple>

#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"
#include "window.hpp"

namespace cantorfull {

namespace {

std::string first_member(CloSet const &s)
{
  auto m = s.members();
  return m.empty() ? std::string() : s.engine()->alphabet().render(m.front());
}

}  // namespace

bool is_good(CloSet const &u)
{
  auto up = shift_image(u, 1);
  auto down = shift_image(u, -1);
  return is_disjoint(u, up) && is_disjoint(u, down) && is_disjoint(up, down);
}

Element sigma_U(CloSet const &u)
{
  auto up = shift_image(u, 1);
  auto down = shift_image(u, -1);
  using Pair = std::tuple<CloSet const *, CloSet const *, char const *>;
  for (auto const &[s, t, name] : {Pair{&u, &up, "U and phi U"}, Pair{&u, &down, "U and phi^-1 U"},
                                    Pair{&up, &down, "phi U and phi^-1 U"}}) {
    auto overlap = intersect(*s, *t);
    if (!is_empty(overlap))
      throw Error(ErrorCode::not_good, std::string(name) + " overlap", first_member(overlap));
  }
  if (is_empty(u))
    return identity(u.engine());

  int r = std::max({u.radius(), up.radius(), down.radius()});
  auto cu = u.at_radius(r), cup = up.at_radius(r), cdown = down.at_radius(r);
  auto const &words = u.engine()->layer(2 * r + 1).words;
  std::vector<int> table(words.size(), 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (cu.mask()[i] || cdown.mask()[i])
      table[i] = 1;
    else if (cup.mask()[i])
      table[i] = -2;
  }
  return build_element(u.engine(), r, std::move(table), Certify::group);
}

std::vector<Element> cylinder_generators(Engine const &engine)
{
  std::vector<Element> out;
  for (auto const &f : engine->layer(3).words)
    out.push_back(sigma_U(CloSet::cylinder(engine, Word{f, -1})));
  return out;
}

SymmetricEmbedding::SymmetricEmbedding(std::vector<Element> moves, CloSet u)
  : _moves(std::move(moves))
{
  for (auto const &g : _moves) {
    _inverses.push_back(inverse(g));
    _pieces.push_back(element_image(u, g));
  }
}

Element SymmetricEmbedding::operator()(std::vector<int> const &perm) const
{
  if (perm.size() != _moves.size())
    throw Error(ErrorCode::precondition_violated, "permutation has the wrong degree");
  std::vector<Element> h;
  int r = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    h.push_back(compose(_moves[static_cast<std::size_t>(perm[i])], _inverses[i]));
    r = std::max({r, h.back().radius(), _pieces[i].radius()});
  }
  Engine const &engine = _pieces.front().engine();
  return element_from(engine, r, [&](std::string_view w) {
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (_pieces[i].contains(central(w, _pieces[i].radius())))
        return h[i].displacement(central(w, h[i].radius()));
    }
    return 0;
  });
}

SymmetricEmbedding symmetric_embed(std::vector<Element> const &moves, CloSet const &u)
{
  if (moves.empty())
    throw Error(ErrorCode::precondition_violated, "symmetric embedding needs at least one move");
  SymmetricEmbedding rho(moves, u);

  std::vector<CloSet> pieces;
  for (auto const &g : moves)
    pieces.push_back(element_image(u, g));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      auto overlap = intersect(pieces[i], pieces[j]);
      if (!is_empty(overlap))
        throw Error(ErrorCode::overlap, "g_" + std::to_string(i + 1) + "(U) meets g_" + std::to_string(j + 1) + "(U)",
                    first_member(overlap));
    }
  }

  int n = static_cast<int>(moves.size());
  std::vector<Element> s;
  for (int k = 0; k + 1 < n; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      perm[static_cast<std::size_t>(i)] = i;
    std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(k + 1)]);
    s.push_back(rho(perm));
  }

  auto fail = [](std::string const &what) {
    throw Error(ErrorCode::precondition_violated, "symmetric embedding breaks the relation " + what);
  };
  bool nonempty = !is_empty(u);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!is_identity(power(s[k], 2)))
      fail("s" + std::to_string(k) + "^2 = 1");
    if (nonempty && is_identity(s[k]))
      fail("s" + std::to_string(k) + " != 1");
    for (std::size_t l = k + 1; l < s.size(); ++l) {
      long exponent = l == k + 1 ? 3 : 2;
      if (!is_identity(power(compose(s[k], s[l]), exponent)))
        fail("(s" + std::to_string(k) + " s" + std::to_string(l) + ")^" + std::to_string(exponent) + " = 1");
    }
  }
  return rho;
}

}  // namespace cantorfull
