#include <algorithm>
#include <map>
#include <tuple>

#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

MatuiGenerators matui_generators(Engine const &engine)
{
  MatuiGenerators out;
  if (is_proper(engine, 4)) {
    out.engine = engine;
    out.recoding.block_length = 1;
    for (std::size_t l = 0; l < engine->alphabet().size(); ++l)
      out.recoding.letter_decode.push_back(Letters(1, static_cast<char>(l)));
  } else {
    std::tie(out.engine, out.recoding) = proper_recode(engine, 4);
  }
  out.words = out.engine->layer(3).words;
  out.generators = cylinder_generators(out.engine);
  return out;
}

bool qeqz_check(CloSet const &u, CloSet const &v)
{
  std::vector<std::pair<std::string, CloSet>> sets = {
      {"phi^-1 U", shift_image(u, -1)}, {"U", u}, {"phi U", shift_image(u, 1)},
      {"phi^-1 V", shift_image(v, -1)}, {"V", v}, {"phi V", shift_image(v, 1)}};
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (i == 2 && j == 3)
        continue;
      if (!is_disjoint(sets[i].second, sets[j].second))
        throw Error(ErrorCode::precondition_violated, sets[i].first + " meets " + sets[j].first);
    }
  }
  auto lhs = commutator(sigma_U(v), inverse(sigma_U(u)));
  auto rhs = sigma_U(intersect(sets[2].second, sets[3].second));
  return equal(lhs, rhs);
}

Element evaluate_word(std::vector<Element> const &generators, WordWitness const &w)
{
  if (generators.empty())
    throw Error(ErrorCode::precondition_violated, "no generators");
  std::map<int, Element> inverses;
  Element out = identity(generators.front().engine());
  for (auto [index, sign] : w) {
    if (index < 0 || static_cast<std::size_t>(index) >= generators.size())
      throw Error(ErrorCode::precondition_violated, "generator index out of range");
    auto const &g = generators[static_cast<std::size_t>(index)];
    if (sign > 0) {
      out = compose(out, g);
    } else {
      auto it = inverses.find(index);
      if (it == inverses.end())
        it = inverses.emplace(index, inverse(g)).first;
      out = compose(out, it->second);
    }
  }
  return out;
}

namespace {

WordWitness invert(WordWitness w)
{
  std::reverse(w.begin(), w.end());
  for (auto &letter : w)
    letter.second = -letter.second;
  return w;
}

WordWitness cylinder_word(MatuiGenerators const &m, Letters const &h, std::map<Letters, WordWitness> &memo)
{
  if (auto it = memo.find(h); it != memo.end())
    return it->second;
  WordWitness out;
  if (h.size() == 3) {
    auto it = std::lower_bound(m.words.begin(), m.words.end(), h);
    if (it == m.words.end() || *it != h)
      throw Error(ErrorCode::precondition_violated, "3-word is not allowed");
    out.push_back({static_cast<int>(it - m.words.begin()), 1});
  } else {
    // sigma on Cyl(I_n, h) is [sigma_V, sigma_U^-1], V read on the left part of h, U on the right part
    auto a = cylinder_word(m, h.substr(0, h.size() - 2), memo);
    auto b = cylinder_word(m, h.substr(2), memo);
    out = a;
    auto bi = invert(b);
    auto ai = invert(a);
    out.insert(out.end(), bi.begin(), bi.end());
    out.insert(out.end(), ai.begin(), ai.end());
    out.insert(out.end(), b.begin(), b.end());
  }
  memo.emplace(h, out);
  return out;
}

}  // namespace

std::vector<CylinderCertificate> cylinder_certificates(MatuiGenerators const &m, int n)
{
  if (n < 1)
    throw Error(ErrorCode::precondition_violated, "cylinder depth must be positive");
  std::map<Letters, WordWitness> memo;
  std::vector<CylinderCertificate> out;
  for (auto const &h : m.engine->layer(static_cast<std::size_t>(2 * n + 1)).words) {
    CylinderCertificate c;
    c.h = h;
    c.witness = cylinder_word(m, h, memo);
    auto target = sigma_U(CloSet::cylinder(m.engine, Word{h, -n}));
    c.verified = equal(evaluate_word(m.generators, c.witness), target);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cantorfull
