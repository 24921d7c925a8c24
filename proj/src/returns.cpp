#include <algorithm>
#include <optional>
#include <set>

#include "cantorfull/caps.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

namespace {

// on an SFT, a point of A that never comes back follows an infinite path of
// the block graph avoiding A; returns the A-word it starts from
std::optional<Letters> escaping_word(CloSet const &a, bool forward)
{
  Engine const &engine = a.engine();
  int r = std::max(a.radius(), engine->sft_order() / 2);
  auto ca = a.at_radius(r);
  auto const &layer = engine->layer(2 * r + 1);
  std::size_t n = layer.size();
  std::vector<std::vector<std::uint32_t>> next(n);
  for (auto const &w : engine->layer(2 * r + 2).words) {
    auto u = layer.find(std::string_view(w).substr(0, w.size() - 1));
    auto v = layer.find(std::string_view(w).substr(1));
    if (forward)
      next[u].push_back(v);
    else
      next[v].push_back(u);
  }

  std::vector<char> alive(n);
  for (std::size_t i = 0; i < n; ++i)
    alive[i] = !ca.mask()[i];
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i] && std::none_of(next[i].begin(), next[i].end(), [&](std::uint32_t j) { return alive[j]; })) {
        alive[i] = 0;
        changed = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (ca.mask()[i] && std::any_of(next[i].begin(), next[i].end(), [&](std::uint32_t j) { return alive[j]; }))
      return layer.words[i];
  }
  return std::nullopt;
}

}  // namespace

Element first_return(CloSet const &a)
{
  if (is_empty(a))
    throw Error(ErrorCode::precondition_violated, "first return needs a nonempty set");
  Engine const &engine = a.engine();
  int ra = a.radius();
  if (engine->kind() == EngineKind::sft) {
    for (bool forward : {true, false}) {
      if (auto w = escaping_word(a, forward))
        throw Error(ErrorCode::not_omniscient,
                    std::string("some point of the set never returns ") + (forward ? "forward" : "backward"),
                    engine->alphabet().render(*w));
    }
  }

  for (int k = 1; k <= caps().dbound; ++k) {
    // returns up to k are visible at radius ra + k
    int r = ra + k;
    auto const &words = engine->layer(2 * r + 1).words;
    std::vector<int> table(words.size(), 0);
    Letters missing;
    for (std::size_t i = 0; i < words.size() && missing.empty(); ++i) {
      if (!a.contains_at(words[i], r))
        continue;
      for (int t = 1; t <= k; ++t) {
        if (a.contains_at(words[i], r - t)) {
          table[i] = t;
          break;
        }
      }
      if (table[i] == 0)
        missing = words[i];
    }
    if (missing.empty())
      return build_element(engine, r, std::move(table), Certify::group);
    if (k == caps().dbound) {
      std::string w = engine->alphabet().render(missing);
      if (engine->minimal() == Tri::yes)
        throw Error(ErrorCode::cap_exceeded, "return time exceeds dbound cap " + std::to_string(k), w);
      throw Error(ErrorCode::not_omniscient, "no return to the set within " + std::to_string(k) + " steps", w);
    }
  }
  throw Error(ErrorCode::cap_exceeded, "dbound cap is not positive");
}

std::vector<int> return_times(CloSet const &a)
{
  auto psi = first_return(a);
  auto ca = a.at_radius(std::max(a.radius(), psi.radius()));
  std::set<int> times;
  int r = ca.radius();
  auto const &words = a.engine()->layer(2 * r + 1).words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (ca.mask()[i])
      times.insert(psi.displacement_at(words[i], r));
  }
  return {times.begin(), times.end()};
}

}  // namespace cantorfull
