#include <algorithm>
#include <sstream>

#include "cantorfull/caps.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

namespace {

constexpr int min_height = 5;
constexpr int retries = 3;

bool is_even(std::vector<int> const &perm)
{
  std::vector<char> seen(perm.size(), 0);
  std::size_t swaps = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    if (len > 0)
      swaps += len - 1;
  }
  return swaps % 2 == 0;
}

// the centred cylinder inside A at `radius` with the largest least return time
std::optional<CloSet> pick_base(CloSet const &a, int radius)
{
  Engine const &engine = a.engine();
  auto ca = a.at_radius(radius);
  std::optional<CloSet> best;
  int best_return = 0;
  auto const &words = engine->layer(2 * radius + 1).words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!ca.mask()[i])
      continue;
    auto c = CloSet::cylinder(engine, Word{words[i], -radius});
    int least = return_times(c).front();
    if (least > best_return) {
      best_return = least;
      best = c;
    }
  }
  if (best_return < min_height)
    return std::nullopt;
  return best;
}

TowerMove tower_move(Tower const &t, CloSet const &a, CloSet const &b, std::size_t index)
{
  TowerMove m;
  m.height = t.height;
  std::vector<std::vector<int>> by_class(4);
  for (int i = 0; i < t.height; ++i) {
    auto level = shift_image(t.base, i);
    bool in_a = is_subset(level, a);
    bool in_b = is_subset(level, b);
    LevelClass c = in_a ? (in_b ? LevelClass::both : LevelClass::a_only)
                        : (in_b ? LevelClass::b_only : LevelClass::neither);
    m.classes.push_back(c);
    by_class[static_cast<std::size_t>(c)].push_back(i);
  }
  auto const &ao = by_class[static_cast<std::size_t>(LevelClass::a_only)];
  auto const &bo = by_class[static_cast<std::size_t>(LevelClass::b_only)];
  if (bo.size() > ao.size())
    throw Error(ErrorCode::surplus_violated,
                "tower " + std::to_string(index) + " has " + std::to_string(bo.size()) + " levels in B\\A but only " +
                    std::to_string(ao.size()) + " in A\\B",
                std::to_string(index));

  m.perm.resize(static_cast<std::size_t>(t.height));
  for (int i = 0; i < t.height; ++i)
    m.perm[static_cast<std::size_t>(i)] = i;
  for (std::size_t k = 0; k < bo.size(); ++k)
    std::swap(m.perm[static_cast<std::size_t>(bo[k])], m.perm[static_cast<std::size_t>(ao[k])]);

  if (bo.size() % 2 == 1) {
    auto largest = std::max_element(by_class.begin(), by_class.end(),
                                     [](auto const &x, auto const &y) { return x.size() < y.size(); });
    int p = (*largest)[0], q = (*largest)[1];
    for (auto &v : m.perm) {
      if (v == p)
        v = q;
      else if (v == q)
        v = p;
    }
  }
  m.even = is_even(m.perm);
  return m;
}

Transport build_transport(CloSet const &a, CloSet const &b, CloSet const &base)
{
  auto towers = kr_towers(base, {a, b});
  Engine const &engine = a.engine();
  std::vector<TowerMove> moves;
  int maxh = 0;
  int rb = 0;
  for (std::size_t j = 0; j < towers.towers.size(); ++j) {
    moves.push_back(tower_move(towers.towers[j], a, b, j));
    maxh = std::max(maxh, towers.towers[j].height);
    rb = std::max(rb, towers.towers[j].base.radius());
  }

  // x = phi^i(u) with u in the base; u is centred at index r + i
  int r = maxh + rb;
  auto alpha = element_from(engine, r, [&](std::string_view w) {
    for (int i = 0; i < maxh; ++i) {
      for (std::size_t j = 0; j < moves.size(); ++j) {
        if (i < moves[j].height && towers.towers[j].base.contains_at(w, r + i))
          return moves[j].perm[static_cast<std::size_t>(i)] - i;
      }
    }
    return 0;
  });
  Transport out{alpha, base, std::move(moves)};
  out.contained = is_subset(element_image(b, alpha), a);
  out.index = index_mod(alpha);
  return out;
}

}  // namespace

Transport gw_transport(CloSet const &a, CloSet const &b, std::optional<CloSet> base_hint)
{
  if (a.engine() != b.engine())
    throw Error(ErrorCode::engine_mismatch, "A and B live on different engines");
  Engine const &engine = a.engine();
  if (is_empty(b)) {
    Transport out{identity(engine), CloSet::empty(engine), {}};
    out.contained = true;
    return out;
  }
  if (engine->minimal() != Tri::yes)
    throw Error(ErrorCode::not_minimal, "transport needs a minimal engine");
  if (is_empty(a))
    throw Error(ErrorCode::surplus_violated, "A is empty", "0");

  if (base_hint) {
    if (!is_subset(*base_hint, a))
      throw Error(ErrorCode::precondition_violated, "base is not contained in A");
    if (return_times(*base_hint).front() < min_height)
      throw Error(ErrorCode::precondition_violated, "base returns before " + std::to_string(min_height) + " steps");
    auto out = build_transport(a, b, *base_hint);
    out.attempts = 1;
    return out;
  }

  int radius = a.radius();
  std::optional<CloSet> base;
  while (!(base = pick_base(a, radius))) {
    if (++radius > caps().dbound)
      throw Error(ErrorCode::cap_exceeded, "no base inside A with returns of at least " + std::to_string(min_height));
  }
  for (int attempt = 0;; ++attempt) {
    try {
      auto out = build_transport(a, b, *base);
      out.attempts = attempt + 1;
      return out;
    } catch (Error const &e) {
      if (e.code() != ErrorCode::surplus_violated || attempt == retries)
        throw;
    }
    base = pick_base(a, ++radius);
    if (!base)
      throw Error(ErrorCode::cap_exceeded, "no deeper base inside A");
  }
}

std::string cycle_notation(std::vector<int> const &perm)
{
  std::ostringstream out;
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) {
      seen[i] = 1;
      continue;
    }
    out << '(';
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      if (j != i)
        out << ' ';
      out << j;
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace cantorfull
