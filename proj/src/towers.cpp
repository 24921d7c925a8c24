#include <algorithm>
#include <map>
#include <sstream>

#include "cantorfull/caps.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

TowerPartition kr_towers(CloSet const &u, std::vector<CloSet> const &refine)
{
  auto psi = first_return(u);
  int rr = 0;
  for (auto const &s : refine)
    rr = std::max(rr, s.radius());
  int r = std::max({u.radius(), psi.radius(), psi.dbound() + rr});

  Engine const &engine = u.engine();
  auto const &words = engine->layer(2 * r + 1).words;
  std::map<std::string, std::vector<char>> pieces;
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::string_view w = words[i];
    if (!u.contains_at(w, r))
      continue;
    int k = psi.displacement_at(w, r);
    std::string sig = std::to_string(k) + ":";
    for (int level = 0; level < k; ++level) {
      for (auto const &s : refine)
        sig += s.contains_at(w, r - level) ? '1' : '0';
    }
    auto &mask = pieces[sig];
    if (mask.empty())
      mask.assign(words.size(), 0);
    mask[i] = 1;
  }

  TowerPartition out;
  for (auto &[sig, mask] : pieces) {
    int height = std::stoi(sig.substr(0, sig.find(':')));
    out.towers.push_back({CloSet(engine, r, std::move(mask)).canonical(), height});
  }
  std::sort(out.towers.begin(), out.towers.end(), [](Tower const &a, Tower const &b) {
    if (a.height != b.height)
      return a.height < b.height;
    return a.base.key() < b.base.key();
  });
  return out;
}

bool verify_partition(TowerPartition const &p)
{
  if (p.towers.empty())
    return false;
  Engine const &engine = p.towers.front().base.engine();
  CloSet covered = CloSet::empty(engine);
  for (auto const &t : p.towers) {
    if (is_empty(t.base) || t.height < 1)
      return false;
    for (int i = 0; i < t.height; ++i) {
      auto level = shift_image(t.base, i);
      if (!is_disjoint(covered, level))
        return false;
      covered = unite(covered, level);
    }
  }
  return is_empty(complement(covered));
}

std::string towers_tsv(TowerPartition const &p)
{
  std::ostringstream out;
  out << "tower_id\theight\tbase_word_count\n";
  for (std::size_t j = 0; j < p.towers.size(); ++j)
    out << j << '\t' << p.towers[j].height << '\t' << p.towers[j].base.count() << '\n';
  return out.str();
}

std::string towers_dot(TowerPartition const &p)
{
  std::ostringstream out;
  out << "digraph towers {\n  rankdir=BT;\n  node [shape=box];\n  base [label=\"U\", shape=ellipse];\n";
  for (std::size_t j = 0; j < p.towers.size(); ++j) {
    auto const &t = p.towers[j];
    out << "  subgraph cluster_" << j << " {\n    label=\"tower " << j << " (" << t.base.count() << " words)\";\n";
    for (int i = 0; i < t.height; ++i)
      out << "    t" << j << "_" << i << " [label=\"phi^" << i << " U_" << j << "\"];\n";
    out << "  }\n";
    out << "  base -> t" << j << "_0;\n";
    for (int i = 0; i + 1 < t.height; ++i)
      out << "  t" << j << "_" << i << " -> t" << j << "_" << i + 1 << ";\n";
    out << "  t" << j << "_" << t.height - 1 << " -> base [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

CloSet rokhlin_base(Element const &f, int n)
{
  if (n < 1)
    throw Error(ErrorCode::precondition_violated, "Rokhlin height must be positive");
  Engine const &engine = f.engine();
  if (n == 1)
    return CloSet::full(engine);

  std::map<int, Element> pw;
  for (int i = -(n - 1); i < n; ++i)
    pw.emplace(i, power(f, i));
  for (int i = 1; i < n; ++i) {
    auto fixed = complement(support(pw.at(i)));
    if (!is_empty(fixed))
      throw Error(ErrorCode::fixed_point_found, "f^" + std::to_string(i) + " has fixed points",
                  engine->alphabet().render(fixed.members().front()));
  }

  // a radius at which every cylinder V has f^i(V), 0 <= i < n, pairwise disjoint
  int r = 0;
  auto separates = [&](int radius) {
    for (auto const &w : engine->layer(2 * radius + 1).words) {
      auto v = CloSet::cylinder(engine, Word{w, -radius});
      for (int i = 1; i < n; ++i) {
        if (!is_disjoint(v, element_image(v, pw.at(i))))
          return false;
      }
    }
    return true;
  };
  while (!separates(r)) {
    if (++r > caps().dbound)
      throw Error(ErrorCode::cap_exceeded, "no separating radius up to the dbound cap");
  }

  CloSet covered = CloSet::empty(engine);
  CloSet u = CloSet::empty(engine);
  for (auto const &w : engine->layer(2 * r + 1).words) {
    auto v = CloSet::cylinder(engine, Word{w, -r});
    u = unite(u, difference(v, covered));
    for (auto const &[i, g] : pw)
      covered = unite(covered, element_image(v, g));
  }

  for (int i = 1; i < n; ++i) {
    if (!is_disjoint(u, element_image(u, pw.at(i))))
      throw Error(ErrorCode::precondition_violated, "Rokhlin base levels overlap");
  }
  auto fi = f;
  auto finv = pw.at(-1);
  CloSet orbit = u, fwd = u, bwd = u;
  long limit = static_cast<long>(n) * static_cast<long>(engine->layer(2 * r + 1).size());
  for (long m = 0; m < limit && !is_empty(complement(orbit)); ++m) {
    fwd = element_image(fwd, fi);
    bwd = element_image(bwd, finv);
    orbit = unite(orbit, unite(fwd, bwd));
  }
  if (!is_empty(complement(orbit)))
    throw Error(ErrorCode::precondition_violated, "Rokhlin base orbit does not cover the space");
  return u;
}

}  // namespace cantorfull
