#include <algorithm>

#include "cantorfull/actions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

PutnamBlocks putnam_blocks(std::vector<Element> const &family, long window)
{
  PutnamBlocks out;
  if (family.empty())
    throw Error(ErrorCode::precondition_violated, "putnam blocks need a nonempty family");

  std::vector<Element> sym;
  for (auto const &f : family) {
    sym.push_back(f);
    sym.push_back(inverse(f));
  }

  std::vector<WindowedPermutation> perms;
  for (auto const &f : sym) {
    out.m = std::max(out.m, f.dbound());
    perms.push_back(orbit_permutation(f, window));
  }

  for (std::size_t i = 0; i < sym.size(); ++i) {
    long c = sym[i].dbound();
    for (long n = -window + c; n <= window - c; ++n) {
      bool crosses = n >= 0 ? perms[i](n) < 0 : perms[i](n) >= 0;
      if (crosses)
        throw Error(ErrorCode::stabilizer_violated, "orbit position crosses 0", std::to_string(n));
    }
  }

  int m = std::max(out.m, 1);
  auto tau = [&](std::size_t i, long n) { return perms[i](n) - n; };

  // n in I iff the displacement profile read from n agrees with the one read from 0 on {0..m-1}
  for (long n = -window; n + m - 1 <= window; ++n) {
    bool same = true;
    for (std::size_t i = 0; i < sym.size() && same; ++i) {
      for (long k = 0; k < m && same; ++k)
        same = tau(i, n + k) == tau(i, k);
    }
    if (same)
      out.recurrence.push_back(n);
  }

  out.invariant = true;
  for (std::size_t t = 0; t + 1 < out.recurrence.size(); ++t) {
    long first = out.recurrence[t];
    long last = out.recurrence[t + 1] - 1;
    if (first - m < -window + m || last + m > window - m)
      continue;
    out.blocks.emplace_back(first, last);
    for (auto const &j : perms) {
      for (long n = first; n <= last; ++n) {
        if (j(n) < first || j(n) > last)
          out.invariant = false;
      }
    }
  }
  if (out.blocks.empty())
    throw Error(ErrorCode::window_too_small, "no complete block inside the window");
  return out;
}

}  // namespace cantorfull
