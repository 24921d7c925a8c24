#include <algorithm>
#include <cstdlib>

#include "cantorfull/actions.hpp"
#include "cantorfull/caps.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

WindowedPermutation orbit_permutation(Element const &psi, long window, long shift)
{
  int r = psi.radius();
  if (window < r + psi.dbound())
    throw Error(ErrorCode::window_too_small,
                "window " + std::to_string(window) + " is below radius + dbound = " + std::to_string(r + psi.dbound()));

  // phi^m x is centred at index M - m of the window of radius M
  long M = window + std::labs(shift) + r;
  Letters x = psi.engine()->point_window(static_cast<int>(M));

  WindowedPermutation out;
  out.window = window;
  out.bound = psi.dbound();
  out.image.resize(static_cast<std::size_t>(2 * window + 1));
  for (long n = -window; n <= window; ++n)
    out.image[static_cast<std::size_t>(n + window)] = n + psi.displacement_at(x, M - (n + shift));

  long in = out.interior();
  std::vector<long> seen;
  for (long n = -in; n <= in; ++n)
    seen.push_back(out(n));
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw Error(ErrorCode::not_injective, "orbit permutation is not injective on the window interior");
  return out;
}

long index_mod_at(Element const &psi, long shift)
{
  if (!psi.bijective())
    throw Error(ErrorCode::not_bijective, "index map needs a bijective element");
  long d = psi.dbound();
  auto j = orbit_permutation(psi, d + psi.radius(), shift);
  long in = 0;
  long out = 0;
  for (long n = -d; n < 0; ++n)
    in += j(n) >= 0;
  for (long n = 0; n < d; ++n)
    out += j(n) < 0;
  return in - out;
}

long index_mod(Element const &psi)
{
  long value = index_mod_at(psi, 0);
  for (long s : {-2L, -1L, 1L, 2L}) {
    if (index_mod_at(psi, s) != value)
      throw Error(ErrorCode::precondition_violated,
                  "index map depends on the basepoint (shift " + std::to_string(s) + "); orbit is not infinite");
  }
  return value;
}

bool stabilizer_check(Element const &psi, long window)
{
  auto j = orbit_permutation(psi, window);
  long c = psi.dbound();
  for (long n = 0; n <= window - c; ++n) {
    if (j(n) < 0)
      return false;
  }
  for (long n = -window + c; n < 0; ++n) {
    if (j(n) >= 0)
      return false;
  }
  return true;
}

OrbitResult clopen_orbit(CloSet const &u, long cap)
{
  if (cap <= 0)
    cap = caps().orbit;
  // phi is invertible, so the first repeat is U itself
  CloSet cur = u.canonical();
  for (long k = 1; k <= cap; ++k) {
    cur = shift_image(cur, 1);
    if (cur == u)
      return {true, k};
  }
  return {false, cap};
}

OrbitResult clopen_orbit(CloSet const &u, Element const &f, long cap)
{
  if (cap <= 0)
    cap = caps().orbit;
  CloSet cur = u.canonical();
  for (long k = 1; k <= cap; ++k) {
    cur = element_image(cur, f);
    if (cur == u)
      return {true, k};
  }
  return {false, cap};
}

}  // namespace cantorfull
