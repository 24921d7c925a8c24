#include <exception>

#include "cantorfull/caps.hpp"
#include "cantorfull/error.hpp"
#include "cantorfull/fullgroup.hpp"

namespace cantorfull {

namespace {

std::vector<Element> symmetrize(std::vector<Element> const &generators)
{
  absl::flat_hash_set<std::string> seen;
  std::vector<Element> out;
  for (auto const &g : generators) {
    if (!g.bijective())
      throw Error(ErrorCode::not_bijective, "ball generators must be bijective");
    for (auto const &h : {g, inverse(g)}) {
      if (seen.insert(h.key()).second)
        out.push_back(h);
    }
  }
  return out;
}

template <typename Expand>
BallResult grow(std::vector<Element> const &generators, int radius, bool keep, Expand expand)
{
  if (generators.empty())
    throw Error(ErrorCode::precondition_violated, "ball needs at least one generator");
  auto gens = symmetrize(generators);

  BallResult out;
  absl::flat_hash_set<std::string> seen;
  std::vector<Element> frontier{identity(gens.front().engine())};
  seen.insert(frontier.front().key());
  if (keep)
    out.elements = frontier;

  for (int k = 1; k <= radius; ++k) {
    std::vector<Element> products = expand(frontier, gens);
    std::vector<Element> next;
    for (auto &e : products) {
      if (!seen.insert(e.key()).second)
        continue;
      if (static_cast<long>(seen.size()) > caps().memory)
        throw Error(ErrorCode::memory_cap_exceeded,
                    "ball exceeds " + std::to_string(caps().memory) + " elements at radius " + std::to_string(k));
      if (keep)
        out.elements.push_back(e);
      next.push_back(std::move(e));
    }
    frontier = std::move(next);
    out.sizes.push_back(seen.size());
  }
  return out;
}

}  // namespace

BallResult ball_sizes_serial(std::vector<Element> const &generators, int radius, bool keep)
{
  return grow(generators, radius, keep, [](std::vector<Element> const &frontier, std::vector<Element> const &gens) {
    std::vector<Element> products;
    for (auto const &e : frontier) {
      for (auto const &s : gens)
        products.push_back(compose(s, e));
    }
    return products;
  });
}

BallResult ball_sizes(std::vector<Element> const &generators, int radius, bool keep)
{
  return grow(generators, radius, keep, [](std::vector<Element> const &frontier, std::vector<Element> const &gens) {
    long n = static_cast<long>(frontier.size() * gens.size());
    std::vector<std::optional<Element>> slots(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));

    #pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      try {
        slots[i] = compose(gens[i % gens.size()], frontier[i / gens.size()]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }

    for (auto const &e : errors) {
      if (e)
        std::rethrow_exception(e);
    }

    std::vector<Element> products;
    products.reserve(slots.size());
    for (auto &s : slots)
      products.push_back(std::move(*s));
    return products;
  });
}

}  // namespace cantorfull
