#include "cantorfull/kernels.hpp"

#include "cantorfull/fullgroup.hpp"

namespace cantorfull::kernels {

namespace {

int compose_entry(Element const &f, Element const &g, std::string_view y, int radius)
{
  int k = g.displacement_at(y, radius);
  return k + f.displacement_at(y, radius - k);
}

int certificate_entry(Layer const &inner, std::vector<int> const &table, std::string_view y,
                      int radius, int dbound)
{
  int center = radius + dbound;
  int found = no_preimage;
  for (int k = -dbound; k <= dbound; ++k) {
    auto idx = inner.find(y.substr(center + k - radius, 2 * radius + 1));
    if (table[idx] == k) {
      if (found != no_preimage)
        return many_preimages;
      found = k;
    }
  }
  return found;
}

}  // namespace

std::vector<int> compose_table_serial(Element const &f, Element const &g, int radius)
{
  auto const &words = f.engine()->layer(2 * radius + 1).words;
  std::vector<int> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    out[i] = compose_entry(f, g, words[i], radius);
  return out;
}

std::vector<int> compose_table_omp(Element const &f, Element const &g, int radius)
{
  auto const &words = f.engine()->layer(2 * radius + 1).words;
  std::vector<int> out(words.size());
  long n = static_cast<long>(words.size());

  #pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    out[i] = compose_entry(f, g, words[i], radius);

  return out;
}

std::vector<int> certificate_serial(Engine const &engine, int radius, int dbound,
                                    std::vector<int> const &table)
{
  auto const &inner = engine->layer(2 * radius + 1);
  auto const &words = engine->layer(2 * (radius + dbound) + 1).words;
  std::vector<int> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    out[i] = certificate_entry(inner, table, words[i], radius, dbound);
  return out;
}

std::vector<int> certificate_omp(Engine const &engine, int radius, int dbound,
                                 std::vector<int> const &table)
{
  auto const &inner = engine->layer(2 * radius + 1);
  auto const &words = engine->layer(2 * (radius + dbound) + 1).words;
  std::vector<int> out(words.size());
  long n = static_cast<long>(words.size());

  #pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i)
    out[i] = certificate_entry(inner, table, words[i], radius, dbound);

  return out;
}

}  // namespace cantorfull::kernels
