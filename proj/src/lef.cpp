#include <algorithm>

#include "cantorfull/actions.hpp"
#include "cantorfull/caps.hpp"
#include "cantorfull/error.hpp"
#include "cantorfull/kernels.hpp"

namespace cantorfull {

namespace {

// the table of f read over the approximation's words, if its domain matches
bool lift_is_bijective(Element const &f, Engine const &approx)
{
  int r = f.radius();
  if (approx->layer(2 * r + 1).words != f.engine()->layer(2 * r + 1).words)
    return false;
  auto cert = kernels::certificate_serial(approx, r, f.dbound(), f.table());
  return std::none_of(cert.begin(), cert.end(),
                      [](int k) { return k == kernels::no_preimage || k == kernels::many_preimages; });
}

Letters rotate(Letters const &b, long k)
{
  long p = static_cast<long>(b.size());
  Letters out(b.size(), '\0');
  for (long i = 0; i < p; ++i)
    out[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>((((i - k) % p) + p) % p)];
  return out;
}

}  // namespace

Letters act_on_periodic(Element const &f, Engine const &approx, Letters const &b)
{
  long p = static_cast<long>(b.size());
  long r = f.radius();
  Letters window;
  for (long i = -r; i <= r; ++i)
    window.push_back(b[static_cast<std::size_t>(((i % p) + p) % p)]);
  auto idx = approx->layer(window.size()).find(window);
  if (idx == Layer::npos)
    throw Error(ErrorCode::precondition_violated, "periodic point leaves the approximation");
  return rotate(b, f.table()[idx]);
}

namespace {

std::size_t point_index(std::vector<Letters> const &points, Letters const &b)
{
  auto it = std::lower_bound(points.begin(), points.end(), b);
  if (it == points.end() || *it != b)
    throw Error(ErrorCode::precondition_violated, "image is not a periodic point of the approximation");
  return static_cast<std::size_t>(it - points.begin());
}

bool is_permutation_of(std::vector<std::size_t> const &image)
{
  std::vector<char> hit(image.size(), 0);
  for (auto i : image) {
    if (hit[i])
      return false;
    hit[i] = 1;
  }
  return true;
}

}  // namespace

FiniteQuotientCert lef_certificate(std::vector<Element> const &elements, int n_cap, int p_cap)
{
  if (n_cap <= 0)
    n_cap = caps().lef_n;
  if (p_cap <= 0)
    p_cap = caps().lef_p;
  if (elements.empty())
    throw Error(ErrorCode::precondition_violated, "certificate needs at least one element");
  Engine const &engine = elements.front().engine();
  for (auto const &f : elements) {
    if (f.engine() != engine)
      throw Error(ErrorCode::engine_mismatch, "elements live on different engines");
  }

  std::pair<std::size_t, std::size_t> stuck{0, 0};
  bool any_lift = false;
  for (int n = 1; n <= n_cap; ++n) {
    Engine approx = sft_approximation(engine, n);
    bool lifts = std::all_of(elements.begin(), elements.end(),
                             [&](Element const &f) { return lift_is_bijective(f, approx); });
    if (!lifts)
      continue;
    any_lift = true;

    for (int p = 1; p <= p_cap; ++p) {
      auto points = periodic_points(approx, p);
      if (points.empty())
        continue;

      FiniteQuotientCert cert;
      cert.n = n;
      cert.p = p;
      cert.approximation = approx;
      cert.points = points;
      for (auto const &f : elements) {
        std::vector<std::size_t> image;
        for (auto const &b : points)
          image.push_back(point_index(points, act_on_periodic(f, approx, b)));
        if (!is_permutation_of(image))
          throw Error(ErrorCode::not_bijective, "lifted element does not permute the periodic points");
        cert.images.push_back(std::move(image));
      }

      bool separated = true;
      for (std::size_t i = 0; i < elements.size() && separated; ++i) {
        for (std::size_t j = i + 1; j < elements.size() && separated; ++j) {
          std::size_t pt = 0;
          while (pt < points.size() && cert.images[i][pt] == cert.images[j][pt])
            ++pt;
          if (pt == points.size()) {
            separated = false;
            stuck = {i, j};
          } else {
            cert.witnesses.push_back({i, j, pt});
          }
        }
      }
      if (separated)
        return cert;
    }
  }

  if (!any_lift)
    throw Error(ErrorCode::cap_exceeded, "no approximation up to n = " + std::to_string(n_cap) + " carries bijective lifts");
  throw Error(ErrorCode::cap_exceeded, "elements " + std::to_string(stuck.first) + " and " + std::to_string(stuck.second) +
                                           " are not separated up to p = " + std::to_string(p_cap));
}

bool verify_certificate(FiniteQuotientCert const &cert, std::vector<Element> const &elements)
{
  if (cert.images.size() != elements.size())
    return false;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    if (!lift_is_bijective(elements[e], cert.approximation))
      return false;
    if (cert.images[e].size() != cert.points.size() || !is_permutation_of(cert.images[e]))
      return false;
    for (std::size_t i = 0; i < cert.points.size(); ++i) {
      if (act_on_periodic(elements[e], cert.approximation, cert.points[i]) != cert.points[cert.images[e][i]])
        return false;
    }
  }
  std::size_t pairs = elements.size() * (elements.size() - 1) / 2;
  if (cert.witnesses.size() != pairs)
    return false;
  for (auto const &w : cert.witnesses) {
    if (cert.images[w.first][w.point] == cert.images[w.second][w.point])
      return false;
  }
  return true;
}

}  // namespace cantorfull
