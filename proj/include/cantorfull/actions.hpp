#ifndef CANTORFULL_ACTIONS_HPP
#define CANTORFULL_ACTIONS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cantorfull/fullgroup.hpp"

namespace cantorfull {

// j_x(psi) on [-window, window]; the canonical point x, or phi^shift(x)
struct WindowedPermutation {
  long window = 0;
  int bound = 0;
  std::vector<long> image;

  long operator()(long n) const { return image[static_cast<std::size_t>(n + window)]; }
  bool defined(long n) const { return n >= -window && n <= window; }
  // |n| <= interior() maps inside the window
  long interior() const { return window - bound; }
};

WindowedPermutation orbit_permutation(Element const &psi, long window, long shift = 0);

long index_mod(Element const &psi);
long index_mod_at(Element const &psi, long shift);

bool stabilizer_check(Element const &psi, long window);

struct PutnamBlocks {
  int m = 0;
  std::vector<long> recurrence;
  // [first, last] of each interior block
  std::vector<std::pair<long, long>> blocks;
  bool invariant = false;
};

PutnamBlocks putnam_blocks(std::vector<Element> const &family, long window);

struct OrbitResult {
  bool finite = false;
  long size = 0;
};

// orbit of U under phi, or under an element
OrbitResult clopen_orbit(CloSet const &u, long cap = 0);
OrbitResult clopen_orbit(CloSet const &u, Element const &f, long cap = 0);

struct SeparationWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t point = 0;
};

struct FiniteQuotientCert {
  int n = 0;
  int p = 0;
  Engine approximation;
  std::vector<Letters> points;
  // images[e][i]: index of the image of points[i] under element e
  std::vector<std::vector<std::size_t>> images;
  std::vector<SeparationWitness> witnesses;
};

FiniteQuotientCert lef_certificate(std::vector<Element> const &elements, int n_cap = 0, int p_cap = 0);
bool verify_certificate(FiniteQuotientCert const &cert, std::vector<Element> const &elements);

// image of the p-periodic point with block b under f, as a block
Letters act_on_periodic(Element const &f, Engine const &approx, Letters const &b);

}  // namespace cantorfull

#endif  // CANTORFULL_ACTIONS_HPP
