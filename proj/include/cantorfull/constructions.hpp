#ifndef CANTORFULL_CONSTRUCTIONS_HPP
#define CANTORFULL_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cantorfull/actions.hpp"
#include "cantorfull/fullgroup.hpp"

namespace cantorfull {

// U, phi(U), phi^-1(U) pairwise disjoint
bool is_good(CloSet const &u);

// the 3-cycle U -> phi U -> phi^-1 U -> U
Element sigma_U(CloSet const &u);

// sigma over Cyl({-1,0,1}, f) for every allowed 3-word f
std::vector<Element> cylinder_generators(Engine const &engine);

class SymmetricEmbedding {
 public:
  SymmetricEmbedding(std::vector<Element> moves, CloSet u);

  std::size_t degree() const { return _moves.size(); }
  // perm[i] is the image of i (0-based)
  Element operator()(std::vector<int> const &perm) const;

 private:
  std::vector<Element> _moves;
  std::vector<Element> _inverses;
  std::vector<CloSet> _pieces;
};

// checks disjointness of the g_i(U) and the Coxeter relations of S_n
SymmetricEmbedding symmetric_embed(std::vector<Element> const &moves, CloSet const &u);

Element first_return(CloSet const &a);
// distinct return times to A, ascending
std::vector<int> return_times(CloSet const &a);

struct Tower {
  CloSet base;
  int height = 0;
};

struct TowerPartition {
  std::vector<Tower> towers;
};

// towers over U refined by return time and by level membership in `refine`
TowerPartition kr_towers(CloSet const &u, std::vector<CloSet> const &refine = {});
// levels pairwise disjoint and covering the space
bool verify_partition(TowerPartition const &p);
std::string towers_tsv(TowerPartition const &p);
std::string towers_dot(TowerPartition const &p);

CloSet rokhlin_base(Element const &f, int n);

enum class LevelClass { a_only, b_only, both, neither };

struct TowerMove {
  int height = 0;
  std::vector<LevelClass> classes;
  // perm[i]: level receiving level i
  std::vector<int> perm;
  bool even = false;
};

struct Transport {
  Element alpha;
  CloSet base;
  std::vector<TowerMove> towers;
  int attempts = 0;
  bool contained = false;
  long index = 0;
};

Transport gw_transport(CloSet const &a, CloSet const &b, std::optional<CloSet> base_hint = std::nullopt);
std::string cycle_notation(std::vector<int> const &perm);

struct MatuiGenerators {
  Engine engine;
  RecodingMap recoding;
  std::vector<Letters> words;
  std::vector<Element> generators;
};

// works on the engine itself when it is 4-proper, otherwise on its 4-proper recoding
MatuiGenerators matui_generators(Engine const &engine);

// [sigma_V, sigma_U^-1] == sigma_{phi U & phi^-1 V}
bool qeqz_check(CloSet const &u, CloSet const &v);

// a product of generators, leftmost applied last; each letter is (index, +1 or -1)
using WordWitness = std::vector<std::pair<int, int>>;

Element evaluate_word(std::vector<Element> const &generators, WordWitness const &w);

struct CylinderCertificate {
  Letters h;
  WordWitness witness;
  bool verified = false;
};

// sigma of Cyl(I_n, h) for every allowed (2n+1)-word h, as generator words
std::vector<CylinderCertificate> cylinder_certificates(MatuiGenerators const &m, int n);

struct Lamplighter {
  CloSet u;
  CloSet v;
  Element psi;
  Element Psi;
  Element sigma0;
  bool involution = false;
  bool conjugation = false;
  bool independent = false;
};

Lamplighter lamplighter_pair(CloSet const &u, int k = 3);
// A_F: symmetric difference of psi^n(V), n in F
CloSet lamplighter_set(Lamplighter const &l, std::vector<long> const &f);
Element lamplighter_sigma(Lamplighter const &l, std::vector<long> const &f);

struct VanDouwen {
  Engine engine;
  std::vector<Element> sigma;
};

VanDouwen van_douwen_involutions(int q);

struct VanDouwenWitness {
  Letters window;
  long center = 0;
  long shift = 0;
  bool moved = false;
};

// the point w(j) = k_j moved by m^-1, evaluated letter by letter on its window
VanDouwenWitness van_douwen_witness(VanDouwen const &vd, std::vector<int> const &word);

struct FreenessReport {
  long words = 0;
  long identity = 0;
  long witness_failures = 0;
  long disagreements = 0;
};

FreenessReport van_douwen_freeness(VanDouwen const &vd, int length);

enum class HoughtonSpace { y, y_prime };

Engine houghton_engine(HoughtonSpace space);
// transposition (0 1) of the coded orbit
Element houghton_transposition(Engine const &engine, HoughtonSpace space);
// phi, (0 1), (-2 -1) and the involution exchanging the two negative ends
std::vector<Element> houghton_generators(Engine const &engine, HoughtonSpace space);

struct HoughtonEnd {
  std::string name;
  long translation = 0;
};

struct HoughtonProfile {
  std::vector<HoughtonEnd> ends;
  std::vector<long> exceptional;
};

// the window of the coded point n, radius r
Letters houghton_point(HoughtonSpace space, long n, int radius);
HoughtonProfile houghton_profile(Element const &f, HoughtonSpace space, long window);

}  // namespace cantorfull

#endif  // CANTORFULL_CONSTRUCTIONS_HPP
