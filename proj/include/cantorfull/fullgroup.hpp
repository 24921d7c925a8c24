#ifndef CANTORFULL_FULLGROUP_HPP
#define CANTORFULL_FULLGROUP_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantorfull/language.hpp"

namespace cantorfull {

class CloSet {
 public:
  CloSet(Engine engine, int radius, std::vector<char> mask);

  static CloSet empty(Engine engine, int radius = 0);
  static CloSet full(Engine engine, int radius = 0);
  static CloSet cylinder(Engine engine, Word const &w);
  static CloSet from_predicate(Engine engine, int radius,
                               std::function<bool(std::string_view)> const &pred);

  Engine const &engine() const { return _engine; }
  int radius() const { return _radius; }
  std::vector<char> const &mask() const { return _mask; }
  std::vector<Letters> const &words() const { return _engine->layer(2 * _radius + 1).words; }

  // window has length 2 * radius() + 1
  bool contains(std::string_view window) const;
  // the point with window y (length 2R + 1, R >= radius()) shifted so that
  // position `center` of y is the origin
  bool contains_at(std::string_view y, long center) const;

  std::size_t count() const;
  std::vector<Letters> members() const;

  CloSet at_radius(int radius) const;
  CloSet canonical() const;
  std::string key() const;

  bool operator==(CloSet const &other) const;

 private:
  Engine _engine;
  int _radius;
  std::vector<char> _mask;
};

CloSet unite(CloSet const &a, CloSet const &b);
CloSet intersect(CloSet const &a, CloSet const &b);
CloSet complement(CloSet const &a);
CloSet difference(CloSet const &a, CloSet const &b);
bool is_empty(CloSet const &a);
bool is_disjoint(CloSet const &a, CloSet const &b);
bool is_subset(CloSet const &a, CloSet const &b);

// phi^k(U)
CloSet shift_image(CloSet const &u, long k);

class Element;

// f(U), f bijective
CloSet element_image(CloSet const &u, Element const &f);
// f^{-1}(U)
CloSet preimage(CloSet const &u, Element const &f);

enum class Certify { group, semigroup, trusted, none };

class Element {
 public:
  Engine const &engine() const { return _engine; }
  int radius() const { return _radius; }
  int dbound() const { return _dbound; }
  std::vector<int> const &table() const { return _table; }
  bool bijective() const { return _bijective; }

  // window has length 2 * radius() + 1
  int displacement(std::string_view window) const;
  // cocycle at the point whose window y is centred at index `center`
  int displacement_at(std::string_view y, long center) const;

  // witness k per allowed word of length 2(r + D) + 1
  std::vector<int> const &witness() const;

  // canonical dump: "radius=<r> dbound=<D>" then "<word> -> <disp>" lines
  std::string dump() const;
  std::string key() const;

 private:
  friend Element build_element(Engine engine, int radius, std::vector<int> table, Certify mode);

  struct Lazy;

  Engine _engine;
  Layer const *_layer = nullptr;
  int _radius = 0;
  int _dbound = 0;
  std::vector<int> _table;
  bool _bijective = false;
  std::shared_ptr<Lazy> _lazy;
};

// group: certificate must pass; semigroup: certificate decides the flag;
// trusted: bijective by construction; none: semigroup element
Element build_element(Engine engine, int radius, std::vector<int> table, Certify mode);

Element make_element(Engine engine, int radius, std::vector<int> table);
Element make_semigroup_element(Engine engine, int radius, std::vector<int> table);
Element element_from(Engine engine, int radius, std::function<int(std::string_view)> const &kappa);
Element identity(Engine engine);
Element shift(Engine engine, int k);

Element compose(Element const &f, Element const &g);
Element inverse(Element const &f);
Element power(Element const &f, long n);
Element commutator(Element const &f, Element const &g);

bool is_identity(Element const &f);
bool equal(Element const &f, Element const &g);

struct CanonicalForm {
  int radius = 0;
  int dbound = 0;
  std::vector<Letters> words;
  std::vector<int> table;

  bool operator==(CanonicalForm const &other) const = default;
};

CanonicalForm canonical_form(Element const &f);

struct OrderResult {
  bool finite = false;
  long n = 0;
};

OrderResult order(Element const &f, long cap = 0);

CloSet support(Element const &f);

// true iff some point of [w] (w anchored at -radius) is moved by phi^p
bool moves_some_point(Engine const &engine, std::string_view w, int p);

// cumulative shift of `times` applications of f to the point whose window
// y is centred at `center`; nullopt when the window is too short
std::optional<long> orbit_shift(Element const &f, std::string_view y, long center, long times);

struct BallResult {
  std::vector<std::size_t> sizes;
  std::vector<Element> elements;
};

BallResult ball_sizes(std::vector<Element> const &generators, int radius, bool keep = false);
BallResult ball_sizes_serial(std::vector<Element> const &generators, int radius, bool keep = false);

}  // namespace cantorfull

#endif  // CANTORFULL_FULLGROUP_HPP
