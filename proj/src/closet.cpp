#include <algorithm>

#include "cantorfull/error.hpp"
#include "cantorfull/fullgroup.hpp"

namespace cantorfull {

namespace {

void same_engine(Engine const &a, Engine const &b)
{
  if (a != b)
    throw Error(ErrorCode::engine_mismatch, "operands live on different engines");
}

template <typename Op>
CloSet combine(CloSet const &a, CloSet const &b, Op op)
{
  same_engine(a.engine(), b.engine());
  int r = std::max(a.radius(), b.radius());
  auto ua = a.at_radius(r);
  auto ub = b.at_radius(r);
  std::vector<char> mask(ua.mask().size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = op(ua.mask()[i], ub.mask()[i]) ? 1 : 0;
  return CloSet(a.engine(), r, std::move(mask)).canonical();
}

}  // namespace

CloSet::CloSet(Engine engine, int radius, std::vector<char> mask)
  : _engine(std::move(engine)),
    _radius(radius),
    _mask(std::move(mask))
{
  if (_mask.size() != _engine->layer(2 * _radius + 1).size())
    throw Error(ErrorCode::partial_table, "clopen mask does not cover the allowed words");
}

CloSet CloSet::empty(Engine engine, int radius)
{
  std::size_t n = engine->layer(2 * radius + 1).size();
  return CloSet(std::move(engine), radius, std::vector<char>(n, 0));
}

CloSet CloSet::full(Engine engine, int radius)
{
  std::size_t n = engine->layer(2 * radius + 1).size();
  return CloSet(std::move(engine), radius, std::vector<char>(n, 1));
}

CloSet CloSet::cylinder(Engine engine, Word const &w)
{
  if (w.letters.empty())
    return full(std::move(engine));

  long last = w.anchor + static_cast<long>(w.letters.size()) - 1;
  int r = static_cast<int>(std::max(std::abs(w.anchor), std::abs(last)));
  std::size_t offset = static_cast<std::size_t>(w.anchor + r);
  return from_predicate(std::move(engine), r, [&](std::string_view u) {
    return u.substr(offset, w.letters.size()) == w.letters;
  });
}

CloSet CloSet::from_predicate(Engine engine, int radius,
                              std::function<bool(std::string_view)> const &pred)
{
  auto const &words = engine->layer(2 * radius + 1).words;
  std::vector<char> mask(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    mask[i] = pred(words[i]) ? 1 : 0;
  return CloSet(std::move(engine), radius, std::move(mask));
}

bool CloSet::contains(std::string_view window) const
{
  auto idx = _engine->layer(2 * _radius + 1).find(window);
  return idx != Layer::npos && _mask[idx];
}

bool CloSet::contains_at(std::string_view y, long center) const
{
  return contains(y.substr(center - _radius, 2 * _radius + 1));
}

std::size_t CloSet::count() const
{
  return static_cast<std::size_t>(std::count(_mask.begin(), _mask.end(), 1));
}

std::vector<Letters> CloSet::members() const
{
  std::vector<Letters> out;
  auto const &w = words();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (_mask[i])
      out.push_back(w[i]);
  }
  return out;
}

CloSet CloSet::at_radius(int radius) const
{
  if (radius == _radius)
    return *this;
  if (radius < _radius)
    throw Error(ErrorCode::precondition_violated, "cannot lower the radius of a clopen set");

  int off = radius - _radius;
  return from_predicate(_engine, radius, [&](std::string_view u) { return contains(u.substr(off, 2 * _radius + 1)); });
}

CloSet CloSet::canonical() const
{
  auto const &w = words();
  for (int r = 0; r < _radius; ++r) {
    auto const &inner = _engine->layer(2 * r + 1);
    std::vector<char> mask(inner.size(), -1);
    bool ok = true;
    int off = _radius - r;
    for (std::size_t i = 0; i < w.size() && ok; ++i) {
      auto idx = inner.find(std::string_view(w[i]).substr(off, 2 * r + 1));
      if (mask[idx] == -1)
        mask[idx] = _mask[i];
      else
        ok = mask[idx] == _mask[i];
    }
    if (ok)
      return CloSet(_engine, r, std::move(mask));
  }
  return *this;
}

std::string CloSet::key() const
{
  auto c = canonical();
  std::string out = std::to_string(c._radius) + ":";
  for (char m : c._mask)
    out.push_back(m ? '1' : '0');
  return out;
}

bool CloSet::operator==(CloSet const &other) const
{
  if (_engine != other._engine)
    return false;
  int r = std::max(_radius, other._radius);
  return at_radius(r)._mask == other.at_radius(r)._mask;
}

CloSet unite(CloSet const &a, CloSet const &b)
{
  return combine(a, b, [](char x, char y) { return x || y; });
}

CloSet intersect(CloSet const &a, CloSet const &b)
{
  return combine(a, b, [](char x, char y) { return x && y; });
}

CloSet difference(CloSet const &a, CloSet const &b)
{
  return combine(a, b, [](char x, char y) { return x && !y; });
}

CloSet complement(CloSet const &a)
{
  std::vector<char> mask(a.mask().size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    mask[i] = a.mask()[i] ? 0 : 1;
  return CloSet(a.engine(), a.radius(), std::move(mask));
}

bool is_empty(CloSet const &a)
{
  return std::none_of(a.mask().begin(), a.mask().end(), [](char m) { return m; });
}

bool is_disjoint(CloSet const &a, CloSet const &b) { return is_empty(intersect(a, b)); }

bool is_subset(CloSet const &a, CloSet const &b) { return is_empty(difference(a, b)); }

CloSet shift_image(CloSet const &u, long k)
{
  int r = u.radius() + static_cast<int>(std::abs(k));
  return CloSet::from_predicate(u.engine(), r, [&](std::string_view y) {
    return u.contains_at(y, r + k);
  }).canonical();
}

CloSet preimage(CloSet const &u, Element const &f)
{
  same_engine(u.engine(), f.engine());
  int r = std::max(f.radius(), u.radius() + f.dbound());
  return CloSet::from_predicate(u.engine(), r, [&](std::string_view y) {
    return u.contains_at(y, r - f.displacement_at(y, r));
  }).canonical();
}

CloSet element_image(CloSet const &u, Element const &f)
{
  return preimage(u, inverse(f));
}

}  // namespace cantorfull
