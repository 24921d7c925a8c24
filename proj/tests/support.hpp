#ifndef CANTORFULL_TESTS_SUPPORT_HPP
#define CANTORFULL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cantorfull/cli.hpp"
#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace testing {

using namespace cantorfull;

inline std::string data_path(std::string const &name) { return std::string(CANTORFULL_DATA_DIR) + "/" + name; }

inline Engine engine(std::string const &name)
{
  static std::map<std::string, Engine> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, load_subshift(data_path(name + ".sub"))).first;
  return it->second;
}

inline Engine fibonacci() { return engine("fibonacci"); }
inline Engine golden() { return engine("golden"); }

inline Letters letters(Engine const &e, std::string_view text) { return e->alphabet().parse(text); }
inline std::string text(Engine const &e, Letters const &w) { return e->alphabet().render(w); }

inline CloSet cyl(Engine const &e, long anchor, std::string_view w) { return CloSet::cylinder(e, Word{letters(e, w), anchor}); }

inline std::set<std::string> rendered(Engine const &e, std::vector<Letters> const &words)
{
  std::set<std::string> out;
  for (auto const &w : words)
    out.insert(text(e, w));
  return out;
}

// iterate a substitution on its first letter; plain characters
inline std::string substitute(std::map<char, std::string> const &rules, std::string w, int times)
{
  for (int i = 0; i < times; ++i) {
    std::string next;
    for (char c : w)
      next += rules.at(c);
    w = std::move(next);
  }
  return w;
}

inline std::string fibonacci_word(int times = 20) { return substitute({{'a', "ab"}, {'b', "a"}}, "a", times); }

inline std::set<std::string> factors(std::string const &s, std::size_t length)
{
  std::set<std::string> out;
  for (std::size_t i = 0; i + length <= s.size(); ++i)
    out.insert(s.substr(i, length));
  return out;
}

// golden-mean strings: a uniformly random letter, except after b
inline std::string golden_word(std::mt19937 &rng, std::size_t length)
{
  std::string s;
  std::bernoulli_distribution coin(0.5);
  while (s.size() < length)
    s += (!s.empty() && s.back() == 'b') ? 'a' : (coin(rng) ? 'b' : 'a');
  return s;
}

// f(x) for x = the point of y centred at c, as the new centre
inline long act(Element const &f, std::string_view y, long c) { return c - f.displacement_at(y, c); }

inline Element reduce(Element const &f)
{
  auto cf = canonical_form(f);
  return make_element(f.engine(), cf.radius, cf.table);
}

inline std::vector<CloSet> good_cylinders(Engine const &e, int radius)
{
  std::vector<CloSet> out;
  for (int len = 1; len <= 2 * radius + 1; ++len) {
    for (auto const &w : e->layer(static_cast<std::size_t>(len)).words) {
      auto u = CloSet::cylinder(e, Word{w, -(len / 2)});
      if (is_good(u))
        out.push_back(u);
    }
  }
  return out;
}

// random products of shifts and 3-cycles, kept when r <= max_r and D <= max_d
inline std::vector<Element> random_elements(Engine const &e, std::size_t count, std::mt19937 &rng, int max_r = 2,
                                            int max_d = 3)
{
  std::vector<Element> pool = {shift(e, 1), shift(e, -1)};
  for (auto const &u : good_cylinders(e, 1)) {
    pool.push_back(sigma_U(u));
    pool.push_back(inverse(pool.back()));
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> length(1, 4);
  std::vector<Element> out;
  long tries = 0;
  while (out.size() < count && ++tries < 200 * static_cast<long>(count)) {
    Element f = pool[pick(rng)];
    for (int k = length(rng); k > 1; --k)
      f = compose(f, pool[pick(rng)]);
    f = reduce(f);
    if (f.radius() <= max_r && f.dbound() <= max_d)
      out.push_back(f);
  }
  return out;
}

inline std::string read_file(std::string const &path)
{
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline int run(std::vector<std::string> args, std::string &out, std::string &err)
{
  std::ostringstream o, e;
  int code = run_command(args, o, e);
  out = o.str();
  err = e.str();
  return code;
}

}  // namespace testing

#endif  // CANTORFULL_TESTS_SUPPORT_HPP
