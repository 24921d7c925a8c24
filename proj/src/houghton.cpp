#include <algorithm>

#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

namespace {

constexpr char a = 0, b = 1, c = 2;

Element from_rule(Engine const &engine, std::function<int(std::string_view)> const &rule)
{
  // rule reads positions -2..2 of the point
  return element_from(engine, 2, rule);
}

}  // namespace

Engine houghton_engine(HoughtonSpace space)
{
  EngineSpec spec;
  spec.kind = EngineKind::sft;
  if (space == HoughtonSpace::y) {
    spec.alphabet = Alphabet({"a", "b"});
    spec.forbidden = {spec.alphabet.parse("ba")};
  } else {
    spec.alphabet = Alphabet({"a", "b", "c"});
    for (auto const *w : {"ac", "ba", "bb", "ca", "cc"})
      spec.forbidden.push_back(spec.alphabet.parse(w));
  }
  return build_engine(std::move(spec));
}

Letters houghton_point(HoughtonSpace space, long n, int radius)
{
  Letters out;
  for (long pos = -radius; pos <= radius; ++pos) {
    long d = pos - n;
    if (d <= 0)
      out.push_back(a);
    else if (space == HoughtonSpace::y || d % 2 == 1)
      out.push_back(b);
    else
      out.push_back(c);
  }
  return out;
}

Element houghton_transposition(Engine const &engine, HoughtonSpace space)
{
  char third = space == HoughtonSpace::y ? b : c;
  return from_rule(engine, [third](std::string_view w) {
    if (w[2] == a && w[3] == b && w[4] == third)
      return 1;
    if (w[2] == a && w[3] == a && w[4] == b)
      return -1;
    return 0;
  });
}

std::vector<Element> houghton_generators(Engine const &engine, HoughtonSpace space)
{
  std::vector<Element> out{shift(engine, 1), houghton_transposition(engine, space)};
  if (space == HoughtonSpace::y)
    return out;
  // (-2 -1): positions -2..1 read aabc or abcb
  out.push_back(from_rule(engine, [](std::string_view w) {
    if (w[0] == a && w[1] == a && w[2] == b && w[3] == c)
      return -1;
    if (w[0] == a && w[1] == b && w[2] == c && w[3] == b)
      return 1;
    return 0;
  }));
  out.push_back(from_rule(engine, [](std::string_view w) {
    if (w[2] == c)
      return -1;
    if (w[2] == b && w[1] == c)
      return 1;
    return 0;
  }));
  return out;
}

HoughtonProfile houghton_profile(Element const &f, HoughtonSpace space, long window)
{
  std::size_t letters = space == HoughtonSpace::y ? 2 : 3;
  if (f.engine()->alphabet().size() != letters ||
      f.engine()->layer(2).words != houghton_engine(space)->layer(2).words)
    throw Error(ErrorCode::precondition_violated, "element does not live on the expected Houghton engine");
  if (window < 4)
    throw Error(ErrorCode::window_too_small, "window must be at least 4");

  auto part = [&](long n) -> std::size_t {
    if (space == HoughtonSpace::y)
      return n < 0 ? 0 : 1;
    if (n >= 0)
      return 0;
    return (-n) % 2 == 0 ? 1 : 2;
  };
  std::vector<std::string> names = space == HoughtonSpace::y ? std::vector<std::string>{"-inf", "+inf"}
                                                              : std::vector<std::string>{"+inf", "-inf_even", "-inf_odd"};

  auto dev = [&](long n) { return static_cast<long>(f.displacement(houghton_point(space, n, f.radius()))); };

  long q = (window + 3) / 4;
  HoughtonProfile out;
  for (std::size_t e = 0; e < names.size(); ++e) {
    std::optional<long> t;
    bool right = names[e] == "+inf";
    long lo = right ? window - q + 1 : -window;
    long hi = right ? window : -window + q - 1;
    for (long n = lo; n <= hi; ++n) {
      if (part(n) != e)
        continue;
      if (t && *t != dev(n))
        throw Error(ErrorCode::window_too_small, "end " + names[e] + " has not stabilised");
      t = dev(n);
    }
    out.ends.push_back({names[e], t.value_or(0)});
  }
  for (long n = -window; n <= window; ++n) {
    if (dev(n) != out.ends[part(n)].translation) {
      if (2 * std::labs(n) > window)
        throw Error(ErrorCode::window_too_small, "deviation outside the inner half of the window", std::to_string(n));
      out.exceptional.push_back(n);
    }
  }
  return out;
}

}  // namespace cantorfull
