#include <functional>

#include "cantorfull/constructions.hpp"
#include "cantorfull/error.hpp"

namespace cantorfull {

VanDouwen van_douwen_involutions(int q)
{
  if (q < 3)
    throw Error(ErrorCode::precondition_violated, "van Douwen involutions need at least 3 letters");
  std::vector<std::string> symbols;
  for (int i = 0; i < q; ++i)
    symbols.push_back(q <= 26 ? std::string(1, static_cast<char>('a' + i)) : "a" + std::to_string(i));
  EngineSpec spec;
  spec.alphabet = Alphabet(symbols);
  spec.kind = EngineKind::sft;
  for (int i = 0; i < q; ++i)
    spec.forbidden.push_back(Letters(2, static_cast<char>(i)));

  VanDouwen out;
  out.engine = build_engine(std::move(spec));
  for (int i = 0; i < q; ++i) {
    char c = static_cast<char>(i);
    out.sigma.push_back(element_from(out.engine, 1, [c](std::string_view w) {
      if (w[1] == c)
        return 1;
      if (w[2] == c)
        return -1;
      return 0;
    }));
  }
  return out;
}

VanDouwenWitness van_douwen_witness(VanDouwen const &vd, std::vector<int> const &word)
{
  long n = static_cast<long>(word.size());
  int q = static_cast<int>(vd.sigma.size());
  long radius = n + 2;
  long size = 2 * radius + 1;
  std::vector<int> letters(static_cast<std::size_t>(size), -1);
  auto at = [&](long pos) -> int & { return letters[static_cast<std::size_t>(pos + radius)]; };

  for (long j = 1; j <= n; ++j)
    at(j) = word[static_cast<std::size_t>(j - 1)];
  if (n > 0) {
    for (int c = 0; c < q; ++c) {
      if (c != word.front() && c != word.back()) {
        at(0) = c;
        break;
      }
    }
  }
  for (long pos = -radius; pos <= radius; ++pos) {
    if (at(pos) >= 0)
      continue;
    for (int c = 0; c < q; ++c) {
      bool left = pos == -radius || at(pos - 1) != c;
      bool right = pos == radius || at(pos + 1) != c;
      if (left && right) {
        at(pos) = c;
        break;
      }
    }
  }

  VanDouwenWitness out;
  for (int c : letters)
    out.window.push_back(static_cast<char>(c));
  out.center = radius;
  // m^-1 applies sigma_{k_1} first
  long c = radius;
  for (int k : word) {
    int kappa = vd.sigma[static_cast<std::size_t>(k)].displacement_at(out.window, c);
    c -= kappa;
    out.shift += kappa;
  }
  out.moved = out.shift != 0 && (n == 0 || at(0) != at(n));
  return out;
}

FreenessReport van_douwen_freeness(VanDouwen const &vd, int length)
{
  FreenessReport report;
  int q = static_cast<int>(vd.sigma.size());
  std::vector<int> word;
  std::function<void(Element const &)> extend = [&](Element const &m) {
    if (!word.empty()) {
      ++report.words;
      bool automaton = !is_identity(m);
      auto w = van_douwen_witness(vd, word);
      bool witness = w.moved && w.shift == -static_cast<long>(word.size());
      if (!automaton)
        ++report.identity;
      if (!witness)
        ++report.witness_failures;
      if (automaton != witness)
        ++report.disagreements;
    }
    if (static_cast<int>(word.size()) == length)
      return;
    for (int k = 0; k < q; ++k) {
      if (!word.empty() && word.back() == k)
        continue;
      word.push_back(k);
      extend(compose(m, vd.sigma[static_cast<std::size_t>(k)]));
      word.pop_back();
    }
  };
  extend(identity(vd.engine));
  return report;
}

}  // namespace cantorfull
