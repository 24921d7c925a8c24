#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "cantorfull/error.hpp"
#include "cantorfull/language.hpp"

namespace cantorfull {

namespace {

constexpr int seed_power_cap = 12;
constexpr int periodic_scan_cap = 12;
constexpr std::size_t complexity_scan = 64;

std::vector<Letters> sorted_unique(std::set<Letters> const &s)
{
  return std::vector<Letters>(s.begin(), s.end());
}

void check_letters(Alphabet const &alphabet, Letters const &w)
{
  for (char c : w) {
    if (static_cast<Letter>(c) >= alphabet.size())
      throw Error(ErrorCode::semantic_error, "letter outside alphabet");
  }
}

}  // namespace

Engine LanguageEngine::build(EngineSpec spec)
{
  std::shared_ptr<LanguageEngine> engine(new LanguageEngine());
  engine->_alphabet = spec.alphabet;
  engine->_kind = spec.kind;

  switch (spec.kind) {
    case EngineKind::sft: {
      std::size_t order = 2;
      std::set<Letters> forbidden;
      for (auto const &w : spec.forbidden) {
        check_letters(spec.alphabet, w);
        if (w.empty())
          throw Error(ErrorCode::empty_subshift, "empty forbidden word");
        order = std::max(order, w.size());
        forbidden.insert(w);
      }

      std::vector<std::size_t> lengths;
      for (auto const &w : forbidden)
        lengths.push_back(w.size());
      std::sort(lengths.begin(), lengths.end());
      lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

      // extend letter by letter, pruning as soon as a forbidden suffix appears
      std::vector<Letters> current{""};
      for (std::size_t len = 1; len <= order; ++len) {
        std::vector<Letters> next;
        for (auto const &w : current) {
          for (std::size_t c = 0; c < spec.alphabet.size(); ++c) {
            Letters v = w;
            v.push_back(static_cast<char>(c));
            bool bad = false;
            for (auto l : lengths) {
              if (l <= v.size() && forbidden.count(v.substr(v.size() - l))) {
                bad = true;
                break;
              }
            }
            if (!bad)
              next.push_back(std::move(v));
          }
        }
        current = std::move(next);
      }

      engine->_order = static_cast<int>(order);
      engine->init_sft(std::move(current));
      break;
    }
    case EngineKind::substitution:
      if (spec.rules.size() != spec.alphabet.size())
        throw Error(ErrorCode::semantic_error, "substitution needs one rule per letter");
      for (auto const &r : spec.rules) {
        check_letters(spec.alphabet, r);
        if (r.empty())
          throw Error(ErrorCode::semantic_error, "substitution image must be nonempty");
      }
      engine->_rules = spec.rules;
      engine->init_substitution();
      break;
    case EngineKind::sturmian:
      if (spec.alphabet.size() != 2)
        throw Error(ErrorCode::bad_continued_fraction, "sturmian engines need a two-letter alphabet");
      if (spec.partial_quotients.empty())
        throw Error(ErrorCode::bad_continued_fraction, "no partial quotients");
      for (int a : spec.partial_quotients) {
        if (a < 1)
          throw Error(ErrorCode::bad_continued_fraction, "partial quotient " + std::to_string(a) + " < 1");
      }
      if (spec.depth_cap < 1)
        throw Error(ErrorCode::bad_continued_fraction, "depth cap must be positive");
      engine->_quotients = spec.partial_quotients;
      engine->_depth_cap = spec.depth_cap;
      engine->init_sturmian();
      break;
    case EngineKind::recoded:
      throw Error(ErrorCode::semantic_error, "recoded engines are built by proper_recode");
  }
  return engine;
}

Engine LanguageEngine::sft_from_allowed(Alphabet alphabet, int order, std::vector<Letters> allowed)
{
  std::shared_ptr<LanguageEngine> engine(new LanguageEngine());
  engine->_alphabet = std::move(alphabet);
  engine->_kind = EngineKind::sft;

  if (order < 2) {
    std::vector<Letters> pairs;
    for (auto const &a : allowed) {
      for (auto const &b : allowed)
        pairs.push_back(a + b);
    }
    allowed = std::move(pairs);
    order = 2;
  }
  engine->_order = order;
  engine->init_sft(std::move(allowed));
  return engine;
}

Engine LanguageEngine::recoded(Engine source, int block_length)
{
  std::shared_ptr<LanguageEngine> engine(new LanguageEngine());
  auto const &blocks = source->layer(block_length).words;

  std::vector<std::string> symbols;
  for (auto const &b : blocks) {
    std::string name;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!source->alphabet().single_char() && i > 0)
        name += '_';
      name += source->alphabet().symbol(static_cast<Letter>(b[i]));
    }
    symbols.push_back(name);
  }

  engine->_alphabet = Alphabet(std::move(symbols));
  engine->_kind = EngineKind::recoded;
  engine->_source = source;
  engine->_block = block_length;
  engine->_minimal = source->minimal();
  engine->_aperiodic = source->aperiodic();
  return engine;
}

void LanguageEngine::init_sft(std::vector<Letters> local_edges)
{
  std::size_t k = static_cast<std::size_t>(_order);

  absl::flat_hash_map<std::string, int> vid;
  auto vertex = [&](std::string const &v) {
    auto [it, inserted] = vid.emplace(v, static_cast<int>(vid.size()));
    return it->second;
  };

  std::vector<std::pair<int, int>> edges;
  for (auto const &e : local_edges)
    edges.emplace_back(vertex(e.substr(0, k - 1)), vertex(e.substr(1)));

  std::vector<char> alive(edges.size(), 1);
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> in(vid.size(), 0), out(vid.size(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (alive[i]) {
        ++out[edges[i].first];
        ++in[edges[i].second];
      }
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (alive[i] && (in[edges[i].first] == 0 || out[edges[i].second] == 0)) {
        alive[i] = 0;
        changed = true;
      }
    }
  }

  std::set<Letters> vertices;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (alive[i]) {
      _edges.insert(local_edges[i]);
      vertices.insert(local_edges[i].substr(0, k - 1));
    }
  }

  if (_edges.empty())
    throw Error(ErrorCode::empty_subshift, "transfer graph has no cycle");

  _vertices = sorted_unique(vertices);
  _aperiodic = Tri::no;

  // an SFT is minimal iff it is a single periodic orbit
  bool single_cycle = _edges.size() == _vertices.size();
  if (single_cycle) {
    std::set<Letters> seen;
    Letters v = _vertices.front();
    while (seen.insert(v).second) {
      Letters next;
      for (std::size_t c = 0; c < _alphabet.size(); ++c) {
        Letters e = v + static_cast<char>(c);
        if (_edges.contains(e)) {
          next = e.substr(1);
          break;
        }
      }
      v = next;
    }
    single_cycle = seen.size() == _vertices.size();
  }
  _minimal = single_cycle ? Tri::yes : Tri::no;
}

void LanguageEngine::init_substitution()
{
  std::size_t n = _alphabet.size();

  // primitivity: some boolean power of the incidence matrix is positive
  std::vector<std::vector<char>> m(n, std::vector<char>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (char c : _rules[j])
      m[static_cast<Letter>(c)][j] = 1;
  }

  auto power = m;
  bool primitive = false;
  std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool positive = true;
    for (auto const &row : power) {
      for (char v : row)
        positive = positive && v;
    }
    if (positive) {
      primitive = true;
      break;
    }

    std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n && !next[i][j]; ++l)
          next[i][j] = power[i][l] && m[l][j];
      }
    }
    power = std::move(next);
  }
  if (!primitive)
    throw Error(ErrorCode::non_primitive_substitution, "no power of the substitution matrix is positive");

  // allowed 2-words: closure of the 2-factors of the images
  std::set<Letters> two;
  for (auto const &r : _rules) {
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      two.insert(r.substr(i, 2));
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto const &w : std::vector<Letters>(two.begin(), two.end())) {
      Letters img = substitute(w, 1);
      for (std::size_t i = 0; i + 1 < img.size(); ++i)
        changed = two.insert(img.substr(i, 2)).second || changed;
    }
  }
  _two_words = sorted_unique(two);

  // seed pair p|q for the least power k with sigma^k(q) starting with q and
  // sigma^k(p) ending with p
  std::vector<Letter> first(n), last(n);
  for (std::size_t c = 0; c < n; ++c) {
    first[c] = static_cast<Letter>(c);
    last[c] = static_cast<Letter>(c);
  }
  for (int k = 1; k <= seed_power_cap && _seed_power == 0; ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      first[c] = static_cast<Letter>(_rules[first[c]].front());
      last[c] = static_cast<Letter>(_rules[last[c]].back());
    }
    for (auto const &w : _two_words) {
      Letter p = static_cast<Letter>(w[0]);
      Letter q = static_cast<Letter>(w[1]);
      if (last[p] == p && first[q] == q) {
        _seed_power = k;
        _seed_left = p;
        _seed_right = q;
        break;
      }
    }
  }
  if (_seed_power == 0)
    throw Error(ErrorCode::not_implemented_seed, "no seed pair for powers up to 12");

  _minimal = Tri::yes;
  check_aperiodic();
}

void LanguageEngine::init_sturmian()
{
  _minimal = Tri::yes;
  // partial quotients repeat cyclically, so the slope is irrational
  _aperiodic = Tri::yes;
}

void LanguageEngine::check_aperiodic()
{
  for (int p = 1; p <= periodic_scan_cap; ++p) {
    std::size_t limit = static_cast<std::size_t>(4 * p + 64);
    bool finite = false;
    for (std::size_t len = p + 1; len <= limit; ++len) {
      auto const &words = layer(len).words;
      bool any = std::any_of(words.begin(), words.end(),
                             [&](Letters const &w) { return is_periodic_word(w, p); });
      if (!any) {
        finite = true;
        break;
      }
    }
    if (!finite) {
      _aperiodic = Tri::no;
      return;
    }
  }

  for (std::size_t len = 1; len <= complexity_scan; ++len) {
    if (layer(len).size() <= len) {
      _aperiodic = Tri::no;
      return;
    }
  }
  _aperiodic = Tri::yes;
}

Letters LanguageEngine::substitute(Letters const &w, int power) const
{
  Letters cur = w;
  for (int k = 0; k < power; ++k) {
    Letters next;
    for (char c : cur)
      next += _rules[static_cast<Letter>(c)];
    cur = std::move(next);
  }
  return cur;
}

Letters LanguageEngine::standard_word(int depth) const
{
  // s_{-1} = 1, s_0 = 0, s_1 = s_0^{a_1 - 1} s_{-1}, s_k = s_{k-1}^{a_k} s_{k-2}
  auto quotient = [&](int k) { return _quotients[(k - 1) % _quotients.size()]; };

  Letters prev(1, '\1');
  Letters cur(1, '\0');
  for (int k = 1; k <= depth; ++k) {
    Letters next;
    int reps = k == 1 ? quotient(k) - 1 : quotient(k);
    for (int i = 0; i < reps; ++i)
      next += cur;
    next += prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Layer const &LanguageEngine::layer(std::size_t length) const
{
  {
    std::lock_guard<std::mutex> lock(_cache_mutex);
    auto it = _cache.find(length);
    if (it != _cache.end())
      return *it->second;
  }

  auto computed = std::make_unique<Layer>(compute_layer(length));

  std::lock_guard<std::mutex> lock(_cache_mutex);
  auto [it, inserted] = _cache.emplace(length, std::move(computed));
  return *it->second;
}

std::vector<Letters> LanguageEngine::compute_layer(std::size_t length) const
{
  if (length == 0)
    return {""};

  switch (_kind) {
    case EngineKind::sft: return sft_layer(length);
    case EngineKind::substitution: return substitution_layer(length);
    case EngineKind::sturmian: return sturmian_layer(length);
    case EngineKind::recoded: return recoded_layer(length);
  }
  return {};
}

std::vector<Letters> LanguageEngine::sft_layer(std::size_t length) const
{
  std::size_t k = static_cast<std::size_t>(_order);
  if (length < k) {
    std::set<Letters> prefixes;
    for (auto const &v : _vertices)
      prefixes.insert(v.substr(0, length));
    return sorted_unique(prefixes);
  }

  std::vector<Letters> out;
  for (auto const &w : layer(length - 1).words) {
    Letters tail = w.substr(w.size() - (k - 1));
    for (std::size_t c = 0; c < _alphabet.size(); ++c) {
      tail.push_back(static_cast<char>(c));
      if (_edges.contains(hash_key(tail)))
        out.push_back(w + static_cast<char>(c));
      tail.pop_back();
    }
  }
  return out;
}

std::vector<Letters> LanguageEngine::substitution_layer(std::size_t length) const
{
  if (length == 1) {
    std::vector<Letters> out;
    for (std::size_t c = 0; c < _alphabet.size(); ++c)
      out.emplace_back(1, static_cast<char>(c));
    return out;
  }

  int k = 0;
  for (;;) {
    std::size_t shortest = SIZE_MAX;
    for (std::size_t c = 0; c < _alphabet.size(); ++c)
      shortest = std::min(shortest, substitute(Letters(1, static_cast<char>(c)), k).size());
    if (shortest + 1 >= length)
      break;
    ++k;
  }

  std::set<Letters> out;
  for (auto const &ab : _two_words) {
    Letters img = substitute(ab, k);
    for (std::size_t i = 0; i + length <= img.size(); ++i)
      out.insert(img.substr(i, length));
  }
  return sorted_unique(out);
}

std::vector<Letters> LanguageEngine::sturmian_layer(std::size_t length) const
{
  int max_q = *std::max_element(_quotients.begin(), _quotients.end());
  for (int depth = 1; depth <= _depth_cap; ++depth) {
    Letters s = standard_word(depth);
    if (s.size() < 2 * length + static_cast<std::size_t>(max_q) * length)
      continue;

    std::set<Letters> factors;
    for (std::size_t i = 0; i + length <= s.size(); ++i)
      factors.insert(s.substr(i, length));
    if (factors.size() == length + 1)
      return sorted_unique(factors);
  }
  throw Error(ErrorCode::depth_cap_exceeded,
              "length " + std::to_string(length) + " not certified within depth " +
                std::to_string(_depth_cap));
}

std::vector<Letters> LanguageEngine::recoded_layer(std::size_t length) const
{
  auto const &blocks = _source->layer(_block);
  std::vector<Letters> out;
  for (auto const &w : _source->layer(length + _block - 1).words) {
    Letters y;
    for (std::size_t i = 0; i < length; ++i)
      y.push_back(static_cast<char>(blocks.find(std::string_view(w).substr(i, _block))));
    out.push_back(std::move(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool LanguageEngine::is_allowed(std::string_view w) const
{
  for (char c : w) {
    if (static_cast<Letter>(c) >= _alphabet.size())
      return false;
  }
  return layer(w.size()).find(w) != Layer::npos;
}

Letters LanguageEngine::point_window(int radius) const
{
  std::size_t m = static_cast<std::size_t>(radius);

  switch (_kind) {
    case EngineKind::substitution: {
      Letters right(1, static_cast<char>(_seed_right));
      while (right.size() < m + 1)
        right = substitute(right, _seed_power);
      Letters left(1, static_cast<char>(_seed_left));
      while (left.size() < m)
        left = substitute(left, _seed_power);
      return left.substr(left.size() - m) + right.substr(0, m + 1);
    }
    case EngineKind::sturmian: {
      Letters c;
      for (int depth = 1; depth <= _depth_cap; ++depth) {
        c = standard_word(depth);
        if (c.size() >= m + 1)
          break;
      }
      if (c.size() < m + 1)
        throw Error(ErrorCode::depth_cap_exceeded,
                    "point window of radius " + std::to_string(radius) + " beyond depth cap");

      // x(n) = c_n for n >= 1, x(0) = 0, x(-1) = 1, x(-n) = c_{n-1} for n >= 2
      auto x = [&](long n) -> char {
        if (n >= 1) return c[n - 1];
        if (n == 0) return '\0';
        if (n == -1) return '\1';
        return c[-n - 2];
      };
      Letters out;
      for (long n = -radius; n <= radius; ++n)
        out.push_back(x(n));
      return out;
    }
    case EngineKind::sft: {
      std::size_t k = static_cast<std::size_t>(_order);
      Letters right = _vertices.front();
      while (right.size() < m + 1) {
        Letters tail = right.substr(right.size() - (k - 1));
        for (std::size_t c = 0; c < _alphabet.size(); ++c) {
          if (_edges.contains(tail + static_cast<char>(c))) {
            right.push_back(static_cast<char>(c));
            break;
          }
        }
      }
      Letters left;
      Letters head = _vertices.front();
      while (left.size() < m) {
        for (std::size_t c = 0; c < _alphabet.size(); ++c) {
          Letters e = static_cast<char>(c) + head.substr(0, k - 1);
          if (_edges.contains(e)) {
            left.insert(left.begin(), static_cast<char>(c));
            head = e.substr(0, k - 1);
            break;
          }
        }
      }
      return left + right.substr(0, m + 1);
    }
    case EngineKind::recoded: {
      Letters x = _source->point_window(radius + _block);
      auto const &blocks = _source->layer(_block);
      Letters out;
      for (long n = -radius; n <= radius; ++n) {
        std::size_t pos = static_cast<std::size_t>(n + radius + _block);
        out.push_back(static_cast<char>(blocks.find(std::string_view(x).substr(pos, _block))));
      }
      return out;
    }
  }
  return {};
}

std::vector<Letters> LanguageEngine::excluded_words() const
{
  if (_kind != EngineKind::sft)
    throw Error(ErrorCode::precondition_violated, "excluded words are defined for SFT engines");

  double total = std::pow(static_cast<double>(_alphabet.size()), _order);
  if (total > (1 << 22))
    throw Error(ErrorCode::cap_exceeded, "too many words of the SFT order to list");

  std::vector<Letters> out;
  Letters w(_order, '\0');
  for (;;) {
    if (!_edges.contains(w))
      out.push_back(w);
    int i = _order - 1;
    while (i >= 0 && static_cast<Letter>(w[i]) + 1u == _alphabet.size()) {
      w[i] = '\0';
      --i;
    }
    if (i < 0)
      break;
    w[i] = static_cast<char>(w[i] + 1);
  }
  return out;
}

int LanguageEngine::exact_period() const
{
  if (_minimal != Tri::yes || _aperiodic == Tri::yes)
    throw Error(ErrorCode::precondition_violated, "exact period needs a finite minimal engine");
  if (_kind == EngineKind::sft)
    return static_cast<int>(_vertices.size());
  return static_cast<int>(layer(complexity_scan).size());
}

std::string LanguageEngine::describe() const
{
  std::ostringstream os;
  auto tri = [](Tri t) { return t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown"; };
  static char const *kinds[] = {"sft", "substitution", "sturmian", "recoded"};
  os << "kind=" << kinds[static_cast<int>(_kind)] << " letters=" << _alphabet.size()
     << " minimal=" << tri(_minimal) << " aperiodic=" << tri(_aperiodic);
  if (_kind == EngineKind::recoded)
    os << " block=" << _block;
  if (_kind == EngineKind::sft)
    os << " order=" << _order;
  return os.str();
}

Engine build_engine(EngineSpec spec) { return LanguageEngine::build(std::move(spec)); }

bool is_allowed(Engine const &engine, std::string_view w) { return engine->is_allowed(w); }

std::vector<Letters> const &allowed_words(Engine const &engine, std::size_t length)
{
  return engine->layer(length).words;
}

int recurrence_bound(Engine const &engine, Letters const &w, int cap)
{
  if (engine->minimal() != Tri::yes)
    throw Error(ErrorCode::not_minimal, "recurrence bound needs a minimal engine");
  if (!engine->is_allowed(w))
    throw Error(ErrorCode::precondition_violated, "word not allowed", engine->alphabet().render(w));

  std::size_t a = engine->alphabet().size();
  if (cap <= 0)
    cap = static_cast<int>(10 * std::max<std::size_t>(w.size(), 1) * a * a);

  for (int r = static_cast<int>(w.size()); r <= cap; ++r) {
    auto const &words = engine->layer(r).words;
    bool all = std::all_of(words.begin(), words.end(),
                           [&](Letters const &u) { return u.find(w) != Letters::npos; });
    if (all)
      return r;
  }
  throw Error(ErrorCode::cap_exceeded, "recurrence bound above cap " + std::to_string(cap));
}

Letters point_window(Engine const &engine, int radius) { return engine->point_window(radius); }

std::pair<Engine, RecodingMap> proper_recode(Engine const &engine, int d)
{
  if (engine->aperiodic() != Tri::yes)
    throw Error(ErrorCode::not_aperiodic, "proper recoding needs an aperiodic engine");

  constexpr int block_cap = 256;
  for (int l = 1; l <= block_cap; ++l) {
    bool ok = true;
    for (int p = 1; p <= d && ok; ++p) {
      auto const &words = engine->layer(l + p).words;
      ok = std::none_of(words.begin(), words.end(),
                        [&](Letters const &w) { return is_periodic_word(w, p); });
    }
    if (ok) {
      RecodingMap map;
      map.block_length = l;
      map.letter_decode = engine->layer(l).words;
      return {LanguageEngine::recoded(engine, l), map};
    }
  }
  throw Error(ErrorCode::cap_exceeded, "no block length up to 256 is proper");
}

std::vector<Letters> periodic_points(Engine const &engine, int p)
{
  if (engine->kind() != EngineKind::sft)
    throw Error(ErrorCode::precondition_violated, "periodic points are computed for SFT engines");
  if (p < 1)
    throw Error(ErrorCode::precondition_violated, "period must be positive");

  std::size_t k = static_cast<std::size_t>(engine->sft_order());
  std::vector<Letters> out;
  for (auto const &b : engine->layer(p).words) {
    Letters cyc;
    while (cyc.size() < static_cast<std::size_t>(p) + k)
      cyc += b;
    bool ok = true;
    for (std::size_t i = 0; i < static_cast<std::size_t>(p) && ok; ++i)
      ok = engine->sft_edge(std::string_view(cyc).substr(i, k));
    if (ok)
      out.push_back(b);
  }
  return out;
}

Engine sft_approximation(Engine const &engine, int n)
{
  if (n < 1)
    throw Error(ErrorCode::precondition_violated, "approximation order must be positive");
  return LanguageEngine::sft_from_allowed(engine->alphabet(), n, engine->layer(n).words);
}

bool is_irreducible(Engine const &engine)
{
  if (engine->kind() != EngineKind::sft)
    throw Error(ErrorCode::precondition_violated, "irreducibility is decided for SFT engines");

  std::size_t k = static_cast<std::size_t>(engine->sft_order());
  auto const &vertices = engine->layer(k - 1).words;
  std::size_t a = engine->alphabet().size();

  auto reach = [&](bool forward) {
    std::vector<char> seen(vertices.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      Letters v = vertices[stack.back()];
      stack.pop_back();
      for (std::size_t c = 0; c < a; ++c) {
        Letters e = forward ? v + static_cast<char>(c) : static_cast<char>(c) + v;
        if (!engine->sft_edge(e))
          continue;
        Letters u = forward ? e.substr(1) : e.substr(0, k - 1);
        auto idx = engine->layer(k - 1).find(u);
        if (!seen[idx]) {
          seen[idx] = 1;
          stack.push_back(idx);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s; });
  };
  return reach(true) && reach(false);
}

bool is_proper(Engine const &engine, int d)
{
  for (auto const &w : engine->layer(d + 1).words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[i] == w[j])
          return false;
      }
    }
  }
  return true;
}

}  // namespace cantorfull
