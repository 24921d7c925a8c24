#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <random>
#include <sstream>
#include <unordered_set>

#include "cantorfull/caps.hpp"
#include "cantorfull/error.hpp"
#include "cantorfull/fullgroup.hpp"
#include "cantorfull/kernels.hpp"

namespace cantorfull {

struct Element::Lazy {
  std::once_flag once;
  std::vector<int> witness;
};

namespace {

void same_engine(Engine const &a, Engine const &b)
{
  if (a != b)
    throw Error(ErrorCode::engine_mismatch, "operands live on different engines");
}

void require_bijective(Element const &f, char const *what)
{
  if (!f.bijective())
    throw Error(ErrorCode::not_bijective, std::string(what) + " needs a bijective element");
}

// the table factors through windows of radius r - 1; since factoring at r'
// implies factoring at r' + 1, scanning downward finds the least radius
bool factors_below(Engine const &engine, int r, std::vector<int> const &table)
{
  auto const &words = engine->layer(2 * r + 1).words;
  auto const &inner = engine->layer(2 * r - 1);
  std::vector<int> seen(inner.size(), 0);
  std::vector<char> set(inner.size(), 0);
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto idx = inner.find(std::string_view(words[i]).substr(1, 2 * r - 1));
    if (!set[idx]) {
      set[idx] = 1;
      seen[idx] = table[i];
    } else if (seen[idx] != table[i]) {
      return false;
    }
  }
  return true;
}

std::vector<int> restrict_table(Engine const &engine, int r, int target, std::vector<int> const &table)
{
  auto const &words = engine->layer(2 * r + 1).words;
  auto const &inner = engine->layer(2 * target + 1);
  std::vector<int> out(inner.size(), 0);
  int off = r - target;
  for (std::size_t i = 0; i < words.size(); ++i)
    out[inner.find(std::string_view(words[i]).substr(off, 2 * target + 1))] = table[i];
  return out;
}

Error certificate_error(Engine const &engine, int radius, int dbound, std::vector<int> const &cert)
{
  auto const &words = engine->layer(2 * (radius + dbound) + 1).words;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    if (cert[i] == kernels::no_preimage)
      return Error(ErrorCode::not_surjective, "word has no preimage", engine->alphabet().render(words[i]));
    if (cert[i] == kernels::many_preimages)
      return Error(ErrorCode::not_injective, "word has several preimages", engine->alphabet().render(words[i]));
  }
  return Error(ErrorCode::not_bijective, "certificate failed");
}

bool certificate_passes(std::vector<int> const &cert)
{
  return std::none_of(cert.begin(), cert.end(),
                      [](int k) { return k == kernels::no_preimage || k == kernels::many_preimages; });
}

// some point continuing the state s (last m letters) to the right violates
// x(i) = x(i - q)
bool violates_right(Engine const &e, Letters const &start, int q)
{
  std::size_t k = static_cast<std::size_t>(e->sft_order());
  std::size_t m = start.size();
  std::unordered_set<Letters> seen{start};
  std::vector<Letters> stack{start};
  std::size_t n = e->alphabet().size();
  while (!stack.empty()) {
    Letters s = std::move(stack.back());
    stack.pop_back();
    Letters edge = s.substr(m - (k - 1));
    edge.push_back('\0');
    for (std::size_t c = 0; c < n; ++c) {
      edge.back() = static_cast<char>(c);
      if (!e->sft_edge(edge))
        continue;
      if (static_cast<char>(c) != s[m - q])
        return true;
      Letters t = s.substr(1);
      t.push_back(static_cast<char>(c));
      if (seen.insert(t).second)
        stack.push_back(std::move(t));
    }
  }
  return false;
}

bool violates_left(Engine const &e, Letters const &start, int q)
{
  std::size_t k = static_cast<std::size_t>(e->sft_order());
  std::size_t m = start.size();
  std::unordered_set<Letters> seen{start};
  std::vector<Letters> stack{start};
  std::size_t n = e->alphabet().size();
  while (!stack.empty()) {
    Letters s = std::move(stack.back());
    stack.pop_back();
    Letters edge = '\0' + s.substr(0, k - 1);
    for (std::size_t c = 0; c < n; ++c) {
      edge.front() = static_cast<char>(c);
      if (!e->sft_edge(edge))
        continue;
      if (static_cast<char>(c) != s[q - 1])
        return true;
      Letters t = static_cast<char>(c) + s.substr(0, m - 1);
      if (seen.insert(t).second)
        stack.push_back(std::move(t));
    }
  }
  return false;
}

bool sft_moves(Engine const &e, Letters const &w, int q)
{
  if (!is_periodic_word(w, q))
    return true;
  std::size_t k = static_cast<std::size_t>(e->sft_order());
  std::size_t m = std::max<std::size_t>(q, k - 1);
  std::size_t n = e->alphabet().size();

  auto admissible = [&](Letters const &u, bool front) {
    if (u.size() < k)
      return e->is_allowed(u);
    return e->sft_edge(front ? std::string_view(u).substr(0, k) : std::string_view(u).substr(u.size() - k));
  };

  std::function<bool(Letters const &)> grow_left = [&](Letters const &u) {
    if (!is_periodic_word(u, q))
      return true;
    if (u.size() >= m)
      return violates_right(e, u.substr(u.size() - m), q);
    for (std::size_t c = 0; c < n; ++c) {
      Letters v = static_cast<char>(c) + u;
      if (admissible(v, true) && grow_left(v))
        return true;
    }
    return false;
  };
  std::function<bool(Letters const &)> grow_right = [&](Letters const &u) {
    if (!is_periodic_word(u, q))
      return true;
    if (u.size() >= m)
      return violates_left(e, u.substr(0, m), q);
    for (std::size_t c = 0; c < n; ++c) {
      Letters v = u + static_cast<char>(c);
      if (admissible(v, false) && grow_right(v))
        return true;
    }
    return false;
  };
  return grow_left(w) || grow_right(w);
}

// windows of radius M around sample points
std::vector<Letters> sample_windows(Engine const &engine, int &M)
{
  std::vector<Letters> out;
  if (engine->kind() == EngineKind::sft) {
    std::mt19937 rng(12345);
    std::size_t k = static_cast<std::size_t>(engine->sft_order());
    auto const &starts = engine->layer(k - 1).words;
    std::size_t n = engine->alphabet().size();
    for (int s = 0; s < 24; ++s) {
      Letters w = starts[rng() % starts.size()];
      std::vector<char> options;
      while (w.size() < static_cast<std::size_t>(2 * M + 1)) {
        options.clear();
        Letters edge = w.substr(w.size() - (k - 1)) + '\0';
        for (std::size_t c = 0; c < n; ++c) {
          edge.back() = static_cast<char>(c);
          if (engine->sft_edge(edge))
            options.push_back(static_cast<char>(c));
        }
        w.push_back(options[rng() % options.size()]);
      }
      out.push_back(w.substr(w.size() - (2 * M + 1)));
    }
    return out;
  }

  constexpr int spread = 120;
  Letters x;
  for (;;) {
    try {
      x = engine->point_window(M + spread);
      break;
    } catch (Error const &e) {
      if (e.code() != ErrorCode::depth_cap_exceeded || M < 8)
        throw;
      M /= 2;
    }
  }
  for (int off = -spread; off <= spread; off += 5)
    out.push_back(x.substr(static_cast<std::size_t>(spread + off), 2 * M + 1));
  return out;
}

}  // namespace

int Element::displacement(std::string_view window) const
{
  auto idx = _layer->find(window);
  if (idx == Layer::npos)
    throw Error(ErrorCode::precondition_violated, "window is not an allowed word");
  return _table[idx];
}

int Element::displacement_at(std::string_view y, long center) const
{
  return displacement(y.substr(center - _radius, 2 * _radius + 1));
}

std::vector<int> const &Element::witness() const
{
  require_bijective(*this, "witness");
  std::call_once(_lazy->once, [&] {
    auto cert = kernels::certificate_omp(_engine, _radius, _dbound, _table);
    if (!certificate_passes(cert))
      throw certificate_error(_engine, _radius, _dbound, cert);
    _lazy->witness = std::move(cert);
  });
  return _lazy->witness;
}

std::string Element::dump() const
{
  std::ostringstream os;
  os << "radius=" << _radius << " dbound=" << _dbound << "\n";
  auto const &words = _layer->words;
  for (std::size_t i = 0; i < words.size(); ++i)
    os << _engine->alphabet().render(words[i]) << " -> " << _table[i] << "\n";
  return os.str();
}

std::string Element::key() const
{
  std::string out = std::to_string(_radius) + "|";
  out.append(reinterpret_cast<char const *>(_table.data()), _table.size() * sizeof(int));
  return out;
}

Element build_element(Engine engine, int radius, std::vector<int> table, Certify mode)
{
  if (radius < 0)
    throw Error(ErrorCode::precondition_violated, "radius must be nonnegative");
  if (table.size() != engine->layer(2 * radius + 1).size())
    throw Error(ErrorCode::partial_table, "table does not cover the allowed words of length " +
                                              std::to_string(2 * radius + 1));

  int dbound = 0;
  for (int k : table)
    dbound = std::max(dbound, std::abs(k));
  if (dbound > caps().dbound)
    throw Error(ErrorCode::displacement_cap_exceeded,
                "displacement " + std::to_string(dbound) + " exceeds cap " + std::to_string(caps().dbound));

  int r = radius;
  while (r > 0 && factors_below(engine, r, table)) {
    table = restrict_table(engine, r, r - 1, table);
    --r;
  }

  Element f;
  f._engine = std::move(engine);
  f._layer = &f._engine->layer(2 * r + 1);
  f._radius = r;
  f._dbound = dbound;
  f._table = std::move(table);
  f._lazy = std::make_shared<Element::Lazy>();

  switch (mode) {
    case Certify::trusted:
      f._bijective = true;
      break;
    case Certify::none:
      break;
    case Certify::group:
    case Certify::semigroup: {
      auto cert = kernels::certificate_omp(f._engine, r, dbound, f._table);
      if (certificate_passes(cert)) {
        f._bijective = true;
        std::call_once(f._lazy->once, [&] { f._lazy->witness = std::move(cert); });
      } else if (mode == Certify::group) {
        throw certificate_error(f._engine, r, dbound, cert);
      }
      break;
    }
  }
  return f;
}

Element make_element(Engine engine, int radius, std::vector<int> table)
{
  return build_element(std::move(engine), radius, std::move(table), Certify::group);
}

Element make_semigroup_element(Engine engine, int radius, std::vector<int> table)
{
  return build_element(std::move(engine), radius, std::move(table), Certify::semigroup);
}

Element element_from(Engine engine, int radius, std::function<int(std::string_view)> const &kappa)
{
  auto const &words = engine->layer(2 * radius + 1).words;
  std::vector<int> table(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    table[i] = kappa(words[i]);
  return make_element(std::move(engine), radius, std::move(table));
}

Element identity(Engine engine)
{
  std::size_t n = engine->layer(1).size();
  return build_element(std::move(engine), 0, std::vector<int>(n, 0), Certify::trusted);
}

Element shift(Engine engine, int k)
{
  std::size_t n = engine->layer(1).size();
  return build_element(std::move(engine), 0, std::vector<int>(n, k), Certify::trusted);
}

Element compose(Element const &f, Element const &g)
{
  same_engine(f.engine(), g.engine());
  int radius = std::max(g.radius(), f.radius() + g.dbound());
  auto table = kernels::compose_table_omp(f, g, radius);
  auto mode = f.bijective() && g.bijective() ? Certify::trusted : Certify::none;
  return build_element(f.engine(), radius, std::move(table), mode);
}

Element inverse(Element const &f)
{
  require_bijective(f, "inverse");
  auto table = f.witness();
  for (int &k : table)
    k = -k;
  return build_element(f.engine(), f.radius() + f.dbound(), std::move(table), Certify::trusted);
}

Element power(Element const &f, long n)
{
  Element base = n < 0 ? inverse(f) : f;
  n = std::labs(n);
  Element acc = identity(f.engine());
  while (n > 0) {
    if (n & 1)
      acc = compose(acc, base);
    n >>= 1;
    if (n > 0)
      base = compose(base, base);
  }
  return acc;
}

Element commutator(Element const &f, Element const &g)
{
  return compose(compose(f, g), compose(inverse(f), inverse(g)));
}

bool moves_some_point(Engine const &engine, std::string_view w, int p)
{
  if (p == 0)
    return false;
  if (engine->free())
    return true;
  if (engine->kind() == EngineKind::sft)
    return sft_moves(engine, Letters(w), std::abs(p));
  if (engine->minimal() == Tri::yes)
    return p % engine->exact_period() != 0;
  throw Error(ErrorCode::precondition_violated, "fixed points are decidable on aperiodic, SFT or finite minimal engines");
}

bool is_identity(Element const &f)
{
  auto const &table = f.table();
  if (std::all_of(table.begin(), table.end(), [](int k) { return k == 0; }))
    return true;
  if (f.engine()->free())
    return false;
  auto const &words = f.engine()->layer(2 * f.radius() + 1).words;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (moves_some_point(f.engine(), words[i], table[i]))
      return false;
  }
  return true;
}

bool equal(Element const &f, Element const &g)
{
  same_engine(f.engine(), g.engine());
  require_bijective(g, "equal");
  if (f.engine()->free())
    return f.radius() == g.radius() && f.table() == g.table();
  return is_identity(compose(f, inverse(g)));
}

CanonicalForm canonical_form(Element const &f)
{
  return {f.radius(), f.dbound(), f.engine()->layer(2 * f.radius() + 1).words, f.table()};
}

std::optional<long> orbit_shift(Element const &f, std::string_view y, long center, long times)
{
  long s = 0;
  long r = f.radius();
  long len = static_cast<long>(y.size());
  for (long t = 0; t < times; ++t) {
    long c = center - s;
    if (c - r < 0 || c + r >= len)
      return std::nullopt;
    s += f.displacement_at(y, c);
  }
  return s;
}

OrderResult order(Element const &f, long cap)
{
  require_bijective(f, "order");
  if (cap <= 0)
    cap = caps().order;
  if (is_identity(f))
    return {true, 1};

  // refuted[n] = some sample point is moved by f^n
  std::vector<char> refuted(static_cast<std::size_t>(cap) + 1, 0);
  if (f.dbound() > 0) {
    long want = cap * f.dbound() + f.radius() + 1;
    int M = static_cast<int>(std::min<long>(want, 200000));
    auto samples = sample_windows(f.engine(), M);
    for (auto const &y : samples) {
      long s = 0;
      long c = M;
      for (long n = 1; n <= cap; ++n) {
        long pos = c - s;
        if (pos - f.radius() < 0 || pos + f.radius() >= static_cast<long>(y.size()))
          break;
        s += f.displacement_at(y, pos);
        if (s != 0 && !is_periodic_word(y, static_cast<int>(std::labs(s))))
          refuted[n] = 1;
      }
    }
  }

  for (long n = 2; n <= cap; ++n) {
    if (refuted[n])
      continue;
    if (is_identity(power(f, n)))
      return {true, n};
  }
  return {false, cap};
}

CloSet support(Element const &f)
{
  auto const &words = f.engine()->layer(2 * f.radius() + 1).words;
  std::vector<char> mask(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    mask[i] = moves_some_point(f.engine(), words[i], f.table()[i]) ? 1 : 0;
  return CloSet(f.engine(), f.radius(), std::move(mask)).canonical();
}

}  // namespace cantorfull
