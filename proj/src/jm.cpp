#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "cantorfull/error.hpp"
#include "cantorfull/jm.hpp"

namespace cantorfull {

namespace {

constexpr double logsum_tolerance = 1e-9;
constexpr long unbounded = std::numeric_limits<long>::max() / 4;

double tree_product(std::vector<double> const &f, std::size_t lo, std::size_t hi)
{
  if (hi - lo == 1)
    return f[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  return tree_product(f, lo, mid) * tree_product(f, mid, hi);
}

long half_width(BoundedPermutationView const &g, long n)
{
  if (n < 1)
    throw Error(ErrorCode::precondition_violated, "n must be positive");
  long w = n + g.bound;
  if (w > g.range)
    throw Error(ErrorCode::range_unavailable,
                "permutation known on |j| <= " + std::to_string(g.range) + ", need " + std::to_string(w));
  return w;
}

double factor(BoundedPermutationView const &g, long n, long j)
{
  return std::cos(theta(n, j) - theta(n, g(j)));
}

double checked(BoundedPermutationView const &g, long n, double product)
{
  double logs = correlation_logsum(g, n);
  double scale = std::max(std::abs(product), std::abs(logs));
  if (scale > 0 && std::abs(product - logs) > logsum_tolerance * scale)
    throw Error(ErrorCode::precondition_violated, "tree product and log-sum disagree");
  return std::clamp(product, 0.0, 1.0);
}

}  // namespace

BoundedPermutationView view_of(WindowedPermutation const &p)
{
  return {[p](long j) { return p(j); }, p.bound, p.interior()};
}

BoundedPermutationView eventually_translation(std::map<long, long> exceptions, long left, long right)
{
  long c = std::max(std::labs(left), std::labs(right));
  for (auto [j, v] : exceptions)
    c = std::max(c, std::labs(v - j));
  return {[exceptions = std::move(exceptions), left, right](long j) {
            auto it = exceptions.find(j);
            if (it != exceptions.end())
              return it->second;
            return j + (j < 0 ? left : right);
          },
          c, unbounded};
}

BoundedPermutationView translation_view(long k)
{
  return eventually_translation({}, k, k);
}

BoundedPermutationView transposition_view(long i, long j)
{
  return eventually_translation({{i, j}, {j, i}}, 0, 0);
}

BoundedPermutationView inverse_view(BoundedPermutationView const &v)
{
  long range = v.range == unbounded ? unbounded : v.range - v.bound;
  return {[v](long m) {
            for (long j = m - v.bound; j <= m + v.bound; ++j) {
              if (v(j) == m)
                return j;
            }
            throw Error(ErrorCode::range_unavailable, "no preimage within the displacement bound");
          },
          v.bound, range};
}

BoundedPermutationView reflected_view(BoundedPermutationView const &v)
{
  return {[v](long n) { return -v(-n); }, v.bound, v.range};
}

double theta(long n, long j)
{
  double ratio = std::sqrt(static_cast<double>(std::labs(j)) / static_cast<double>(n));
  return std::numbers::pi / 4 * std::min(ratio, 1.0);
}

double correlation_serial(BoundedPermutationView const &g, long n)
{
  long w = half_width(g, n);
  std::vector<double> f(static_cast<std::size_t>(2 * w + 1));
  for (long j = -w; j <= w; ++j)
    f[static_cast<std::size_t>(j + w)] = factor(g, n, j);
  return checked(g, n, tree_product(f, 0, f.size()));
}

double correlation(BoundedPermutationView const &g, long n)
{
  long w = half_width(g, n);
  std::vector<double> f(static_cast<std::size_t>(2 * w + 1));
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (long j = -w; j <= w; ++j) {
    try {
      f[static_cast<std::size_t>(j + w)] = factor(g, n, j);
    } catch (...) {
#pragma omp critical
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return checked(g, n, tree_product(f, 0, f.size()));
}

double correlation_logsum(BoundedPermutationView const &g, long n)
{
  long w = half_width(g, n);
  double s = 0;
  for (long j = -w; j <= w; ++j) {
    double f = factor(g, n, j);
    if (f <= 0)
      return 0;
    s += std::log(f);
  }
  return std::exp(s);
}

double hn_lower_bound(BoundedPermutationView const &g, long n)
{
  long w = half_width(g, n);
  double s = 0;
  for (long j = -w; j <= w; ++j) {
    double d = theta(n, j) - theta(n, g(j));
    s += d * d;
  }
  return std::exp(-s);
}

CorrelationReport decay_report(BoundedPermutationView const &g, std::vector<long> const &ns)
{
  CorrelationReport out;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2)
      throw Error(ErrorCode::precondition_violated, "report rows need n >= 2");
    if (i > 0 && ns[i] <= ns[i - 1])
      throw Error(ErrorCode::precondition_violated, "n list must be increasing");
    CorrelationRow row;
    row.n = ns[i];
    row.c = correlation(g, ns[i]);
    row.b = hn_lower_bound(g, ns[i]);
    row.one_minus_c = 1 - row.c;
    row.ratio = row.one_minus_c * static_cast<double>(ns[i]) / std::log(static_cast<double>(ns[i]));
    out.max_ratio = std::max(out.max_ratio, row.ratio);
    out.rows.push_back(row);
  }
  return out;
}

std::string report_tsv(CorrelationReport const &r)
{
  std::ostringstream out;
  out << "n\tC\tB\tone_minus_C\tratio\n" << std::setprecision(17);
  for (auto const &row : r.rows)
    out << row.n << '\t' << row.c << '\t' << row.b << '\t' << row.one_minus_c << '\t' << row.ratio << '\n';
  return out.str();
}

std::string report_loglog(CorrelationReport const &r)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "log10(n)  log10(1-C)\n";
  for (auto const &row : r.rows) {
    out << std::setw(8) << std::log10(static_cast<double>(row.n)) << "  ";
    if (row.one_minus_c > 0)
      out << std::setw(10) << std::log10(row.one_minus_c);
    else
      out << std::setw(10) << "-inf";
    out << "  " << std::string(row.one_minus_c > 0 ? static_cast<std::size_t>(std::max(0.0, 20 + 2 * std::log10(row.one_minus_c))) : 0, '#')
        << '\n';
  }
  return out.str();
}

}  // namespace cantorfull
