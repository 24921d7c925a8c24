#ifndef CANTORFULL_JM_HPP
#define CANTORFULL_JM_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cantorfull/actions.hpp"

namespace cantorfull {

// a bounded-displacement permutation of Z, evaluable on [-range, range]
struct BoundedPermutationView {
  std::function<long(long)> g;
  long bound = 0;
  long range = 0;

  long operator()(long j) const { return g(j); }
};

BoundedPermutationView view_of(WindowedPermutation const &p);
// exceptions, then j + left for j < 0 and j + right for j >= 0
BoundedPermutationView eventually_translation(std::map<long, long> exceptions, long left, long right);
BoundedPermutationView translation_view(long k);
BoundedPermutationView transposition_view(long i, long j);
BoundedPermutationView inverse_view(BoundedPermutationView const &v);
// n -> -g(-n)
BoundedPermutationView reflected_view(BoundedPermutationView const &v);

double theta(long n, long j);

// prod over |j| <= n + c of cos(theta_nj - theta_n g(j)), balanced tree product
double correlation(BoundedPermutationView const &g, long n);
double correlation_serial(BoundedPermutationView const &g, long n);
// same product through the sum of logarithms
double correlation_logsum(BoundedPermutationView const &g, long n);
double hn_lower_bound(BoundedPermutationView const &g, long n);

struct CorrelationRow {
  long n = 0;
  double c = 0;
  double b = 0;
  double one_minus_c = 0;
  double ratio = 0;
};

struct CorrelationReport {
  std::vector<CorrelationRow> rows;
  double max_ratio = 0;
};

CorrelationReport decay_report(BoundedPermutationView const &g, std::vector<long> const &ns);
std::string report_tsv(CorrelationReport const &r);
// log10(n) against log10(1 - C) as a text table
std::string report_loglog(CorrelationReport const &r);

}  // namespace cantorfull

#endif  // CANTORFULL_JM_HPP
