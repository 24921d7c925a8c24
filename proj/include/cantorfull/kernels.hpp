#ifndef CANTORFULL_KERNELS_HPP
#define CANTORFULL_KERNELS_HPP

#include <vector>

#include "cantorfull/language.hpp"

namespace cantorfull {

class Element;

namespace kernels {

// sentinels in certificate output
constexpr int no_preimage = -100000;
constexpr int many_preimages = -200000;

// cocycle table of f o g over the allowed words of length 2R + 1
std::vector<int> compose_table_serial(Element const &f, Element const &g, int radius);
std::vector<int> compose_table_omp(Element const &f, Element const &g, int radius);

// per-word witness k for the bijectivity certificate of (radius, table)
std::vector<int> certificate_serial(Engine const &engine, int radius, int dbound,
                                    std::vector<int> const &table);
std::vector<int> certificate_omp(Engine const &engine, int radius, int dbound,
                                 std::vector<int> const &table);

}  // namespace kernels
}  // namespace cantorfull

#endif  // CANTORFULL_KERNELS_HPP
