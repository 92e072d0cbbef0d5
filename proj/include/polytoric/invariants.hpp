#ifndef POLYTORIC_INVARIANTS_HPP
#define POLYTORIC_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polytoric/basis.hpp"
#include "polytoric/presentation.hpp"

namespace polytoric {

// Values HF(0)..HF(d_max) where HF(e) counts the distinct degree-e
// products of basis elements.
std::vector<std::uint64_t> hilbert_function(const MonomialBasis& b, int d_max);

// Rank of the exponent matrix, computed fraction-free over the integers.
int krull_dim(const MonomialBasis& b);

struct HVector {
  int dim = 0;
  std::vector<long long> h;  // trailing zeros trimmed
};

// Numerator of the Hilbert series over (1-t)^dim, read off through
// alternating binomial differences of HF.  Demands max(2, dim) zero
// coefficients in a row at the top of the window as evidence the
// differences have settled; throws NotStabilized otherwise, in which
// case a larger d_max may succeed.
HVector h_vector(const MonomialBasis& b, int d_max);

bool is_palindromic(const std::vector<long long>& h);

struct ReesOptions {
  int cap_x = 2;                       // largest x-degree swept
  int cap_y = 3;                       // largest y-degree swept
  std::uint64_t fiber_cap = 1'000'000;
};

struct ReesGenerator {
  int a = 0;  // x-degree
  int b = 0;  // y-degree
  Monomial lhs_x, rhs_x;
  YMonomial lhs_y, rhs_y;
  std::string text;  // "x2*y1 - x1*y2"
};

struct ReesResult {
  std::vector<ReesGenerator> gens;  // swept by (a+b, a, b) ascending
  bool has_linear_ydeg = false;     // some generator sits in bidegree (0, 1)
  int cap_x = 0, cap_y = 0;
};

// Defining relations of the algebra K[x, y] / (y_v - image_v t) in
// bidegrees (a, b) with a <= cap_x, b <= cap_y: sweeping bidegrees in
// order, groups monomials x^alpha y_U by total image and joins each
// group's components with canonical binomials, earlier output acting as
// rewrite moves.  Pure x bidegrees (a, 0) never relate and are skipped.
ReesResult rees_bidegrees(const Presentation& p, const ReesOptions& opts = {});

}  // namespace polytoric

#endif
