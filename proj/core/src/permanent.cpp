#include "star/permanent.hpp"

#include <stdexcept>

namespace star {

namespace {

ScalarTag matrix_tag(const RectMatrix& a) {
  return a.entries.empty() || a.entries[0].empty() ? ScalarTag::exact
                                                   : a.entries[0][0].tag();
}

// Permanent of the square block formed by rows `rows` and all columns.
Scalar square_permanent(const RectMatrix& a, const std::vector<int>& rows) {
  int k = static_cast<int>(rows.size());
  ScalarTag tag = matrix_tag(a);
  if (k == 0) return Scalar::one(tag);
  if (k == 1) return a.entries[rows[0]][0];
  if (k == 2)
    return a.entries[rows[0]][0] * a.entries[rows[1]][1] +
           a.entries[rows[0]][1] * a.entries[rows[1]][0];

  // Ryser: perm = (-1)^k sum_{S subset of cols} (-1)^|S| prod_i sum_{j in S} a_ij
  Scalar total = Scalar::zero(tag);
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Scalar prod = Scalar::one(tag);
    for (int i = 0; i < k; ++i) {
      Scalar rowsum = Scalar::zero(tag);
      for (int j = 0; j < k; ++j)
        if (mask & (1u << j)) rowsum += a.entries[rows[i]][j];
      prod *= rowsum;
    }
    int bits = __builtin_popcount(mask);
    if ((k - bits) % 2 == 0)
      total += prod;
    else
      total += -prod;
  }
  return total;
}

}  // namespace

Scalar rectangular_permanent(const RectMatrix& a) {
  int m = a.rows(), n = a.cols();
  if (m < n)
    throw std::domain_error("rectangular_permanent: need rows >= cols");
  for (const auto& row : a.entries)
    if (static_cast<int>(row.size()) != n)
      throw std::domain_error("rectangular_permanent: ragged matrix");
  ScalarTag tag = matrix_tag(a);
  if (n == 0) return Scalar::one(tag);

  Scalar total = Scalar::zero(tag);
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  while (true) {
    total += square_permanent(a, idx);
    int k = n - 1;
    while (k >= 0 && idx[k] == m - n + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

}  // namespace star
