#ifndef QHILB_IDENTITIES_HPP
#define QHILB_IDENTITIES_HPP

#include <vector>

#include <qhilb/check.hpp>
#include <qhilb/fountains.hpp>
#include <qhilb/series.hpp>

namespace qhilb::identities
{

// F(q,z) from the self-similar continued fraction
//   F(q,z) = (qz)^{p-1} / (1 - qz F(q,qz)) + (1 - (qz)^{p-1}) / (1 - qz),
// unrolled N+1 levels deep (the innermost level lies beyond q-order N).
// Window: q-order N, z in [0, N].
series::QZSeries F_via_functional_equation(int p, int N);

// The same unrolling stopped one level higher, i.e. F(q,qz) in its nested
// form, multiplied by (qz)^p.
series::QZSeries G_via_nested_fraction(int p, int N);

// Continued fraction versus the f-table, plus the functional equation
//   (qz)^{p-1} F = (qz)^{p-1} (1 + ... + (qz)^{p-1}) + G (F - 1 - ... - (qz)^{p-2})
// checked multiplicatively on the tables.
CheckOutcome check_F_functional_equation(const fountains::FountainTable &table, int N);

// g-table = (qz)^p F(q,qz) from the f-table = nested fraction, to order N.
CheckOutcome check_G_definition(const fountains::FountainTable &table, int N);
CheckOutcome check_G_definition(int p, int N);

// Exponents j with j(j+1)/2 <= N, i.e. the z-range the identity needs.
int jtp_min_z(int N);
int jtp_max_z(int N);

// sum_j z^j q^{j(j+1)/2} to q-order N.
series::QZSeries jtp_sum(int N, int z_min, int z_max);

// prod_{n=1}^{N+1} (1 + z q^n)(1 + q^{n-1}/z)(1 - q^n) to q-order N.
series::QZSeries jtp_product(int N, int z_min, int z_max);

// Throws std::invalid_argument when [z_min, z_max] misses an exponent the
// truncated identity needs.
CheckOutcome jacobi_triple_product_check(int N, int z_min, int z_max);

// qz * (JTP sum with Q = q^p, Z = z^p q) against the triangle series
// sum_l q^{w(l)} z^{lp+1}, all l with w(l) <= N.
CheckOutcome check_T_product_form(int p, int N);

// The two sums of the p = 1 quotient formula. Window: q-order N, z in [0, N].
series::QZSeries ramanujan_numerator(int N);
series::QZSeries ramanujan_denominator(int N);

// F * denominator = numerator with F from a p = 1 table.
CheckOutcome ramanujan_check(const fountains::FountainTable &table, int N);
CheckOutcome ramanujan_check(int N);

// The splitting recurrence evaluated on enumerated counts: for k, n >= p,
//   f(n,k) = sum g(m+p-1, r+p-1) f(n-m, k-r)   over 0 <= m <= n-p+1, 0 <= r <= k-p+1.
CheckOutcome check_splitting_on_counts(int p, const fountains::CountMap &all, const fountains::CountMap &primitive,
                                       int n_max);

// Coefficients of 1/(1 - q/(1 - q^2/(1 - q^3/...))) to order N: the number of
// p = 1 fountains with n coins.
std::vector<Coefficient> continued_fraction_totals(int N);

} // namespace qhilb::identities

#endif
