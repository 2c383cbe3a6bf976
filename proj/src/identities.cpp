#include <qhilb/identities.hpp>

#include <sstream>
#include <stdexcept>

#include <qhilb/hilbert.hpp>

namespace qhilb::identities
{

using series::Exponent;
using series::QZSeries;
using series::Window;

namespace
{

Window fountain_window(int N)
{
    return Window(N, 0, N);
}

// u^e for the monomial u = q^a z^b.
QZSeries monomial_power(int a, int b, int e, Window w)
{
    return QZSeries::monomial(1, a * e, b * e, w);
}

// Level j of the unrolled fraction represents F(q, q^j z), with u = q^{j+1} z:
//   Y_j = u^{p-1} / (1 - u Y_{j+1}) + (1 - u^{p-1}) / (1 - u).
QZSeries unrolled_level(int p, int N, int stop_level)
{
    const Window w = fountain_window(N);
    const QZSeries one = QZSeries::one(w);
    QZSeries inner(w);
    for (int j = N + stop_level; j >= stop_level; --j) {
        const QZSeries u = QZSeries::monomial(1, j + 1, 1, w);
        const QZSeries top = monomial_power(j + 1, 1, p - 1, w);
        inner = top * series::geom_inverse(u * inner) + (one - top) * series::geom_inverse(u);
    }
    return inner;
}

} // namespace

QZSeries F_via_functional_equation(int p, int N)
{
    if (p < 1 || N < 0) {
        throw std::invalid_argument("F_via_functional_equation needs p >= 1, N >= 0");
    }
    return unrolled_level(p, N, 0);
}

QZSeries G_via_nested_fraction(int p, int N)
{
    if (p < 1 || N < 0) {
        throw std::invalid_argument("G_via_nested_fraction needs p >= 1, N >= 0");
    }
    return monomial_power(1, 1, p, fountain_window(N)) * unrolled_level(p, N, 1);
}

CheckOutcome check_F_functional_equation(const fountains::FountainTable &table, int N)
{
    const int p = table.p();
    const auto F = fountains::series_F(table, N);
    if (auto c = compare_series(F_via_functional_equation(p, N), F, "continued fraction", "f-table"); !c) {
        return c;
    }
    const Window w = fountain_window(N);
    const auto G = fountains::series_G(table, N);
    QZSeries head(w); // 1 + qz + ... + (qz)^{p-2}
    for (int i = 0; i <= p - 2; ++i) {
        head = head + monomial_power(1, 1, i, w);
    }
    const auto lead = monomial_power(1, 1, p - 1, w);
    const auto lhs = lead * F;
    const auto rhs = lead * (head + lead) + G * (F - head);
    if (auto c = compare_series(lhs, rhs, "(qz)^{p-1} F", "functional equation"); !c) {
        return c;
    }
    std::ostringstream os;
    os << "continued fraction and functional equation hold to order " << N;
    return CheckOutcome::pass(os.str());
}

CheckOutcome check_G_definition(const fountains::FountainTable &table, int N)
{
    const int p = table.p();
    const Window w = fountain_window(N);
    const auto from_g = fountains::series_G(table, N);
    const auto shifted = monomial_power(1, 1, p, w) * series::subst_z_scale(fountains::series_F(table, N), 1);
    if (auto c = compare_series(from_g, shifted, "g-table", "(qz)^p F(q,qz)"); !c) {
        return c;
    }
    if (auto c = compare_series(from_g, G_via_nested_fraction(p, N), "g-table", "nested fraction"); !c) {
        return c;
    }
    std::ostringstream os;
    os << "shift relation and nested form of G hold to order " << N;
    return CheckOutcome::pass(os.str());
}

CheckOutcome check_G_definition(int p, int N)
{
    return check_G_definition(fountains::build_table(p, N, N), N);
}

int jtp_min_z(int N)
{
    int j = 0;
    while ((j - 1) * j / 2 <= N) { // exponent of z^{j-1}
        --j;
    }
    return j;
}

int jtp_max_z(int N)
{
    int j = 0;
    while ((j + 1) * (j + 2) / 2 <= N) {
        ++j;
    }
    return j;
}

QZSeries jtp_sum(int N, int z_min, int z_max)
{
    const Window w(N, z_min, z_max);
    std::vector<std::pair<Exponent, Coefficient>> terms;
    for (int j = jtp_min_z(N); j <= jtp_max_z(N); ++j) {
        terms.emplace_back(Exponent{j * (j + 1) / 2, j}, Coefficient(1));
    }
    return QZSeries::from_terms(w, terms);
}

QZSeries jtp_product(int N, int z_min, int z_max)
{
    const Window w(N, z_min, z_max);
    const auto one = QZSeries::one(w);
    auto prod = one;
    for (int n = 1; n <= N + 1; ++n) {
        prod = prod * (one + QZSeries::monomial(1, n, 1, w));
        prod = prod * (one + QZSeries::monomial(1, n - 1, -1, w));
        prod = prod * (one - QZSeries::monomial(1, n, 0, w));
    }
    return prod;
}

CheckOutcome jacobi_triple_product_check(int N, int z_min, int z_max)
{
    if (N < 0) {
        throw std::invalid_argument("jacobi_triple_product_check needs N >= 0");
    }
    if (z_min > jtp_min_z(N) || z_max < jtp_max_z(N)) {
        std::ostringstream msg;
        msg << "z-window [" << z_min << ", " << z_max << "] too narrow for order " << N << "; need ["
            << jtp_min_z(N) << ", " << jtp_max_z(N) << "]";
        throw std::invalid_argument(msg.str());
    }
    return compare_series(jtp_product(N, z_min, z_max), jtp_sum(N, z_min, z_max), "product", "sum");
}

CheckOutcome check_T_product_form(int p, int N)
{
    if (p < 1 || N < 0) {
        throw std::invalid_argument("check_T_product_form needs p >= 1, N >= 0");
    }
    // Triangle indices with w(l) <= N; w is convex with w(-1) = 0.
    int l_lo = -1;
    while (hilbert::triangle_weight(p, l_lo - 1) <= N) {
        --l_lo;
    }
    int l_hi = -1;
    while (hilbert::triangle_weight(p, l_hi + 1) <= N) {
        ++l_hi;
    }
    const Window tw(N, p * l_lo + 1, p * l_hi + 1);

    std::vector<std::pair<Exponent, Coefficient>> tri;
    for (int l = l_lo; l <= l_hi; ++l) {
        const auto t = hilbert::TriangleTerm::at(p, l);
        tri.emplace_back(Exponent{static_cast<int>(t.q_exp), static_cast<int>(t.z_exp)}, Coefficient(1));
    }
    const auto triangle_sum = QZSeries::from_terms(tw, tri);

    // The generic identity in variables (Q, Z), deep enough to hold every j in range.
    int Q_order = 0;
    for (int j = l_lo; j <= l_hi; ++j) {
        Q_order = std::max(Q_order, j * (j + 1) / 2);
    }
    const int z_lo = std::min(l_lo, jtp_min_z(Q_order));
    const int z_hi = std::max(l_hi, jtp_max_z(Q_order));
    if (auto c = jacobi_triple_product_check(Q_order, z_lo, z_hi); !c) {
        return c;
    }
    const auto generic = jtp_sum(Q_order, z_lo, z_hi);

    // Q = q^p, Z = z^p q, then multiply by qz: (a, j) -> (p a + j + 1, p j + 1).
    std::vector<std::pair<Exponent, Coefficient>> mapped;
    for (const auto &[e, c] : generic.terms()) {
        mapped.emplace_back(Exponent{p * e.n + e.k + 1, p * e.k + 1}, c);
    }
    const auto substituted = QZSeries::from_terms(tw, mapped);
    return compare_series(substituted, triangle_sum, "qz * JTP(q^p, z^p q)", "triangle sum");
}

QZSeries ramanujan_numerator(int N)
{
    const Window w = fountain_window(N);
    QZSeries sum(w);
    auto pochhammer_inv = QZSeries::one(w); // 1/((1-q)...(1-q^n))
    for (int n = 0; n * n <= N; ++n) {
        if (n > 0) {
            pochhammer_inv = pochhammer_inv * series::geom_inverse(QZSeries::monomial(1, n, 0, w));
        }
        const Coefficient sign = n % 2 == 0 ? 1 : -1;
        sum = sum + QZSeries::monomial(sign, n * n + n, n, w) * pochhammer_inv;
    }
    return sum;
}

QZSeries ramanujan_denominator(int N)
{
    const Window w = fountain_window(N);
    QZSeries sum(w);
    auto pochhammer_inv = QZSeries::one(w);
    for (int n = 0; n * n <= N; ++n) {
        if (n > 0) {
            pochhammer_inv = pochhammer_inv * series::geom_inverse(QZSeries::monomial(1, n, 0, w));
        }
        const Coefficient sign = n % 2 == 0 ? 1 : -1;
        sum = sum + QZSeries::monomial(sign, n * n, n, w) * pochhammer_inv;
    }
    return sum;
}

CheckOutcome ramanujan_check(const fountains::FountainTable &table, int N)
{
    if (table.p() != 1) {
        throw std::invalid_argument("the quotient formula is for p = 1 tables");
    }
    const auto F = fountains::series_F(table, N);
    return compare_series(F * ramanujan_denominator(N), ramanujan_numerator(N), "F * denominator", "numerator");
}

CheckOutcome ramanujan_check(int N)
{
    return ramanujan_check(fountains::build_table(1, N, N), N);
}

CheckOutcome check_splitting_on_counts(int p, const fountains::CountMap &all, const fountains::CountMap &primitive,
                                       int n_max)
{
    const auto lookup = [](const fountains::CountMap &m, int n, int k) {
        const auto it = m.find({n, k});
        return it == m.end() ? Coefficient(0) : it->second;
    };
    std::size_t cells = 0;
    for (int n = p; n <= n_max; ++n) {
        for (int k = p; k <= n; ++k) {
            Coefficient sum = 0;
            for (int m = 0; m <= n - p + 1; ++m) {
                for (int r = 0; r <= k - p + 1; ++r) {
                    sum += lookup(primitive, m + p - 1, r + p - 1) * lookup(all, n - m, k - r);
                }
            }
            const auto expect = lookup(all, n, k);
            if (sum != expect) {
                std::ostringstream os;
                os << "splitting sum at (n,k)=(" << n << ',' << k << ") gives " << sum << ", enumeration has "
                   << expect;
                return CheckOutcome::fail(os.str());
            }
            ++cells;
        }
    }
    std::ostringstream os;
    os << "splitting recurrence holds on " << cells << " enumerated cells";
    return CheckOutcome::pass(os.str());
}

std::vector<Coefficient> continued_fraction_totals(int N)
{
    const Window w(N, 0, 0);
    auto inner = QZSeries(w);
    for (int j = N + 1; j >= 1; --j) {
        inner = series::geom_inverse(QZSeries::monomial(1, j, 0, w) * inner);
    }
    std::vector<Coefficient> out;
    for (int n = 0; n <= N; ++n) {
        out.push_back(inner.coeff(n, 0));
    }
    return out;
}

} // namespace qhilb::identities
