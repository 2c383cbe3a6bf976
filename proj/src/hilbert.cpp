#include <qhilb/hilbert.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <qhilb/series.hpp>

namespace qhilb::hilbert
{

YoungDiagram::YoungDiagram(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (parts_[j] < 1 || (j > 0 && parts_[j] > parts_[j - 1])) {
            throw std::invalid_argument("diagram parts must be positive and weakly decreasing: " + to_string());
        }
    }
}

int YoungDiagram::size() const noexcept
{
    int total = 0;
    for (int part : parts_) {
        total += part;
    }
    return total;
}

bool YoungDiagram::contains(int i, int j) const noexcept
{
    return i >= 0 && j >= 0 && j < static_cast<int>(parts_.size()) && i < parts_[static_cast<std::size_t>(j)];
}

std::string YoungDiagram::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        os << (j ? "," : "") << parts_[j];
    }
    os << ')';
    return os.str();
}

int zero_weight(const YoungDiagram &lambda, int p)
{
    int count = 0;
    const auto &parts = lambda.parts();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        for (int i = 0; i < parts[j]; ++i) {
            if (is_zero_block(i, static_cast<int>(j), p)) {
                ++count;
            }
        }
    }
    return count;
}

std::vector<Block> generator_blocks(const YoungDiagram &lambda)
{
    // Every corner lies in the box one larger than the diagram in each direction.
    const int width = lambda.empty() ? 0 : lambda.parts().front();
    const int height = static_cast<int>(lambda.parts().size());
    std::vector<Block> out;
    for (int j = 0; j <= height; ++j) {
        for (int i = 0; i <= width; ++i) {
            if (lambda.contains(i, j)) {
                continue;
            }
            const bool left = i == 0 || lambda.contains(i - 1, j);
            const bool below = j == 0 || lambda.contains(i, j - 1);
            if (left && below) {
                out.push_back({i, j});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_zero_generated(const YoungDiagram &lambda, int p)
{
    const auto gens = generator_blocks(lambda);
    return std::all_of(gens.begin(), gens.end(), [p](const Block &b) { return is_zero_block(b.i, b.j, p); });
}

namespace
{

int row_zero_weight(int length, int j, int p)
{
    int count = 0;
    for (int i = 0; i < length; ++i) {
        count += is_zero_block(i, j, p) ? 1 : 0;
    }
    return count;
}

struct P0Search {
    int p;
    int target;
    int bound;
    std::vector<int> parts;
    std::vector<YoungDiagram> found;

    // parts holds rows 0..j-1; weight is their 0-weight.
    void extend(int weight)
    {
        const int j = static_cast<int>(parts.size());
        // Closing the diagram here puts a generator at (0, j).
        if (weight == target && is_zero_block(0, j, p)) {
            YoungDiagram lambda(parts);
            if (is_zero_generated(lambda, p)) {
                found.push_back(std::move(lambda));
            }
        }
        if (j >= bound) {
            return;
        }
        const int widest = j == 0 ? bound : parts.back();
        for (int len = widest; len >= 1; --len) {
            // A row shorter than the one below it (or the first row) has its
            // end block as a generator.
            const bool corner = j == 0 || len < parts.back();
            if (corner && !is_zero_block(len, j, p)) {
                continue;
            }
            const int w = weight + row_zero_weight(len, j, p);
            if (w > target) {
                continue;
            }
            parts.push_back(len);
            extend(w);
            parts.pop_back();
        }
    }
};

} // namespace

std::vector<YoungDiagram> enumerate_P0(int p, int m)
{
    if (p < 1 || m < 0) {
        throw std::invalid_argument("enumerate_P0 needs p >= 1 and m >= 0");
    }
    P0Search search{p, m, p * m, {}, {}};
    search.extend(0);
    std::sort(search.found.begin(), search.found.end());
    return std::move(search.found);
}

long triangle_weight(int p, int l)
{
    return static_cast<long>(p) * l * (l + 1) / 2 + l + 1;
}

TriangleTerm TriangleTerm::at(int p, int l)
{
    return {l, triangle_weight(p, l), static_cast<long>(l) * p + 1};
}

std::vector<TriangleTerm> triangle_terms(int p, int m_max)
{
    std::vector<TriangleTerm> out;
    for (int l = -1; l <= m_max; ++l) {
        out.push_back(TriangleTerm::at(p, l));
    }
    return out;
}

Augmentation diagram_to_fountain(const YoungDiagram &lambda, int p)
{
    if (!is_zero_generated(lambda, p)) {
        throw std::invalid_argument("diagram " + lambda.to_string() + " is not 0-generated for p=" + std::to_string(p));
    }
    int l = 0;
    if (lambda.empty()) {
        l = p == 1 ? -1 : 0;
    } else {
        int deepest = 0;
        const auto &parts = lambda.parts();
        for (std::size_t j = 0; j < parts.size(); ++j) {
            for (int i = 0; i < parts[j]; ++i) {
                if (is_zero_block(i, static_cast<int>(j), p)) {
                    deepest = std::max(deepest, i + static_cast<int>(j));
                }
            }
        }
        l = deepest / p + 1;
    }
    fountains::Fountain c{p, {}};
    for (int r = 0; r <= l; ++r) {
        const int depth = (l - r) * p;
        std::set<int> row;
        for (int j = 0; j <= depth; ++j) {
            if (!lambda.contains(depth - j, j)) {
                row.insert(j);
            }
        }
        c.rows.push_back(std::move(row));
    }
    while (!c.rows.empty() && c.rows.back().empty()) {
        c.rows.pop_back();
    }
    return {std::move(c), l};
}

int required_n_max(int p, int m_max, int extra_l)
{
    return static_cast<int>(triangle_weight(p, m_max + extra_l));
}

int required_k_max(int p, int m_max, int extra_l)
{
    return p * (m_max + extra_l) + 1;
}

ZetaSeries zeta_from_triangles(const fountains::FountainTable &table, std::span<const TriangleTerm> terms,
                               int m_max)
{
    ZetaSeries z{table.p(), std::vector<Coefficient>(static_cast<std::size_t>(m_max + 1))};
    for (int m = 0; m <= m_max; ++m) {
        auto &acc = z.coefficients[static_cast<std::size_t>(m)];
        for (const auto &t : terms) {
            const long k = t.z_exp;
            const long n = t.q_exp - m;
            if (k < 0 || n < k) {
                continue;
            }
            acc += table.h(static_cast<int>(n), static_cast<int>(k));
        }
    }
    return z;
}

ZetaSeries zeta_theorem(const fountains::FountainTable &table, int m_max)
{
    const int p = table.p();
    if (table.n_max() < required_n_max(p, m_max) || table.k_max() < required_k_max(p, m_max)) {
        std::ostringstream msg;
        msg << "table bounds (" << table.n_max() << ',' << table.k_max() << ") are too small for order " << m_max
            << "; need (" << required_n_max(p, m_max) << ',' << required_k_max(p, m_max) << ')';
        throw std::invalid_argument(msg.str());
    }
    const auto terms = triangle_terms(p, m_max);
    return zeta_from_triangles(table, terms, m_max);
}

ZetaSeries zeta_theorem(int p, int m_max)
{
    return zeta_theorem(fountains::build_table(p, required_n_max(p, m_max), required_k_max(p, m_max)), m_max);
}

ZetaSeries zeta_oracle(int p, int m_max)
{
    ZetaSeries z{p, {}};
    for (int m = 0; m <= m_max; ++m) {
        z.coefficients.emplace_back(static_cast<unsigned long>(enumerate_P0(p, m).size()));
    }
    return z;
}

namespace
{

std::vector<Coefficient> q_coefficients(const series::QZSeries &s)
{
    std::vector<Coefficient> out;
    for (int m = 0; m <= s.window().q_order(); ++m) {
        out.push_back(s.coeff(m, 0));
    }
    return out;
}

series::QZSeries euler_product(int m_max)
{
    const series::Window w(m_max, 0, 0);
    auto prod = series::QZSeries::one(w);
    for (int i = 1; i <= m_max; ++i) {
        prod = prod * series::geom_inverse(series::QZSeries::monomial(1, i, 0, w));
    }
    return prod;
}

} // namespace

ZetaSeries zeta_closed_p1(int m_max)
{
    return {1, q_coefficients(euler_product(m_max))};
}

std::vector<Coefficient> cube_root_theta(int m_max)
{
    std::vector<Coefficient> theta(static_cast<std::size_t>(m_max + 1));
    theta[0] = 1;
    for (long m = 1; m * m <= m_max; ++m) {
        // xi^m + xi^{-m} = 2 cos(2 pi m / 3)
        theta[static_cast<std::size_t>(m * m)] = m % 3 == 0 ? 2 : -1;
    }
    return theta;
}

ZetaSeries zeta_closed_p2(int m_max)
{
    const series::Window w(m_max, 0, 0);
    const auto theta_coeffs = cube_root_theta(m_max);
    std::vector<std::pair<series::Exponent, Coefficient>> terms;
    for (int m = 0; m <= m_max; ++m) {
        terms.emplace_back(series::Exponent{m, 0}, theta_coeffs[static_cast<std::size_t>(m)]);
    }
    const auto theta = series::QZSeries::from_terms(w, terms);
    const auto e = euler_product(m_max);
    return {2, q_coefficients(e * e * theta)};
}

CheckOutcome check_bijection_refinement(const fountains::FountainTable &table, int m_max, int extra_l)
{
    const int p = table.p();
    if (table.n_max() < required_n_max(p, m_max, extra_l) || table.k_max() < required_k_max(p, m_max, extra_l)) {
        throw std::invalid_argument("table bounds too small for the refinement scan");
    }
    std::size_t diagrams = 0;
    for (int m = 0; m <= m_max; ++m) {
        std::map<int, long> per_l;
        for (const auto &lambda : enumerate_P0(p, m)) {
            ++diagrams;
            const auto aug = diagram_to_fountain(lambda, p);
            const auto &c = aug.fountain;
            std::ostringstream bad;
            if (!fountains::is_valid_fountain(c) || fountains::is_primitive(c)) {
                bad << "augmentation of " << lambda.to_string() << " is not a valid non-primitive fountain";
            } else if (c.coin_count() + m != triangle_weight(p, aug.l)) {
                bad << "augmentation of " << lambda.to_string() << " has " << c.coin_count()
                    << " coins, triangle weight " << triangle_weight(p, aug.l);
            } else if (c.bottom_width() != std::max(0, aug.l * p + 1)) {
                bad << "augmentation of " << lambda.to_string() << " has bottom width " << c.bottom_width();
            }
            if (!bad.str().empty()) {
                return CheckOutcome::fail(bad.str());
            }
            ++per_l[aug.l];
        }
        for (const auto &[l, count] : per_l) {
            if (l < -1 || l > m + extra_l) {
                std::ostringstream os;
                os << "m=" << m << ": a diagram has triangle index l=" << l << " outside the scanned range";
                return CheckOutcome::fail(os.str());
            }
        }
        for (int l = -1; l <= m + extra_l; ++l) {
            const auto t = TriangleTerm::at(p, l);
            const long n = t.q_exp - m;
            const Coefficient expect =
                (t.z_exp < 0 || n < t.z_exp) ? Coefficient(0) : table.h(static_cast<int>(n), static_cast<int>(t.z_exp));
            const auto it = per_l.find(l);
            const Coefficient got = it == per_l.end() ? 0L : it->second;
            if (l > m && expect != 0) {
                std::ostringstream os;
                os << "cutoff violated at m=" << m << ", l=" << l << ": h(" << n << ',' << t.z_exp << ")=" << expect;
                return CheckOutcome::fail(os.str());
            }
            if (got != expect) {
                std::ostringstream os;
                os << "first difference at m=" << m << ", l=" << l << ": diagrams=" << got << ", h(" << n << ','
                   << t.z_exp << ")=" << expect;
                return CheckOutcome::fail(os.str());
            }
        }
    }
    std::ostringstream os;
    os << diagrams << " diagrams refine correctly for m <= " << m_max << ", l <= m+" << extra_l;
    return CheckOutcome::pass(os.str());
}

} // namespace qhilb::hilbert
