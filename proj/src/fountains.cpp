#include <qhilb/fountains.hpp>

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace qhilb::fountains
{

int Fountain::coin_count() const
{
    int total = 0;
    for (const auto &row : rows) {
        total += static_cast<int>(row.size());
    }
    return total;
}

namespace
{

// Positions of row r+1 that the given row r can carry.
std::vector<int> supported_positions(const std::set<int> &below, int p)
{
    std::vector<int> out;
    for (int i : below) {
        bool ok = true;
        for (int d = 1; d <= p && ok; ++d) {
            ok = below.count(i + d) != 0;
        }
        if (ok) {
            out.push_back(i);
        }
    }
    return out;
}

void extend(Fountain &c, int coins, int n_max, const std::function<void(const Fountain &)> &visit)
{
    const auto slots = supported_positions(c.rows.back(), c.p);
    const int budget = n_max - coins;
    if (slots.empty() || budget <= 0) {
        return;
    }
    const auto s = slots.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
        const int size = std::popcount(mask);
        if (size > budget) {
            continue;
        }
        std::set<int> row;
        for (std::size_t b = 0; b < s; ++b) {
            if ((mask >> b) & 1U) {
                row.insert(slots[b]);
            }
        }
        c.rows.push_back(std::move(row));
        visit(c);
        extend(c, coins + size, n_max, visit);
        c.rows.pop_back();
    }
}

} // namespace

bool is_valid_fountain(const Fountain &c)
{
    if (c.p < 1) {
        return false;
    }
    if (c.rows.empty()) {
        return true;
    }
    const auto &bottom = c.rows.front();
    int expect = 0;
    for (int i : bottom) {
        if (i != expect++) {
            return false;
        }
    }
    if (bottom.empty()) {
        // A (0,0) fountain is the empty rows list, nothing else.
        return false;
    }
    for (std::size_t r = 1; r < c.rows.size(); ++r) {
        if (c.rows[r].empty()) {
            return false;
        }
        for (int i : c.rows[r]) {
            for (int d = 0; d <= c.p; ++d) {
                if (c.rows[r - 1].count(i + d) == 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_primitive(const Fountain &c)
{
    const int k = c.bottom_width();
    if (k < c.p) {
        return false;
    }
    if (k == c.p) {
        return c.rows.size() <= 1;
    }
    if (c.rows.size() < 2) {
        return false;
    }
    const auto &next = c.rows[1];
    if (static_cast<int>(next.size()) != k - c.p) {
        return false;
    }
    int expect = 0;
    for (int i : next) {
        if (i != expect++) {
            return false;
        }
    }
    return true;
}

long max_coins(int k, int p)
{
    long total = 0;
    for (long width = k; width >= 1; width -= p) {
        total += width;
    }
    return total;
}

void for_each_fountain(int p, int n_max, const std::function<void(const Fountain &)> &visit)
{
    if (p < 1) {
        throw std::invalid_argument("p must be positive");
    }
    Fountain empty{p, {}};
    visit(empty);
    for (int k = 1; k <= n_max; ++k) {
        Fountain c{p, {}};
        std::set<int> bottom;
        for (int i = 0; i < k; ++i) {
            bottom.insert(i);
        }
        c.rows.push_back(std::move(bottom));
        visit(c);
        extend(c, k, n_max, visit);
    }
}

CountMap enumerate_fountains(int p, int n_max)
{
    CountMap counts;
    for_each_fountain(p, n_max, [&](const Fountain &c) { counts[{c.coin_count(), c.bottom_width()}] += 1; });
    return counts;
}

CountMap enumerate_primitive_fountains(int p, int n_max)
{
    CountMap counts;
    for_each_fountain(p, n_max, [&](const Fountain &c) {
        if (is_primitive(c)) {
            counts[{c.coin_count(), c.bottom_width()}] += 1;
        }
    });
    return counts;
}

std::string to_string(TableKind kind)
{
    switch (kind) {
    case TableKind::f:
        return "f";
    case TableKind::g:
        return "g";
    case TableKind::h:
        return "h";
    }
    return "?";
}

TableKind parse_table_kind(const std::string &name)
{
    if (name == "f") {
        return TableKind::f;
    }
    if (name == "g") {
        return TableKind::g;
    }
    if (name == "h") {
        return TableKind::h;
    }
    throw std::invalid_argument("unknown table '" + name + "' (expected f, g or h)");
}

FountainTable::FountainTable(int p, int n_max, int k_max) : p_(p), n_max_(n_max), k_max_(k_max)
{
    if (p < 1) {
        throw std::invalid_argument("p must be positive, got " + std::to_string(p));
    }
    if (n_max < 0 || k_max < 0) {
        throw std::invalid_argument("table bounds must be nonnegative");
    }
    f_.resize(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(k_max + 1));
}

FountainTable FountainTable::from_arrays(int p, int n_max, int k_max, std::vector<Coefficient> f,
                                         std::vector<Coefficient> g, std::vector<Coefficient> h)
{
    FountainTable t(p, n_max, k_max);
    const auto cells = t.f_.size();
    if (f.size() != cells || (!g.empty() && g.size() != cells) || (!h.empty() && h.size() != cells)) {
        throw std::invalid_argument("table array sizes do not match the bounds");
    }
    t.f_ = std::move(f);
    t.g_ = std::move(g);
    t.h_ = std::move(h);
    return t;
}

std::size_t FountainTable::index(int n, int k) const
{
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(k_max_ + 1) + static_cast<std::size_t>(k);
}

Coefficient FountainTable::read(const std::vector<Coefficient> &v, int n, int k, const char *name) const
{
    if (n < 0 || k < 0) {
        return 0;
    }
    if (n > n_max_ || k > k_max_) {
        std::ostringstream msg;
        msg << name << '(' << n << ',' << k << ") is past the table bounds (" << n_max_ << ',' << k_max_ << ')';
        throw std::out_of_range(msg.str());
    }
    if (v.empty()) {
        throw std::logic_error(std::string("table ") + name + " has not been filled");
    }
    return v[index(n, k)];
}

Coefficient FountainTable::get(TableKind kind, int n, int k) const
{
    switch (kind) {
    case TableKind::f:
        return f(n, k);
    case TableKind::g:
        return g(n, k);
    case TableKind::h:
        return h(n, k);
    }
    throw std::logic_error("bad table kind");
}

void FountainTable::set(TableKind kind, int n, int k, const Coefficient &value)
{
    if (n < 0 || k < 0 || n > n_max_ || k > k_max_) {
        throw std::out_of_range("set: index past the table bounds");
    }
    auto &v = kind == TableKind::f ? f_ : kind == TableKind::g ? g_ : h_;
    if (v.empty()) {
        throw std::logic_error("set: table " + to_string(kind) + " has not been filled");
    }
    v[index(n, k)] = value;
}

const std::vector<Coefficient> &FountainTable::raw(TableKind kind) const
{
    return kind == TableKind::f ? f_ : kind == TableKind::g ? g_ : h_;
}

std::string FountainTable::validate() const
{
    std::ostringstream err;
    for (int n = 0; n <= n_max_; ++n) {
        for (int k = 0; k <= k_max_; ++k) {
            const auto &fv = f_[index(n, k)];
            if ((k > n || n > max_coins(k, p_)) && fv != 0) {
                err << "f(" << n << ',' << k << ") = " << fv << " should vanish";
                return err.str();
            }
            if (n == k && fv != 1) {
                err << "f(" << n << ',' << k << ") = " << fv << " should be 1";
                return err.str();
            }
            if (fv < 0) {
                err << "f(" << n << ',' << k << ") = " << fv << " is negative";
                return err.str();
            }
            if (!g_.empty()) {
                const auto &gv = g_[index(n, k)];
                const Coefficient expect = (k >= p_ && n >= k) ? f(n - k, k - p_) : Coefficient(0);
                if (gv != expect) {
                    err << "g(" << n << ',' << k << ") = " << gv << " but f(" << n - k << ',' << k - p_
                        << ") = " << expect;
                    return err.str();
                }
            }
            if (!h_.empty()) {
                if (g_.empty()) {
                    return "h is filled but g is not";
                }
                const auto &hv = h_[index(n, k)];
                if (hv != fv - g_[index(n, k)]) {
                    err << "h(" << n << ',' << k << ") = " << hv << " differs from f - g";
                    return err.str();
                }
            }
        }
    }
    return {};
}

FountainTable table_f(int p, int n_max, int k_max)
{
    FountainTable t(p, n_max, k_max);
    auto &f = t.f_;
    const auto at = [&](int n, int k) -> const Coefficient & { return f[t.index(n, k)]; };
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= k_max && k <= n; ++k) {
            Coefficient &cell = f[t.index(n, k)];
            if (k < p) {
                cell = n == k ? 1 : 0;
                continue;
            }
            // m = 0 terms vanish since g(p-1, .) = 0; r = 0 terms since
            // g(., p-1) = 0. Summands need g's argument m+p-1 >= r+p-1 + (r-1)
            // and f(n-m, k-r) with n-m >= k-r.
            for (int r = 1; r <= k - p + 1; ++r) {
                for (int m = 2 * r - 1; m <= n - k + r; ++m) {
                    // g(m+p-1, r+p-1) = f(m-r, r-1)
                    const Coefficient &prim = at(m - r, r - 1);
                    if (sgn(prim) == 0) {
                        continue;
                    }
                    const Coefficient &rest = at(n - m, k - r);
                    if (sgn(rest) == 0) {
                        continue;
                    }
                    mpz_addmul(cell.get_mpz_t(), prim.get_mpz_t(), rest.get_mpz_t());
                }
            }
        }
    }
    return t;
}

FountainTable shift_g(FountainTable t)
{
    t.g_.assign(t.f_.size(), Coefficient(0));
    for (int n = 0; n <= t.n_max_; ++n) {
        for (int k = t.p_; k <= t.k_max_ && k <= n; ++k) {
            t.g_[t.index(n, k)] = t.f(n - k, k - t.p_);
        }
    }
    return t;
}

FountainTable table_h(FountainTable t)
{
    if (t.g_.empty()) {
        throw std::logic_error("table_h needs g; call shift_g first");
    }
    t.h_.resize(t.f_.size());
    for (std::size_t i = 0; i < t.f_.size(); ++i) {
        t.h_[i] = t.f_[i] - t.g_[i];
    }
    return t;
}

FountainTable build_table(int p, int n_max, int k_max)
{
    return table_h(shift_g(table_f(p, n_max, k_max)));
}

series::QZSeries series_of(const FountainTable &t, TableKind kind, int N)
{
    if (t.n_max() < N || t.k_max() < N) {
        std::ostringstream msg;
        msg << "table bounds (" << t.n_max() << ',' << t.k_max() << ") do not cover order " << N;
        throw std::invalid_argument(msg.str());
    }
    std::vector<std::pair<series::Exponent, Coefficient>> terms;
    for (int n = 0; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            auto c = t.get(kind, n, k);
            if (c != 0) {
                terms.emplace_back(series::Exponent{n, k}, std::move(c));
            }
        }
    }
    return series::QZSeries::from_terms(series::Window(N, 0, N), terms);
}

} // namespace qhilb::fountains
