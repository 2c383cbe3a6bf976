#ifndef QHILB_FOUNTAINS_HPP
#define QHILB_FOUNTAINS_HPP

#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <qhilb/coefficient.hpp>
#include <qhilb/series.hpp>

namespace qhilb::fountains
{

// An arrangement of coins in rows. Row 0 is the bottom row; a coin at
// position i of row r+1 sits on the p+1 coins i, ..., i+p of row r.
struct Fountain {
    int p = 1;
    std::vector<std::set<int>> rows;

    int bottom_width() const { return rows.empty() ? 0 : static_cast<int>(rows.front().size()); }
    int coin_count() const;

    friend bool operator==(const Fountain &, const Fountain &) = default;
};

// Bottom row is {0, ..., k-1}, every upper coin is supported, and there is no
// trailing empty row.
bool is_valid_fountain(const Fountain &c);

// Next-to-bottom row is full, i.e. holds k-p coins. Never true for k < p.
bool is_primitive(const Fountain &c);

// Coins in the full triangle over a bottom row of width k: k + (k-p) + (k-2p) + ...
long max_coins(int k, int p);

// (n, k) -> number of fountains with n coins and bottom width k.
using CountMap = std::map<std::pair<int, int>, Coefficient>;

// Calls visit on every valid fountain with at most n_max coins, by exhaustive
// row-by-row search. Independent of every recurrence below.
void for_each_fountain(int p, int n_max, const std::function<void(const Fountain &)> &visit);

CountMap enumerate_fountains(int p, int n_max);
CountMap enumerate_primitive_fountains(int p, int n_max);

enum class TableKind { f, g, h };

std::string to_string(TableKind kind);
// Throws std::invalid_argument for anything but "f", "g", "h".
TableKind parse_table_kind(const std::string &name);

// Dense count tables f(n,k), g(n,k), h(n,k) for 0 <= n <= n_max, 0 <= k <= k_max.
// Entries with negative indices read as zero; indices past the bounds throw
// std::out_of_range. A table is built in stages (table_f, shift_g, table_h);
// reading a stage that has not been filled throws std::logic_error.
class FountainTable
{
public:
    FountainTable(int p, int n_max, int k_max);

    // Unvalidated construction from raw row-major arrays ((n_max+1)*(k_max+1)
    // entries each, index n*(k_max+1)+k). Empty g or h means "not filled".
    static FountainTable from_arrays(int p, int n_max, int k_max, std::vector<Coefficient> f,
                                     std::vector<Coefficient> g, std::vector<Coefficient> h);

    int p() const noexcept { return p_; }
    int n_max() const noexcept { return n_max_; }
    int k_max() const noexcept { return k_max_; }

    bool has_g() const noexcept { return !g_.empty(); }
    bool has_h() const noexcept { return !h_.empty(); }

    Coefficient f(int n, int k) const { return read(f_, n, k, "f"); }
    Coefficient g(int n, int k) const { return read(g_, n, k, "g"); }
    Coefficient h(int n, int k) const { return read(h_, n, k, "h"); }
    Coefficient get(TableKind kind, int n, int k) const;

    // Overwrites a single entry without re-deriving dependent tables.
    void set(TableKind kind, int n, int k, const Coefficient &value);

    const std::vector<Coefficient> &raw(TableKind kind) const;

    // Empty string when every table invariant holds, otherwise a description of
    // the first violation.
    std::string validate() const;

    friend bool operator==(const FountainTable &, const FountainTable &) = default;

private:
    friend FountainTable table_f(int p, int n_max, int k_max);
    friend FountainTable shift_g(FountainTable t);
    friend FountainTable table_h(FountainTable t);

    std::size_t index(int n, int k) const;
    Coefficient read(const std::vector<Coefficient> &v, int n, int k, const char *name) const;

    int p_;
    int n_max_;
    int k_max_;
    std::vector<Coefficient> f_;
    std::vector<Coefficient> g_;
    std::vector<Coefficient> h_;
};

// f by the splitting recurrence
//   f(n,k) = sum_{m,r >= 1} g(m+p-1, r+p-1) f(n-m, k-r)   (n, k >= p)
// with g(a,b) = f(a-b, b-p), and f(n,k) = [n == k] for k < p.
FountainTable table_f(int p, int n_max, int k_max);

// g(n,k) = f(n-k, k-p) for n >= k >= p, else 0.
FountainTable shift_g(FountainTable t);

// h = f - g.
FountainTable table_h(FountainTable t);

// table_h(shift_g(table_f(p, n_max, k_max))).
FountainTable build_table(int p, int n_max, int k_max);

// Generating function of the chosen table to q-order N, z-window [0, N].
// Throws std::invalid_argument unless n_max >= N and k_max >= N.
series::QZSeries series_of(const FountainTable &t, TableKind kind, int N);

inline series::QZSeries series_F(const FountainTable &t, int N) { return series_of(t, TableKind::f, N); }
inline series::QZSeries series_G(const FountainTable &t, int N) { return series_of(t, TableKind::g, N); }
inline series::QZSeries series_H(const FountainTable &t, int N) { return series_of(t, TableKind::h, N); }

} // namespace qhilb::fountains

#endif
