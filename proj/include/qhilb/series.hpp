#ifndef QHILB_SERIES_HPP
#define QHILB_SERIES_HPP

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include <qhilb/coefficient.hpp>

namespace qhilb::series
{

// Retained exponent ranges of a truncated series: q-exponents in [0, q_order],
// z-exponents in [z_min, z_max].
class Window
{
public:
    // Throws std::invalid_argument if q_order < 0 or z_min > z_max.
    Window(int q_order, int z_min, int z_max);

    int q_order() const noexcept { return q_order_; }
    int z_min() const noexcept { return z_min_; }
    int z_max() const noexcept { return z_max_; }

    bool contains(int n, int k) const noexcept
    {
        return n >= 0 && n <= q_order_ && k >= z_min_ && k <= z_max_;
    }

    friend bool operator==(const Window &, const Window &) = default;

private:
    int q_order_;
    int z_min_;
    int z_max_;
};

// Window of the result of a binary operation. Throws std::invalid_argument
// when the z-ranges do not overlap.
Window intersect(const Window &a, const Window &b);

struct Exponent {
    int n; // q-exponent
    int k; // z-exponent

    friend auto operator<=>(const Exponent &, const Exponent &) = default;
};

// Truncated bivariate series sum c(n,k) q^n z^k with exponents confined to a
// Window. Zero coefficients are never stored. Values are immutable once built;
// all arithmetic returns new series.
class QZSeries
{
public:
    using term_map = std::map<Exponent, Coefficient>;

    // The zero series.
    explicit QZSeries(Window w);

    // Terms outside the window and zero coefficients are dropped; duplicate
    // exponents are summed.
    template <typename Range>
    static QZSeries from_terms(Window w, const Range &terms)
    {
        QZSeries s(w);
        for (const auto &[e, c] : terms) {
            s.accumulate(e.n, e.k, c);
        }
        return s;
    }

    static QZSeries monomial(const Coefficient &c, int n, int k, Window w);
    static QZSeries one(Window w) { return monomial(1, 0, 0, w); }

    const Window &window() const noexcept { return window_; }
    const term_map &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    // Stored coefficient, or zero. Throws std::out_of_range when (n,k) lies
    // outside the window, since such a coefficient is unknown rather than zero.
    Coefficient coeff(int n, int k) const;

    // Same series viewed in a narrower window. Throws std::invalid_argument if
    // w is not contained in the current window.
    QZSeries restrict_to(Window w) const;

    QZSeries operator-() const;

    friend QZSeries operator+(const QZSeries &a, const QZSeries &b);
    friend QZSeries operator-(const QZSeries &a, const QZSeries &b);
    friend QZSeries operator*(const QZSeries &a, const QZSeries &b);
    friend QZSeries operator*(const Coefficient &c, const QZSeries &s);

    // Equal windows and equal terms.
    friend bool operator==(const QZSeries &a, const QZSeries &b);

    std::string to_string() const;

private:
    void accumulate(int n, int k, const Coefficient &c);

    Window window_;
    term_map terms_;
};

std::ostream &operator<<(std::ostream &os, const QZSeries &s);

// Substitution z -> q^a z: the term (n,k) moves to (n + a*k, k). Requires a >= 1
// and no stored term with negative z-exponent.
QZSeries subst_z_scale(const QZSeries &s, int a);

// (1 - s)^{-1} to the window of s. Requires every term of s to have
// q-exponent >= 1.
QZSeries geom_inverse(const QZSeries &s);

} // namespace qhilb::series

#endif
