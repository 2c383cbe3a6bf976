#include <qhilb/series.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qhilb::series
{

Window::Window(int q_order, int z_min, int z_max) : q_order_(q_order), z_min_(z_min), z_max_(z_max)
{
    if (q_order < 0) {
        throw std::invalid_argument("negative q-order " + std::to_string(q_order));
    }
    if (z_min > z_max) {
        throw std::invalid_argument("empty z-window [" + std::to_string(z_min) + ", " + std::to_string(z_max) + "]");
    }
}

Window intersect(const Window &a, const Window &b)
{
    return Window(std::min(a.q_order(), b.q_order()), std::max(a.z_min(), b.z_min()),
                  std::min(a.z_max(), b.z_max()));
}

QZSeries::QZSeries(Window w) : window_(w) {}

QZSeries QZSeries::monomial(const Coefficient &c, int n, int k, Window w)
{
    QZSeries s(w);
    s.accumulate(n, k, c);
    return s;
}

void QZSeries::accumulate(int n, int k, const Coefficient &c)
{
    if (c == 0 || !window_.contains(n, k)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(Exponent{n, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

Coefficient QZSeries::coeff(int n, int k) const
{
    if (!window_.contains(n, k)) {
        std::ostringstream msg;
        msg << "coefficient of q^" << n << " z^" << k << " is outside the window (q <= " << window_.q_order()
            << ", z in [" << window_.z_min() << ", " << window_.z_max() << "])";
        throw std::out_of_range(msg.str());
    }
    auto it = terms_.find(Exponent{n, k});
    return it == terms_.end() ? Coefficient(0) : it->second;
}

QZSeries QZSeries::restrict_to(Window w) const
{
    if (w.q_order() > window_.q_order() || w.z_min() < window_.z_min() || w.z_max() > window_.z_max()) {
        throw std::invalid_argument("restriction window is not contained in the series window");
    }
    return from_terms(w, terms_);
}

QZSeries QZSeries::operator-() const
{
    QZSeries r(window_);
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace(e, -c);
    }
    return r;
}

QZSeries operator+(const QZSeries &a, const QZSeries &b)
{
    QZSeries r = QZSeries::from_terms(intersect(a.window_, b.window_), a.terms_);
    for (const auto &[e, c] : b.terms_) {
        r.accumulate(e.n, e.k, c);
    }
    return r;
}

QZSeries operator-(const QZSeries &a, const QZSeries &b)
{
    return a + (-b);
}

QZSeries operator*(const Coefficient &c, const QZSeries &s)
{
    QZSeries r(s.window_);
    if (c != 0) {
        for (const auto &[e, v] : s.terms_) {
            r.terms_.emplace(e, c * v);
        }
    }
    return r;
}

QZSeries operator*(const QZSeries &a, const QZSeries &b)
{
    const Window w = intersect(a.window_, b.window_);
    const int width = w.z_max() - w.z_min() + 1;
    // Dense accumulator; terms are sorted by q-exponent first, so the inner
    // loop can stop at the first overflow.
    std::vector<Coefficient> acc(static_cast<std::size_t>(w.q_order() + 1) * static_cast<std::size_t>(width));
    std::vector<bool> touched(acc.size(), false);
    for (const auto &[ea, ca] : a.terms_) {
        if (ea.n > w.q_order()) {
            break;
        }
        for (const auto &[eb, cb] : b.terms_) {
            const int n = ea.n + eb.n;
            if (n > w.q_order()) {
                break;
            }
            const int k = ea.k + eb.k;
            if (k < w.z_min() || k > w.z_max()) {
                continue;
            }
            const auto idx = static_cast<std::size_t>(n) * static_cast<std::size_t>(width)
                             + static_cast<std::size_t>(k - w.z_min());
            mpz_addmul(acc[idx].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            touched[idx] = true;
        }
    }
    QZSeries r(w);
    for (std::size_t idx = 0; idx < acc.size(); ++idx) {
        if (touched[idx] && acc[idx] != 0) {
            const int n = static_cast<int>(idx / static_cast<std::size_t>(width));
            const int k = static_cast<int>(idx % static_cast<std::size_t>(width)) + w.z_min();
            r.terms_.emplace_hint(r.terms_.end(), Exponent{n, k}, std::move(acc[idx]));
        }
    }
    return r;
}

bool operator==(const QZSeries &a, const QZSeries &b)
{
    return a.window_ == b.window_ && a.terms_ == b.terms_;
}

std::string QZSeries::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Coefficient mag = negative ? Coefficient(-c) : c;
        const bool bare = e.n == 0 && e.k == 0;
        if (mag != 1 || bare) {
            os << mag;
        }
        if (e.n != 0) {
            os << (mag != 1 ? "*" : "") << "q";
            if (e.n != 1) {
                os << '^' << e.n;
            }
        }
        if (e.k != 0) {
            os << ((mag != 1 || e.n != 0) ? "*" : "") << "z";
            if (e.k != 1) {
                os << '^' << e.k;
            }
        }
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const QZSeries &s)
{
    return os << s.to_string();
}

QZSeries subst_z_scale(const QZSeries &s, int a)
{
    if (a < 1) {
        throw std::invalid_argument("subst_z_scale needs a >= 1, got " + std::to_string(a));
    }
    std::vector<std::pair<Exponent, Coefficient>> moved;
    moved.reserve(s.size());
    for (const auto &[e, c] : s.terms()) {
        if (e.k < 0) {
            throw std::invalid_argument("subst_z_scale on a series with negative z-exponent " + std::to_string(e.k));
        }
        const long n = static_cast<long>(e.n) + static_cast<long>(a) * e.k;
        if (n <= s.window().q_order()) {
            moved.emplace_back(Exponent{static_cast<int>(n), e.k}, c);
        }
    }
    return QZSeries::from_terms(s.window(), moved);
}

QZSeries geom_inverse(const QZSeries &s)
{
    for (const auto &[e, c] : s.terms()) {
        if (e.n < 1) {
            throw std::invalid_argument("geom_inverse needs every term to carry q-exponent >= 1");
        }
    }
    const Window w = s.window();
    // Powers s^j with j <= q_order can wander outside the z-window before
    // coming back, so work in a window wide enough to hold all of them.
    long k_lo = std::min(0, w.z_min());
    long k_hi = std::max(0, w.z_max());
    for (const auto &[e, c] : s.terms()) {
        k_lo = std::min(k_lo, static_cast<long>(e.k) * w.q_order());
        k_hi = std::max(k_hi, static_cast<long>(e.k) * w.q_order());
    }
    const Window work(w.q_order(), static_cast<int>(k_lo), static_cast<int>(k_hi));
    const QZSeries one = QZSeries::one(work);
    // sum_{j < 2^t} s^j = prod_{i < t} (1 + s^(2^i)); s^j vanishes once j > q_order.
    QZSeries result = one;
    QZSeries power = QZSeries::from_terms(work, s.terms());
    for (long span = 1; span <= w.q_order() && !power.is_zero(); span *= 2) {
        result = result * (one + power);
        power = power * power;
    }
    return result.restrict_to(w);
}

} // namespace qhilb::series
