#include <qhilb/check.hpp>

#include <sstream>

namespace qhilb
{

CheckOutcome compare_sequences(std::span<const Coefficient> lhs, std::span<const Coefficient> rhs,
                               const std::string &lhs_name, const std::string &rhs_name)
{
    const auto common = std::min(lhs.size(), rhs.size());
    for (std::size_t m = 0; m < common; ++m) {
        if (lhs[m] != rhs[m]) {
            std::ostringstream os;
            os << "first difference at m=" << m << ": " << lhs_name << "=" << lhs[m] << ", " << rhs_name << "="
               << rhs[m];
            return CheckOutcome::fail(os.str());
        }
    }
    if (lhs.size() != rhs.size()) {
        std::ostringstream os;
        os << "length mismatch: " << lhs_name << " has " << lhs.size() << " terms, " << rhs_name << " has "
           << rhs.size();
        return CheckOutcome::fail(os.str());
    }
    std::ostringstream os;
    os << lhs.size() << " coefficients agree";
    return CheckOutcome::pass(os.str());
}

CheckOutcome compare_series(const series::QZSeries &lhs, const series::QZSeries &rhs, const std::string &lhs_name,
                            const std::string &rhs_name)
{
    const auto w = series::intersect(lhs.window(), rhs.window());
    const auto a = lhs.restrict_to(w);
    const auto b = rhs.restrict_to(w);
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() || ib != b.terms().end()) {
        series::Exponent e{};
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            e = ia->first;
        } else {
            e = ib->first;
        }
        const Coefficient ca = a.coeff(e.n, e.k);
        const Coefficient cb = b.coeff(e.n, e.k);
        if (ca != cb) {
            std::ostringstream os;
            os << "first difference at q^" << e.n << " z^" << e.k << ": " << lhs_name << "=" << ca << ", "
               << rhs_name << "=" << cb;
            return CheckOutcome::fail(os.str());
        }
        if (ia != a.terms().end() && ia->first == e) {
            ++ia;
        }
        if (ib != b.terms().end() && ib->first == e) {
            ++ib;
        }
    }
    std::ostringstream os;
    os << a.size() << " terms agree to q-order " << w.q_order();
    return CheckOutcome::pass(os.str());
}

CheckOutcome compare_counts(const fountains::FountainTable &table, fountains::TableKind kind,
                            const fountains::CountMap &counts, int n_max)
{
    std::size_t cells = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n && k <= table.k_max(); ++k) {
            const auto it = counts.find({n, k});
            const Coefficient expect = it == counts.end() ? Coefficient(0) : it->second;
            const Coefficient got = table.get(kind, n, k);
            if (got != expect) {
                std::ostringstream os;
                os << "first difference at (n,k)=(" << n << ',' << k << "): " << to_string(kind)
                   << "-table=" << got << ", enumeration=" << expect;
                return CheckOutcome::fail(os.str());
            }
            ++cells;
        }
    }
    for (const auto &[nk, c] : counts) {
        if (nk.first <= n_max && nk.second > table.k_max()) {
            std::ostringstream os;
            os << "enumeration has (n,k)=(" << nk.first << ',' << nk.second << ") beyond the table";
            return CheckOutcome::fail(os.str());
        }
    }
    std::ostringstream os;
    os << cells << " cells agree up to n=" << n_max;
    return CheckOutcome::pass(os.str());
}

} // namespace qhilb
