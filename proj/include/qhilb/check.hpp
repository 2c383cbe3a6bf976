#ifndef QHILB_CHECK_HPP
#define QHILB_CHECK_HPP

#include <span>
#include <string>
#include <utility>

#include <qhilb/coefficient.hpp>
#include <qhilb/fountains.hpp>
#include <qhilb/series.hpp>

namespace qhilb
{

// Result of an exact comparison. detail names the first difference on failure.
struct CheckOutcome {
    bool passed = true;
    std::string detail;

    explicit operator bool() const noexcept { return passed; }

    static CheckOutcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
    static CheckOutcome fail(std::string detail) { return {false, std::move(detail)}; }
};

// Coefficientwise comparison; both sequences must have equal length.
CheckOutcome compare_sequences(std::span<const Coefficient> lhs, std::span<const Coefficient> rhs,
                               const std::string &lhs_name, const std::string &rhs_name);

// Compares terms on the intersection of the two windows.
CheckOutcome compare_series(const series::QZSeries &lhs, const series::QZSeries &rhs, const std::string &lhs_name,
                            const std::string &rhs_name);

// Compares a table against enumerated counts over 0 <= k <= n <= n_max.
CheckOutcome compare_counts(const fountains::FountainTable &table, fountains::TableKind kind,
                            const fountains::CountMap &counts, int n_max);

} // namespace qhilb

#endif
