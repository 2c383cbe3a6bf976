#ifndef QHILB_COEFFICIENT_HPP
#define QHILB_COEFFICIENT_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qhilb
{

// Exact signed integer used for every count and series coefficient.
using Coefficient = mpz_class;

std::string to_decimal(const Coefficient &c);

// Throws std::invalid_argument on anything but an optional '-' followed by digits.
Coefficient parse_coefficient(std::string_view text);

} // namespace qhilb

#endif
