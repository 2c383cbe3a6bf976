#include <qhilb/coefficient.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qhilb
{

std::string to_decimal(const Coefficient &c)
{
    return c.get_str(10);
}

Coefficient parse_coefficient(std::string_view text)
{
    auto digits = text;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (digits.empty()
        || !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
        throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    }
    return Coefficient(std::string(text), 10);
}

} // namespace qhilb
