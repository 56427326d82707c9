#include "bsassign/rational.hpp"

#include <stdexcept>

namespace bsassign {

Rational rational_from_string(const std::string& text) {
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("invalid rational: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<std::int64_t> to_int64(const Integer& z) {
    if (!z.fits_slong_p())
        return std::nullopt;
    long v = z.get_si();
    return static_cast<std::int64_t>(v);
}

}  // namespace bsassign
