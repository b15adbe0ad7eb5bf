#include "gausrat.hpp"

#include <stdexcept>

namespace qsu2 {

GausRat GausRat::operator/(const GausRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    mpq_class n = o.norm();
    GausRat t = *this * o.conj();
    return GausRat(t.re / n, t.im / n);
}

std::string GausRat::str() const {
    // Pure real, pure imaginary, or "a+b*i" composite.
    if (im == 0) return re.get_str();
    std::string istr;
    if (im == 1) istr = "i";
    else if (im == -1) istr = "-i";
    else istr = im.get_str() + "*i";
    if (re == 0) return istr;
    std::string out = re.get_str();
    if (istr[0] == '-') out += " - " + istr.substr(1);
    else out += " + " + istr;
    return out;
}

GausRat parse_rational(const std::string& text) {
    mpq_class v(text);
    v.canonicalize();
    return GausRat(v);
}

} // namespace qsu2
