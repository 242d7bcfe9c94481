#include "qmu/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qmu {

QInterval QInterval::operator*(const QInterval& o) const {
    mpq_class a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

std::string QInterval::to_string() const {
    std::ostringstream out;
    out << "[" << lo << ", " << hi << "]";
    return out.str();
}

QInterval interval_sqrt(const mpq_class& v, int precision_bits) {
    if (v < 0) throw std::domain_error("interval_sqrt: negative radicand");
    if (v == 0) return QInterval(mpq_class(0));
    // sqrt(a/b) = sqrt(a*b)/b. With s = floor(sqrt(a*b*4^k)) we get the
    // enclosure [s, s+1] / (b*2^k), of width 1/(b*2^k).
    mpz_class a = v.get_num(), b = v.get_den();
    mpz_class n = a * b;
    int k = std::max(0, precision_bits);
    mpz_class scaled = n << (2 * k);
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    mpz_class denom = b << k;
    mpq_class lo(s, denom), hi(s + 1, denom);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace qmu
