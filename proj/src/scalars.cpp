#include "ncg/scalars.hpp"

#include <ostream>
#include <stdexcept>

namespace ncg {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.isZero()) throw std::domain_error("GaussianRational: division by zero");
    Rational den = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / den;
    Rational i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::size_t GaussianRational::bulk() const {
    auto limbs = [](const Rational& q) {
        return mpz_size(q.get_num().get_mpz_t()) + mpz_size(q.get_den().get_mpz_t());
    };
    return limbs(re) + limbs(im);
}

std::string GaussianRational::str() const {
    if (im == 0) return re.get_str();
    std::string s = re == 0 ? std::string() : re.get_str();
    std::string ims = im.get_str();
    if (!s.empty() && ims[0] != '-') s += "+";
    return s + ims + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

}  // namespace ncg
