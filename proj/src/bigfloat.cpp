#include "framecert/bigfloat.hpp"

#include <algorithm>

namespace framecert {

std::string BigFloat::to_string(size_t digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    if (digits == 0) digits = static_cast<size_t>(mpfr_get_prec(v_) * 0.30103) + 2;
    mpfr_exp_t exp = 0;
    char* s = mpfr_get_str(nullptr, &exp, 10, digits, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string d = neg ? mant.substr(1) : mant;
    size_t last = d.find_last_not_of('0');
    d = d.substr(0, std::max<size_t>(last + 1, 1));
    std::string out = neg ? "-" : "";
    out += "0.";
    out += d;
    out += "e";
    out += std::to_string(static_cast<long>(exp));
    return out;
}

}  // namespace framecert
