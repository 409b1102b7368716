#include "framecert/rational.hpp"

#include <cctype>

namespace framecert {

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw DivisionByZeroError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRational::BigRational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw DivisionByZeroError("reciprocal of zero");
    return BigRational(v_.get_den(), v_.get_num());
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

BigRational BigRational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);  // GMP rejects a leading '+'
    if (s.empty()) throw ParseError("empty rational literal");

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        if (s.find('/') != std::string::npos)
            throw ParseError("rational literal mixes '.' and '/': '" + std::string(text) + "'");
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("malformed decimal literal: '" + std::string(text) + "'");
        try {
            mpz_class num(digits, 10);
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
            return BigRational(num, den);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed decimal literal: '" + std::string(text) + "'");
        }
    }

    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(mpz_class(s, 10));
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        return BigRational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational literal: '" + std::string(text) + "'");
    }
}

std::string BigRational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    BigRational r = re_ * o.re_ - im_ * o.im_;
    BigRational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    if (o.is_zero()) throw DivisionByZeroError("Gaussian-rational division by zero");
    BigRational n = o.norm();
    GaussRational num = *this * o.conj();
    re_ = num.re() / n;
    im_ = num.im() / n;
    return *this;
}

namespace {

// Splits "a+bi"-style text into real/imaginary rational literals. The split
// point is a '+'/'-' that is not a leading sign and not right after '/'.
size_t find_component_split(std::string_view s) {
    for (size_t k = 1; k < s.size(); ++k) {
        if (s[k] != '+' && s[k] != '-') continue;
        char prev = s[k - 1];
        if (prev == '/' || prev == '+' || prev == '-' || prev == '.') continue;
        return k;
    }
    return std::string_view::npos;
}

BigRational parse_imaginary_magnitude(std::string_view part) {
    // `part` ends with "i" or "*i"; an empty magnitude means 1.
    std::string_view mag = part.substr(0, part.size() - 1);
    if (!mag.empty() && mag.back() == '*') mag.remove_suffix(1);
    if (mag.empty() || mag == "+") return BigRational(1L);
    if (mag == "-") return BigRational(-1L);
    return BigRational::parse(mag);
}

}  // namespace

GaussRational GaussRational::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty Gaussian-rational literal");

    std::string_view sv(s);
    if (sv.back() == 'i') {
        size_t split = find_component_split(sv);
        if (split == std::string_view::npos)
            return GaussRational(BigRational(0L), parse_imaginary_magnitude(sv));
        BigRational re = BigRational::parse(sv.substr(0, split));
        BigRational im = parse_imaginary_magnitude(sv.substr(split));
        return GaussRational(std::move(re), std::move(im));
    }
    return GaussRational(BigRational::parse(sv));
}

std::string GaussRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string im_part;
    if (im_.is_one())
        im_part = "i";
    else if (im_ == BigRational(-1L))
        im_part = "-i";
    else
        im_part = im_.to_string() + "*i";
    if (re_.is_zero()) return im_part;
    if (im_.sign() > 0) return re_.to_string() + "+" + im_part;
    return re_.to_string() + im_part;
}

bool lexicographic_less(const GaussRational& a, const GaussRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

}  // namespace framecert
