#include "thetaq/rational.hpp"

#include <cctype>

namespace thetaq {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::size_t pos = 0;
    bool neg = false;
    if (text[0] == '+' || text[0] == '-') {
        neg = text[0] == '-';
        pos = 1;
    }
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) throw std::invalid_argument("malformed rational: " + std::string(text));
        for (std::size_t k = from; k < to; ++k)
            if (!std::isdigit(static_cast<unsigned char>(text[k])))
                throw std::invalid_argument("malformed rational: " + std::string(text));
        return mpz_class(std::string(text.substr(from, to - from)));
    };
    std::size_t slash = text.find('/', pos);
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(digits(pos, text.size()));
    } else {
        mpz_class den = digits(slash + 1, text.size());
        if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        q = Rational(digits(pos, slash), den);
        q.canonicalize();
    }
    return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational reduce_mod2(const Rational& q) {
    // floor(q / 2) * 2 subtracted
    mpz_class num = q.get_num();
    mpz_class den2 = q.get_den() * 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), den2.get_mpz_t());
    Rational r = q - Rational(fl * 2);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::size_t hash_value(const Rational& q) {
    // Small values dominate; fold the low limbs of numerator and denominator.
    std::size_t h = mpz_get_si(q.get_num_mpz_t());
    h ^= static_cast<std::size_t>(mpz_get_si(q.get_den_mpz_t())) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::size_t>(mpz_size(q.get_num_mpz_t())) << 7;
    return h;
}

GaussianRational GaussianRational::inverse() const {
    Rational n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return {Rational(re_ / n), Rational(-im_ / n)};
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianRational::to_string() const {
    auto imag = [](const Rational& q) -> std::string {
        if (q == 1) return "i";
        if (q == -1) return "-i";
        return q.get_str() + "*i";
    };
    if (sgn(im_) == 0) return re_.get_str();
    if (sgn(re_) == 0) return imag(im_);
    std::string s = re_.get_str();
    if (sgn(im_) > 0) return s + " + " + imag(im_);
    return s + " - " + imag(Rational(-im_));
}

std::size_t GaussianRational::hash() const { return hash_value(re_) * 31 + hash_value(im_); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.to_string(); }

}  // namespace thetaq
