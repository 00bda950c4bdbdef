#include "bidiff/rat.hpp"

#include <cctype>

namespace bidiff {

Rat rat_from_string(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal", 0);
    auto check_int = [&](const std::string& s, std::size_t off) {
        if (s.empty()) throw ParseError("missing digits in rational literal", off);
        std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (k == s.size()) throw ParseError("missing digits in rational literal", off);
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw ParseError("bad digit in rational literal", off + k);
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_int(text, 0);
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num, 0);
    check_int(den, slash + 1);
    Int d(den);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    // num/den is canonical, so sqrt(num)/sqrt(den) already is too.
    return Rat(isqrt(num), isqrt(den));
}

Rat rat_pow(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    if (r == 0 && e < 0) throw DivisionError("0 raised to a negative power");
    Rat base = e < 0 ? Rat(r.get_den(), r.get_num()) : r;
    if (e < 0) base.canonicalize();
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), n);
    // Powers of a canonical fraction stay canonical.
    return out;
}

Rat dyadic_floor(const Rat& r, unsigned k) {
    Int scaled_num = r.get_num() << k;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    Rat out(q, Int(1) << k);
    out.canonicalize();
    return out;
}

Rat dyadic_ceil(const Rat& r, unsigned k) {
    Int scaled_num = r.get_num() << k;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), r.get_den().get_mpz_t());
    Rat out(q, Int(1) << k);
    out.canonicalize();
    return out;
}

std::string rat_to_string(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

}  // namespace bidiff
