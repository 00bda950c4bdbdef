#include "bidiff/qelem.hpp"

namespace bidiff {

QElem::QElem(Rat rational_part, Rat radical_part, Rat discriminant)
    : a_(std::move(rational_part)), b_(std::move(radical_part)), d_(std::move(discriminant)) {
    normalize();
}

void QElem::normalize() {
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    if (auto root = rat_sqrt_exact(d_)) {
        a_ += b_ * *root;
        b_ = 0;
        d_ = 0;
    }
}

Rat QElem::merged_discriminant(const QElem& x, const QElem& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_)
        throw ContextError("QElem: mismatched discriminants " + rat_to_string(x.d_) + " vs " +
                           rat_to_string(y.d_));
    return x.d_;
}

int QElem::sign() const {
    if (b_ == 0) return sgn(a_);
    if (d_ < 0) throw UnsupportedEmbeddingError("QElem: no real sign for D < 0");
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sa == 0) return sb;
    if (sb == 0) return sa;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(D), i.e. a^2 vs b^2*D. They can never
    // be equal here, since equality would force sqrt(D) rational and the
    // constructor would have folded the radical away.
    return a_ * a_ > b_ * b_ * d_ ? sa : sb;
}

QElem QElem::operator-() const {
    QElem out;
    out.a_ = -a_;
    out.b_ = -b_;
    out.d_ = d_;
    return out;
}

QElem operator+(const QElem& x, const QElem& y) {
    Rat d = QElem::merged_discriminant(x, y);
    return QElem(x.a_ + y.a_, x.b_ + y.b_, d);
}

QElem operator-(const QElem& x, const QElem& y) {
    Rat d = QElem::merged_discriminant(x, y);
    return QElem(x.a_ - y.a_, x.b_ - y.b_, d);
}

QElem operator*(const QElem& x, const QElem& y) {
    Rat d = QElem::merged_discriminant(x, y);
    return QElem(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
}

QElem operator/(const QElem& x, const QElem& y) { return x * y.inv(); }

bool operator==(const QElem& x, const QElem& y) {
    if (x.a_ != y.a_) return false;
    if (x.b_ == 0 && y.b_ == 0) return true;
    // b1*sqrt(d1) == b2*sqrt(d2) iff signs agree and b^2*d agree.
    return sgn(x.b_) == sgn(y.b_) && x.b_ * x.b_ * x.d_ == y.b_ * y.b_ * y.d_;
}

QElem QElem::conj() const {
    QElem out;
    out.a_ = a_;
    out.b_ = -b_;
    out.d_ = d_;
    return out;
}

Rat QElem::norm() const { return a_ * a_ - b_ * b_ * d_; }

QElem QElem::inv() const {
    if (is_zero()) throw DivisionError("QElem: inverse of zero");
    if (b_ == 0) {
        Rat r(a_.get_den(), a_.get_num());
        r.canonicalize();
        return QElem(r);
    }
    // 1/(a + b*sqrt(D)) = (a - b*sqrt(D)) / (a^2 - b^2 D); the norm is
    // nonzero since sqrt(D) is irrational whenever b != 0.
    Rat n = norm();
    return QElem(a_ / n, -b_ / n, d_);
}

QElem QElem::pow(long e) const {
    QElem base = *this;
    if (e < 0) {
        base = base.inv();
        e = -e;
    }
    QElem acc(Rat(1));
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

RatInterval QElem::approx(unsigned bits) const {
    if (bits < 8) throw ContractError("QElem::approx: bits must be >= 8");
    if (b_ == 0) return {a_, a_};
    if (d_ < 0) throw UnsupportedEmbeddingError("QElem::approx: D < 0 has no real embedding");

    // Enclose sqrt(D) = sqrt(p*q)/q for D = p/q, then scale by b and shift
    // by a. Working precision k is raised until b's scaling leaves a width
    // of at most 2^-(bits+2); the final snap to the 2^-(bits+2) dyadic grid
    // adds at most twice that, for a total within 2^-bits.
    const Int& p = d_.get_num();
    const Int& q = d_.get_den();
    Int pq = p * q;
    Rat abs_b = abs(b_);
    unsigned k = bits + 4;
    Rat lo, hi;
    for (;;) {
        Int scaled = pq << (2 * k);
        Int s = isqrt(scaled);
        Rat sq_lo(s, q * (Int(1) << k));
        Rat sq_hi(s + 1, q * (Int(1) << k));
        sq_lo.canonicalize();
        sq_hi.canonicalize();
        Rat width = abs_b * (sq_hi - sq_lo);
        if (width * rat_pow(Rat(2), bits + 2) <= 1) {
            if (sgn(b_) > 0) {
                lo = a_ + b_ * sq_lo;
                hi = a_ + b_ * sq_hi;
            } else {
                lo = a_ + b_ * sq_hi;
                hi = a_ + b_ * sq_lo;
            }
            break;
        }
        k *= 2;
    }
    return {dyadic_floor(lo, bits + 2), dyadic_ceil(hi, bits + 2)};
}

std::string QElem::to_string() const {
    if (b_ == 0) return rat_to_string(a_);
    std::string rad;
    Rat abs_b = abs(b_);
    if (abs_b == 1)
        rad = "sqrt(" + rat_to_string(d_) + ")";
    else
        rad = rat_to_string(abs_b) + "*sqrt(" + rat_to_string(d_) + ")";
    if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + rad;
    return rat_to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + rad;
}

int cmp_abs(const QElem& x, const QElem& y) {
    // |x| vs |y| decided by the exact sign of x^2 - y^2.
    QElem diff = x * x - y * y;
    return diff.sign();
}

RatInterval nonzero_interval(const QElem& x, unsigned start_bits, unsigned ceiling_bits) {
    if (x.is_zero()) throw ContractError("nonzero_interval: value is zero");
    for (unsigned bits = start_bits; bits <= ceiling_bits; bits *= 2) {
        RatInterval iv = x.approx(bits);
        if (sgn(iv.lo) > 0 || sgn(iv.hi) < 0) return iv;
    }
    throw PrecisionExhaustedError("nonzero_interval: precision ceiling reached");
}

}  // namespace bidiff
