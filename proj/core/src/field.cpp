#include "hopfforge/field.hpp"

namespace hopfforge {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return {Kind::Prime, p};
}

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DivisionByZero();
    return fp_pow(a, p - 2, p);
}

Scalar Scalar::one(FieldSpec fs) {
    Scalar s(fs);
    if (fs.is_rational())
        s.q_ = 1;
    else
        s.r_ = 1 % fs.p;
    return s;
}

Scalar Scalar::from_int(FieldSpec fs, long long n) {
    Scalar s(fs);
    if (fs.is_rational()) {
        s.q_ = static_cast<long>(n);
    } else {
        long long m = n % static_cast<long long>(fs.p);
        if (m < 0) m += static_cast<long long>(fs.p);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_mpq(FieldSpec fs, const mpq_class& q) {
    Scalar s(fs);
    if (fs.is_rational()) {
        s.q_ = q;
        s.q_.canonicalize();
    } else {
        mpz_class num = q.get_num(), den = q.get_den(), pz(static_cast<unsigned long>(fs.p));
        mpz_class nr = num % pz, dr = den % pz;
        if (nr < 0) nr += pz;
        if (dr < 0) dr += pz;
        std::uint64_t n = nr.get_ui(), d = dr.get_ui();
        if (d == 0) throw DivisionByZero();
        s.r_ = fp_mul(n, fp_inv(d, fs.p), fs.p);
    }
    return s;
}

Scalar Scalar::from_residue(FieldSpec fs, std::uint64_t r) {
    if (fs.is_rational()) return from_mpq(fs, mpq_class(static_cast<unsigned long>(r)));
    Scalar s(fs);
    s.r_ = r % fs.p;
    return s;
}

Scalar Scalar::parse(FieldSpec fs, const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar literal: " + text);
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return from_mpq(fs, q);
}

bool Scalar::is_zero() const { return fs_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return fs_.is_rational() ? q_ == 1 : r_ == 1 % fs_.p; }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(fs_);
    if (fs_.is_rational())
        s.q_ = q_ + o.q_;
    else
        s.r_ = fp_add(r_, o.r_, fs_.p);
    return s;
}
Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s(fs_);
    if (fs_.is_rational())
        s.q_ = q_ - o.q_;
    else
        s.r_ = fp_sub(r_, o.r_, fs_.p);
    return s;
}
Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(fs_);
    if (fs_.is_rational())
        s.q_ = q_ * o.q_;
    else
        s.r_ = fp_mul(r_, o.r_, fs_.p);
    return s;
}
Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) throw DivisionByZero();
    Scalar s(fs_);
    if (fs_.is_rational())
        s.q_ = q_ / o.q_;
    else
        s.r_ = fp_mul(r_, fp_inv(o.r_, fs_.p), fs_.p);
    return s;
}
Scalar Scalar::operator-() const {
    Scalar s(fs_);
    if (fs_.is_rational())
        s.q_ = -q_;
    else
        s.r_ = r_ == 0 ? 0 : fs_.p - r_;
    return s;
}
Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s(fs_);
    if (fs_.is_rational())
        s.q_ = 1 / q_;
    else
        s.r_ = fp_inv(r_, fs_.p);
    return s;
}
Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar acc = one(fs_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (fs_ != o.fs_) return false;
    return fs_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (!fs_.is_rational()) return std::to_string(r_);
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace hopfforge
