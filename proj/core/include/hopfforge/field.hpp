#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopfforge {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};
struct FieldMismatch : std::runtime_error {
    FieldMismatch() : std::runtime_error("scalars belong to different fields") {}
};

/// Ground field: the rationals, or Z/p for a prime p.
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint64_t p = 0;

    static FieldSpec rational() { return {Kind::Rational, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_rational() const { return kind == Kind::Rational; }
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

bool is_prime_u64(std::uint64_t n);

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);

/// Exact scalar over a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator (mpq canonical form); prime-field values are residues
/// in [0, p).
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(FieldSpec fs) : fs_(fs) {}

    static Scalar zero(FieldSpec fs) { return Scalar(fs); }
    static Scalar one(FieldSpec fs);
    static Scalar from_int(FieldSpec fs, long long n);
    static Scalar from_mpq(FieldSpec fs, const mpq_class& q);
    static Scalar from_residue(FieldSpec fs, std::uint64_t r);

    /// Parse "n", "-n" or "n/d" (rational), or a decimal residue (prime field).
    static Scalar parse(FieldSpec fs, const std::string& text);

    const FieldSpec& field() const { return fs_; }
    bool is_zero() const;
    bool is_one() const;

    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "n" or "n/d" for rationals, decimal residue for prime fields.
    std::string str() const;

  private:
    void check_same(const Scalar& o) const {
        if (fs_ != o.fs_) throw FieldMismatch();
    }

    FieldSpec fs_{};
    mpq_class q_{0};
    std::uint64_t r_ = 0;
};

}  // namespace hopfforge
