#ifndef SPLITGEN_FIELD_HPP
#define SPLITGEN_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitgen {

/// Library-wide error type. Messages are one-line diagnostics.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FieldKind { Rationals, PrimeField };

/// Tag describing the scalar domain: the rationals, or a prime field F_p.
/// modulus is 0 for the rationals and an odd prime >= 3 otherwise.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime_field(std::uint64_t p);

    bool is_rationals() const { return kind == FieldKind::Rationals; }
    bool operator==(const FieldSpec&) const = default;

    /// Short tag used in CLI flags, CSV rows and diagnostics: "q" or "fp:<p>".
    std::string tag() const;
    static FieldSpec from_tag(std::string_view tag);
};

/// Exact scalar in Q or F_p. Rationals are kept in lowest terms with a
/// positive denominator (GMP canonical form); residues are kept in [0, p).
/// Elements of distinct fields never mix; doing so raises "field mismatch".
class FieldElement {
public:
    FieldElement() : res_(0), p_(0) {}

    static FieldElement zero(const FieldSpec& f) { return from_integer(0, f); }
    static FieldElement one(const FieldSpec& f) { return from_integer(1, f); }
    static FieldElement from_integer(long v, const FieldSpec& f);
    static FieldElement from_mpz(const mpz_class& v, const FieldSpec& f);
    static FieldElement from_rational(mpq_class v);
    static FieldElement from_residue(std::uint64_t v, std::uint64_t p);

    /// Parses "a" or "a/b" with decimal integers. Over F_p the value is
    /// reduced (and divided) mod p.
    static FieldElement parse(std::string_view text, const FieldSpec& f);

    FieldSpec field() const {
        return p_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldKind::PrimeField, p_};
    }

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement inverse() const;  // error on zero
    FieldElement pow(unsigned long e) const;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Decimal rendering: "a" or "a/b" over Q, the residue over F_p.
    std::string str() const;

    /// Rational payload; only meaningful over Q.
    const mpq_class& rational() const { return rat_; }
    /// Residue payload; only meaningful over F_p.
    std::uint64_t residue() const { return res_; }

private:
    void check_same_field(const FieldElement& o) const {
        if (p_ != o.p_) throw Error("field mismatch");
    }

    mpq_class rat_;       // used when p_ == 0
    std::uint64_t res_;   // used when p_ > 0
    std::uint64_t p_;     // 0 marks the rationals
};

}  // namespace splitgen

#endif
