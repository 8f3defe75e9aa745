#include "splitgen/field.hpp"

#include <cctype>

namespace splitgen {

namespace {

constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31);  // keeps a*b inside 64 bits

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on signed 64-bit; p < 2^31 so everything fits
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw Error("division by zero");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mpz(const mpz_class& v, std::uint64_t p) {
    mpz_class r = v % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw Error("modulus must be an odd prime >= 3");
    if (p >= kMaxModulus) throw Error("modulus too large");
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::tag() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(modulus);
}

FieldSpec FieldSpec::from_tag(std::string_view tag) {
    if (tag == "q" || tag == "Q") return rationals();
    if (tag.rfind("fp:", 0) == 0) {
        std::string num(tag.substr(3));
        if (!valid_integer_token(num) || num[0] == '-')
            throw Error("bad field tag: " + std::string(tag));
        return prime_field(std::stoull(num));
    }
    throw Error("bad field tag: " + std::string(tag));
}

FieldElement FieldElement::from_integer(long v, const FieldSpec& f) {
    return from_mpz(mpz_class(v), f);
}

FieldElement FieldElement::from_mpz(const mpz_class& v, const FieldSpec& f) {
    FieldElement e;
    if (f.is_rationals()) {
        e.rat_ = mpq_class(v);
        e.p_ = 0;
    } else {
        e.p_ = f.modulus;
        e.res_ = reduce_mpz(v, f.modulus);
    }
    return e;
}

FieldElement FieldElement::from_rational(mpq_class v) {
    v.canonicalize();
    FieldElement e;
    e.rat_ = std::move(v);
    e.p_ = 0;
    return e;
}

FieldElement FieldElement::from_residue(std::uint64_t v, std::uint64_t p) {
    FieldElement e;
    e.p_ = p;
    e.res_ = v % p;
    return e;
}

FieldElement FieldElement::parse(std::string_view text, const FieldSpec& f) {
    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!valid_integer_token(den)) throw Error("bad scalar: " + std::string(text));
    }
    if (!valid_integer_token(num)) throw Error("bad scalar: " + std::string(text));

    mpz_class a(std::string(num), 10);
    if (den.empty()) return from_mpz(a, f);
    mpz_class b(std::string(den), 10);
    if (b == 0) throw Error("bad scalar: zero denominator");
    if (f.is_rationals()) {
        mpq_class q(a, b);
        q.canonicalize();
        return from_rational(std::move(q));
    }
    FieldElement e = from_mpz(a, f);
    return e / from_mpz(b, f);
}

bool FieldElement::is_zero() const {
    return p_ == 0 ? rat_ == 0 : res_ == 0;
}

bool FieldElement::is_one() const {
    return p_ == 0 ? rat_ == 1 : res_ == 1;
}

FieldElement FieldElement::operator-() const {
    FieldElement e(*this);
    if (p_ == 0)
        e.rat_ = -rat_;
    else
        e.res_ = res_ == 0 ? 0 : p_ - res_;
    return e;
}

FieldElement FieldElement::inverse() const {
    FieldElement e(*this);
    if (p_ == 0) {
        if (rat_ == 0) throw Error("division by zero");
        e.rat_ = 1 / rat_;
    } else {
        if (res_ == 0) throw Error("division by zero");
        e.res_ = mod_inverse(res_, p_);
    }
    return e;
}

FieldElement FieldElement::pow(unsigned long exp) const {
    FieldElement acc = one(field());
    FieldElement base(*this);
    while (exp > 0) {
        if (exp & 1) acc *= base;
        base *= base;
        exp >>= 1;
    }
    return acc;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_field(o);
    if (p_ == 0) {
        rat_ += o.rat_;
    } else {
        res_ += o.res_;
        if (res_ >= p_) res_ -= p_;
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_field(o);
    if (p_ == 0) {
        rat_ -= o.rat_;
    } else {
        res_ = res_ >= o.res_ ? res_ - o.res_ : res_ + p_ - o.res_;
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_field(o);
    if (p_ == 0)
        rat_ *= o.rat_;
    else
        res_ = (res_ * o.res_) % p_;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same_field(o);
    return *this *= o.inverse();
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElement::str() const {
    return p_ == 0 ? rat_.get_str() : std::to_string(res_);
}

}  // namespace splitgen
