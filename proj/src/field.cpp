// SPDX-License-Identifier: Apache-2.0
#include "ihopf/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ihopf {

// ---------------------------------------------------------------------------
// prime-field helpers (p < 2^63, arithmetic via 128-bit intermediates)

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) {
    if (a == 0) throw DomainError("division by zero in prime field");
    return powmod(a, p - 2, p);
}

}  // namespace

bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (p % q == 0) return p == q;
    }
    u64 d = p - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // deterministic Miller-Rabin witness set for the full 64-bit range
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// integer polynomial helpers for Phi_n

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<mpz_class> poly_divexact(const std::vector<mpz_class>& num,
                                     const std::vector<mpz_class>& den) {
    std::vector<mpz_class> rem = num;
    const std::size_t dd = den.size() - 1;
    if (rem.size() < den.size()) throw DomainError("polynomial division underflow");
    std::vector<mpz_class> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
        // den is monic in every use here (cyclotomic polynomials are monic)
        mpz_class c = rem[i];
        if (c == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw DomainError("inexact polynomial division");
    return quot;
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

}  // namespace

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; (unsigned long)p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<mpz_class> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic order must be positive");
    if (n == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
    // x^n - 1 divided by Phi_d for all proper divisors d of n
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (unsigned d : divisors_of(n)) {
        if (d == n) continue;
        num = poly_divexact(num, cyclotomic_polynomial(d));
    }
    return num;
}

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec FieldSpec::rationals() {
    FieldSpec f;
    f.kind_ = FieldKind::rational;
    return f;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >> 63) throw DomainError("prime field modulus must be below 2^63");
    if (!is_prime_u64(p)) throw DomainError("prime field modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind_ = FieldKind::prime;
    f.p_ = p;
    return f;
}

FieldSpec FieldSpec::cyclotomic(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic order must be positive");
    auto table = std::make_shared<CyclotomicTable>();
    table->order = n;
    table->modulus = cyclotomic_polynomial(n);
    table->degree = static_cast<unsigned>(table->modulus.size() - 1);
    const unsigned d = table->degree;
    // rows for zeta^(d+r), r = 0 .. d-2, reduced mod Phi_n
    if (d >= 1) {
        std::vector<mpq_class> row(d);
        for (unsigned i = 0; i < d; ++i) row[i] = mpq_class(-table->modulus[i]);
        for (unsigned r = 0; r + 1 < d; ++r) {
            table->power_rows.push_back(row);
            // next = row * zeta, reduced
            std::vector<mpq_class> next(d, mpq_class(0));
            mpq_class top = row[d - 1];
            for (unsigned i = d - 1; i >= 1; --i) next[i] = row[i - 1];
            if (top != 0) {
                for (unsigned i = 0; i < d; ++i) next[i] += top * mpq_class(-table->modulus[i]);
            }
            row = std::move(next);
        }
    }
    FieldSpec f;
    f.kind_ = FieldKind::cyclotomic;
    f.cyc_ = std::move(table);
    return f;
}

const CyclotomicTable& FieldSpec::table() const {
    if (!cyc_) throw DomainError("not a cyclotomic field");
    return *cyc_;
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case FieldKind::rational: return true;
        case FieldKind::prime: return p_ == o.p_;
        case FieldKind::cyclotomic: return cyc_->order == o.cyc_->order;
    }
    return false;
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
        case FieldKind::rational: return "rational";
        case FieldKind::prime: return "prime " + std::to_string(p_);
        case FieldKind::cyclotomic: return "cyclotomic " + std::to_string(cyc_->order);
    }
    return {};
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

void check_same_field(const Scalar& a, const Scalar& b) {
    if (a.field() != b.field())
        throw FieldMismatchError("scalars from different fields: " + a.field().to_string() +
                                 " vs " + b.field().to_string());
}

// Multiply two reduced coefficient vectors and reduce mod Phi_n.
std::vector<mpq_class> cyc_mul(const CyclotomicTable& t, const std::vector<mpq_class>& a,
                               const std::vector<mpq_class>& b) {
    const unsigned d = t.degree;
    std::vector<mpq_class> prod(2 * d - 1, mpq_class(0));
    for (unsigned i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    std::vector<mpq_class> out(prod.begin(), prod.begin() + d);
    for (unsigned r = 0; r + 1 < d; ++r) {
        const mpq_class& c = prod[d + r];
        if (c == 0) continue;
        const auto& row = t.power_rows[r];
        for (unsigned i = 0; i < d; ++i)
            if (row[i] != 0) out[i] += c * row[i];
    }
    return out;
}

int poly_deg(const std::vector<mpq_class>& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] != 0) return static_cast<int>(i);
    return -1;
}

// Inverse of a nonzero reduced element via extended Euclid against Phi_n
// (irreducible over Q, so the gcd is a nonzero constant).
std::vector<mpq_class> cyc_inverse(const CyclotomicTable& t, const std::vector<mpq_class>& a) {
    const unsigned d = t.degree;
    std::vector<mpq_class> r0(t.modulus.size());
    for (std::size_t i = 0; i < t.modulus.size(); ++i) r0[i] = mpq_class(t.modulus[i]);
    std::vector<mpq_class> r1(a.begin(), a.end());
    r1.resize(t.modulus.size(), mpq_class(0));
    std::vector<mpq_class> s0(t.modulus.size(), mpq_class(0));
    std::vector<mpq_class> s1(t.modulus.size(), mpq_class(0));
    s1[0] = 1;
    while (true) {
        int d1 = poly_deg(r1);
        if (d1 < 0) throw DomainError("division by zero in cyclotomic field");
        if (d1 == 0) break;
        // r0 = q*r1 + r, with deg r < deg r1
        int d0 = poly_deg(r0);
        while (d0 >= d1) {
            mpq_class c = r0[d0] / r1[d1];
            std::size_t shift = static_cast<std::size_t>(d0 - d1);
            for (int i = 0; i <= d1; ++i) r0[i + shift] -= c * r1[i];
            for (std::size_t i = 0; i + shift < s0.size(); ++i) s0[i + shift] -= c * s1[i];
            d0 = poly_deg(r0);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    // r1 is a nonzero constant c; inverse = s1 / c
    mpq_class c = r1[0];
    std::vector<mpq_class> out(d, mpq_class(0));
    for (unsigned i = 0; i < d && i < s1.size(); ++i) out[i] = s1[i] / c;
    return out;
}

}  // namespace

Scalar Scalar::zero(const FieldSpec& f) {
    switch (f.kind()) {
        case FieldKind::rational: return Scalar(f, mpq_class(0));
        case FieldKind::prime: return Scalar(f, std::uint64_t{0});
        case FieldKind::cyclotomic:
            return Scalar(f, std::vector<mpq_class>(f.degree(), mpq_class(0)));
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long v) {
    switch (f.kind()) {
        case FieldKind::rational: return Scalar(f, mpq_class(v));
        case FieldKind::prime: {
            long m = static_cast<long>(v % static_cast<long>(f.prime()));
            if (m < 0) m += static_cast<long>(f.prime());
            return Scalar(f, static_cast<std::uint64_t>(m));
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> c(f.degree(), mpq_class(0));
            c[0] = v;
            return Scalar(f, std::move(c));
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& v) {
    switch (f.kind()) {
        case FieldKind::rational: {
            mpq_class q = v;
            q.canonicalize();
            return Scalar(f, std::move(q));
        }
        case FieldKind::prime: {
            mpz_class num = v.get_num() % f.prime();
            if (num < 0) num += f.prime();
            mpz_class den = v.get_den() % f.prime();
            if (den == 0) throw DomainError("rational with denominator divisible by p");
            u64 r = mulmod(num.get_ui(), invmod(den.get_ui(), f.prime()), f.prime());
            return Scalar(f, r);
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> c(f.degree(), mpq_class(0));
            c[0] = v;
            c[0].canonicalize();
            return Scalar(f, std::move(c));
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::from_coeffs(const FieldSpec& f, std::vector<mpq_class> coeffs) {
    if (!f.is_cyclotomic()) throw DomainError("from_coeffs requires a cyclotomic field");
    if (coeffs.size() != f.degree())
        throw DomainError("coefficient vector length must equal phi(n)");
    for (auto& c : coeffs) c.canonicalize();
    return Scalar(f, std::move(coeffs));
}

bool Scalar::is_zero() const {
    switch (spec_.kind()) {
        case FieldKind::rational: return rat_repr() == 0;
        case FieldKind::prime: return prime_repr() == 0;
        case FieldKind::cyclotomic: {
            for (const auto& c : cyc_repr())
                if (c != 0) return false;
            return true;
        }
    }
    return false;
}

bool Scalar::is_one() const {
    switch (spec_.kind()) {
        case FieldKind::rational: return rat_repr() == 1;
        case FieldKind::prime: return prime_repr() == 1 % spec_.prime();
        case FieldKind::cyclotomic: {
            const auto& c = cyc_repr();
            if (c[0] != 1) return false;
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] != 0) return false;
            return true;
        }
    }
    return false;
}

bool Scalar::is_rational_constant() const {
    if (spec_.kind() != FieldKind::cyclotomic) return true;
    const auto& c = cyc_repr();
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

mpq_class Scalar::rational_value() const {
    switch (spec_.kind()) {
        case FieldKind::rational: return rat_repr();
        case FieldKind::prime: return mpq_class(prime_repr());
        case FieldKind::cyclotomic:
            if (!is_rational_constant()) throw DomainError("not a rational constant");
            return cyc_repr()[0];
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(*this, o);
    switch (spec_.kind()) {
        case FieldKind::rational: return Scalar(spec_, mpq_class(rat_repr() + o.rat_repr()));
        case FieldKind::prime: {
            u64 p = spec_.prime();
            u64 s = prime_repr() + o.prime_repr();
            if (s >= p) s -= p;
            return Scalar(spec_, s);
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> c = cyc_repr();
            const auto& b = o.cyc_repr();
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
            return Scalar(spec_, std::move(c));
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    switch (spec_.kind()) {
        case FieldKind::rational: return Scalar(spec_, mpq_class(-rat_repr()));
        case FieldKind::prime: {
            u64 r = prime_repr();
            return Scalar(spec_, r == 0 ? 0 : spec_.prime() - r);
        }
        case FieldKind::cyclotomic: {
            std::vector<mpq_class> c = cyc_repr();
            for (auto& x : c) x = -x;
            return Scalar(spec_, std::move(c));
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(*this, o);
    switch (spec_.kind()) {
        case FieldKind::rational: return Scalar(spec_, mpq_class(rat_repr() * o.rat_repr()));
        case FieldKind::prime:
            return Scalar(spec_, mulmod(prime_repr(), o.prime_repr(), spec_.prime()));
        case FieldKind::cyclotomic: {
            if (spec_.degree() == 1) {
                std::vector<mpq_class> c{cyc_repr()[0] * o.cyc_repr()[0]};
                return Scalar(spec_, std::move(c));
            }
            return Scalar(spec_, cyc_mul(spec_.table(), cyc_repr(), o.cyc_repr()));
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    switch (spec_.kind()) {
        case FieldKind::rational: return Scalar(spec_, mpq_class(1 / rat_repr()));
        case FieldKind::prime: return Scalar(spec_, invmod(prime_repr(), spec_.prime()));
        case FieldKind::cyclotomic: {
            if (spec_.degree() == 1) {
                std::vector<mpq_class> c{1 / cyc_repr()[0]};
                return Scalar(spec_, std::move(c));
            }
            return Scalar(spec_, cyc_inverse(spec_.table(), cyc_repr()));
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(*this, o);
    return *this * o.inverse();
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar r = Scalar::one(spec_);
    Scalar base = *this;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (spec_ != o.spec_) return false;
    return repr_ == o.repr_;
}

void Scalar::renormalize() {
    switch (spec_.kind()) {
        case FieldKind::rational: std::get<mpq_class>(repr_).canonicalize(); break;
        case FieldKind::prime: std::get<std::uint64_t>(repr_) %= spec_.prime(); break;
        case FieldKind::cyclotomic:
            for (auto& c : std::get<std::vector<mpq_class>>(repr_)) c.canonicalize();
            break;
    }
}

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw DomainError("bad arithmetic op");
}

// ---------------------------------------------------------------------------
// text encoding

namespace {

bool valid_integer_text(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpq_class parse_rational_text(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw DomainError("empty scalar text");
    auto slash = s.find('/');
    std::string num_text = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den_text = slash == std::string::npos ? std::string("1") : s.substr(slash + 1);
    if (!valid_integer_text(num_text) || !valid_integer_text(den_text))
        throw DomainError("malformed rational '" + s + "'");
    mpz_class num(num_text);
    mpz_class den(den_text);
    if (den == 0) throw DomainError("zero denominator in scalar text '" + s + "'");
    mpq_class q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
}

std::string rational_text(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string Scalar::to_text() const {
    switch (spec_.kind()) {
        case FieldKind::rational: return rational_text(rat_repr());
        case FieldKind::prime: return std::to_string(prime_repr());
        case FieldKind::cyclotomic: {
            std::string s = "[";
            const auto& c = cyc_repr();
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) s += ", ";
                s += rational_text(c[i]);
            }
            s += "] @ zeta(" + std::to_string(spec_.cyclotomic_order()) + ")";
            return s;
        }
    }
    throw DomainError("bad field kind");
}

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
    text = trim(text);
    switch (f.kind()) {
        case FieldKind::rational: return Scalar(f, parse_rational_text(text));
        case FieldKind::prime: {
            mpq_class q = parse_rational_text(text);
            if (q.get_den() != 1 || q.get_num() < 0)
                throw DomainError("prime field scalar must be a non-negative integer");
            if (q.get_num() >= f.prime())
                throw DomainError("residue " + q.get_num().get_str() + " out of range for " +
                                  f.to_string());
            return Scalar(f, static_cast<std::uint64_t>(q.get_num().get_ui()));
        }
        case FieldKind::cyclotomic: {
            if (text.empty() || text.front() != '[')
                throw DomainError("cyclotomic scalar must start with '['");
            auto close = text.find(']');
            if (close == std::string_view::npos) throw DomainError("missing ']' in cyclotomic scalar");
            std::string_view body = text.substr(1, close - 1);
            std::string_view tail = trim(text.substr(close + 1));
            std::string expect = "@ zeta(" + std::to_string(f.cyclotomic_order()) + ")";
            if (std::string(tail) != expect)
                throw DomainError("cyclotomic scalar must end with '" + expect + "'");
            std::vector<mpq_class> coeffs;
            std::size_t pos = 0;
            while (pos <= body.size()) {
                auto comma = body.find(',', pos);
                std::string_view piece = comma == std::string_view::npos
                                             ? body.substr(pos)
                                             : body.substr(pos, comma - pos);
                coeffs.push_back(parse_rational_text(trim(piece)));
                if (comma == std::string_view::npos) break;
                pos = comma + 1;
            }
            if (coeffs.size() != f.degree())
                throw DomainError("cyclotomic scalar has " + std::to_string(coeffs.size()) +
                                  " coefficients, expected " + std::to_string(f.degree()));
            return Scalar(f, std::move(coeffs));
        }
    }
    throw DomainError("bad field kind");
}

// ---------------------------------------------------------------------------
// roots of unity

Scalar root_of_unity(const FieldSpec& f, long k) {
    if (!f.is_cyclotomic()) throw DomainError("root_of_unity requires a cyclotomic field");
    const unsigned n = f.cyclotomic_order();
    long e = k % static_cast<long>(n);
    if (e < 0) e += n;
    const unsigned d = f.degree();
    if (d == 1) {
        // phi(n) = 1 only for n = 1, 2; zeta_2 = -1
        int sign = (n == 2 && e % 2 == 1) ? -1 : 1;
        return Scalar::from_int(f, sign);
    }
    std::vector<mpq_class> z(d, mpq_class(0));
    z[1] = 1;
    return Scalar::from_coeffs(f, std::move(z)).pow(static_cast<unsigned long>(e));
}

Scalar root_of_unity_of_order(const FieldSpec& f, unsigned n, long k) {
    if (n == 0) throw DomainError("root order must be positive");
    switch (f.kind()) {
        case FieldKind::rational: {
            if (n == 1) return Scalar::one(f);
            if (n == 2) return Scalar::from_int(f, (k % 2 == 0) ? 1 : -1);
            throw DomainError("rationals contain no primitive root of order " + std::to_string(n));
        }
        case FieldKind::cyclotomic: {
            const unsigned m = f.cyclotomic_order();
            if (n == 1) return Scalar::one(f);
            if (m % n == 0) return root_of_unity(f, static_cast<long>(m / n) * k);
            if (n == 2) {
                Scalar r = Scalar::from_int(f, (k % 2 == 0) ? 1 : -1);
                return r;
            }
            throw DomainError("Q(zeta_" + std::to_string(m) + ") has no root of order " +
                              std::to_string(n));
        }
        case FieldKind::prime: {
            const u64 p = f.prime();
            if ((p - 1) % n != 0)
                throw DomainError("F_" + std::to_string(p) + " has no element of order " +
                                  std::to_string(n));
            // smallest residue of exact multiplicative order n
            for (u64 x = 1; x < p; ++x) {
                if (powmod(x, n, p) != 1) continue;
                bool exact = true;
                for (unsigned q = 2; q <= n; ++q) {
                    if (n % q == 0 && is_prime_u64(q) && powmod(x, n / q, p) == 1) {
                        exact = false;
                        break;
                    }
                }
                if (exact) {
                    long e = k % static_cast<long>(n);
                    if (e < 0) e += n;
                    return Scalar::from_int(f, static_cast<long>(powmod(x, static_cast<u64>(e), p)));
                }
            }
            throw DomainError("no element of order " + std::to_string(n));
        }
    }
    throw DomainError("bad field kind");
}

// ---------------------------------------------------------------------------
// partial square root

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return mpq_class(0);
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_den().get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    mpq_class r;
    r.get_num() = rn;
    r.get_den() = rd;
    r.canonicalize();
    return r;
}

std::optional<u64> prime_sqrt(u64 a, u64 p) {
    a %= p;
    if (a == 0) return u64{0};
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    // Tonelli-Shanks
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    if (s == 1) {
        u64 r = powmod(a, (p + 1) / 4, p);
        return std::min(r, p - r);
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

}  // namespace

std::optional<Scalar> scalar_sqrt(const Scalar& a) {
    const FieldSpec& f = a.field();
    switch (f.kind()) {
        case FieldKind::rational: {
            auto r = rational_sqrt(a.rat_repr());
            if (!r) return std::nullopt;
            return Scalar::from_rational(f, *r);
        }
        case FieldKind::prime: {
            auto r = prime_sqrt(a.prime_repr(), f.prime());
            if (!r) return std::nullopt;
            return Scalar::from_int(f, static_cast<long>(*r));
        }
        case FieldKind::cyclotomic: {
            if (a.is_zero()) return Scalar::zero(f);
            const unsigned n = f.cyclotomic_order();
            const bool has_zeta8 = (n % 8 == 0);
            for (unsigned k = 0; k < n; ++k) {
                Scalar m = a * root_of_unity(f, -static_cast<long>(k));
                if (!m.is_rational_constant()) continue;
                if (k % 2 != 0) continue;
                mpq_class r = m.rational_value();
                Scalar half_power = root_of_unity(f, k / 2);
                if (auto s = rational_sqrt(r)) {
                    return Scalar::from_rational(f, *s) * half_power;
                }
                if (has_zeta8) {
                    if (auto s = rational_sqrt(r / 2)) {
                        Scalar sqrt2 = root_of_unity(f, n / 8) + root_of_unity(f, -(long)(n / 8));
                        return Scalar::from_rational(f, *s) * sqrt2 * half_power;
                    }
                    if (auto s = rational_sqrt(-r / 2)) {
                        Scalar sqrtm2 = root_of_unity(f, n / 8) - root_of_unity(f, -(long)(n / 8));
                        return Scalar::from_rational(f, *s) * sqrtm2 * half_power;
                    }
                }
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace ihopf
