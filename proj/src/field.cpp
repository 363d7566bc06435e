#include "hermfold/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hermfold {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p), constant term first, no trailing-zero
// normalization required by callers.
using Poly = std::vector<int>;

int poly_degree(const Poly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo b (b must be monic of positive degree).
Poly poly_rem(Poly a, const Poly& b, int p) {
    int db = poly_degree(b);
    for (int i = poly_degree(a); i >= db; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) {
            int k = i - db + j;
            a[k] = ((a[k] - c * b[j]) % p + p) % p;
        }
    }
    a.resize(db);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Irreducible over GF(p) iff it has no monic divisor of degree 1..deg/2.
bool poly_is_irreducible(const Poly& f, int p) {
    int deg = poly_degree(f);
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            Poly g(d + 1, 0);
            long long t = v;
            for (int i = 0; i < d; ++i) { g[i] = (int)(t % p); t /= p; }
            g[d] = 1;
            if (poly_degree(poly_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::mutex registry_mutex;
std::map<std::pair<int, int>, FieldPtr>& registry() {
    static std::map<std::pair<int, int>, FieldPtr> r;
    return r;
}

} // namespace

Field::Field(int p, int s, std::vector<int> modulus)
    : p_(p), s_(s), modulus_(std::move(modulus)) {
    std::uint64_t ord = 1;
    for (int i = 0; i < s_; ++i) ord *= (std::uint64_t)p_;
    order_ = (std::uint32_t)ord;
    build_tables();
}

FieldPtr Field::create(int p, int s) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (s < 1) throw std::invalid_argument("field: extension degree must be positive");
    std::uint64_t ord = 1;
    for (int i = 0; i < s; ++i) {
        ord *= (std::uint64_t)p;
        if (ord > 65536) throw std::invalid_argument("field: order exceeds 2^16");
    }

    std::lock_guard<std::mutex> lock(registry_mutex);
    auto key = std::make_pair(p, s);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second;

    // Scan for the canonical modulus: smallest code v encodes the non-leading
    // coefficients of a monic degree-s candidate; the first irreducible one
    // wins.
    std::vector<int> coeffs;
    for (std::uint64_t v = 0; v < ord; ++v) {
        Poly f(s + 1, 0);
        std::uint64_t t = v;
        for (int i = 0; i < s; ++i) { f[i] = (int)(t % p); t /= p; }
        f[s] = 1;
        if (poly_is_irreducible(f, p)) { coeffs = f; break; }
    }
    if (coeffs.empty()) throw std::logic_error("field: no irreducible modulus found");

    FieldPtr f(new Field(p, s, coeffs));
    registry()[key] = f;
    return f;
}

FieldPtr Field::with_modulus(int p, int s, const std::vector<int>& coeffs) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (s < 1) throw std::invalid_argument("field: extension degree must be positive");
    std::uint64_t ord = 1;
    for (int i = 0; i < s; ++i) {
        ord *= (std::uint64_t)p;
        if (ord > 65536) throw std::invalid_argument("field: order exceeds 2^16");
    }
    if ((int)coeffs.size() != s + 1)
        throw std::invalid_argument("field: modulus must have degree s");
    for (int c : coeffs)
        if (c < 0 || c >= p)
            throw std::invalid_argument("field: modulus coefficient out of range");
    if (coeffs[s] != 1)
        throw std::invalid_argument("field: modulus must be monic");
    if (!poly_is_irreducible(coeffs, p))
        throw std::invalid_argument("field: modulus is reducible");

    // Reuse the cached canonical instance when the modulus matches it.
    {
        std::lock_guard<std::mutex> lock(registry_mutex);
        auto it = registry().find(std::make_pair(p, s));
        if (it != registry().end() && it->second->modulus() == coeffs)
            return it->second;
    }
    FieldPtr canonical = Field::create(p, s);
    if (canonical->modulus() == coeffs) return canonical;
    return FieldPtr(new Field(p, s, coeffs));
}

FieldPtr Field::parse_header(const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    int p = 0, s = 0;
    if (!(in >> tag >> p >> s) || tag != "GF")
        throw std::invalid_argument("field: malformed header");
    std::vector<int> coeffs;
    int c;
    while (in >> c) coeffs.push_back(c);
    return with_modulus(p, s, coeffs);
}

void Field::build_tables() {
    // Bootstrap multiplication straight from polynomial arithmetic; the
    // exp/log tables built below take over afterwards.
    auto code_to_poly = [&](std::uint32_t code) {
        Poly a(s_, 0);
        for (int i = 0; i < s_; ++i) { a[i] = (int)(code % p_); code /= p_; }
        return a;
    };
    auto poly_to_code = [&](const Poly& a) {
        std::uint32_t code = 0;
        for (int i = s_ - 1; i >= 0; --i) code = code * p_ + (i < (int)a.size() ? a[i] : 0);
        return (std::uint16_t)code;
    };
    auto slow_mul = [&](std::uint16_t a, std::uint16_t b) {
        if (a == 0 || b == 0) return (std::uint16_t)0;
        return poly_to_code(poly_rem(poly_mul(code_to_poly(a), code_to_poly(b), p_),
                                     modulus_, p_));
    };
    auto slow_pow = [&](std::uint16_t a, std::uint32_t e) {
        std::uint16_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    std::uint32_t group = order_ - 1;
    auto factors = prime_factors(group);
    generator_ = 1;
    for (std::uint32_t g = 1; g < order_; ++g) {
        bool primitive = true;
        for (std::uint32_t f : factors)
            if (slow_pow((std::uint16_t)g, group / f) == 1) { primitive = false; break; }
        if (primitive) { generator_ = (std::uint16_t)g; break; }
    }

    exp_.resize(2 * group);
    log_.assign(order_, 0);
    std::uint16_t cur = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        exp_[i] = cur;
        exp_[i + group] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, generator_);
    }

    if (order_ <= 256) {
        add_tab_.resize((size_t)order_ * order_);
        mul_tab_.resize((size_t)order_ * order_);
        neg_tab_.resize(order_);
        for (std::uint32_t a = 0; a < order_; ++a) {
            // Digit-wise addition mod p.
            for (std::uint32_t b = 0; b < order_; ++b) {
                std::uint32_t ad = a, bd = b, sum = 0, pl = 1;
                for (int i = 0; i < s_; ++i) {
                    sum += pl * ((ad % p_ + bd % p_) % p_);
                    ad /= p_;
                    bd /= p_;
                    pl *= p_;
                }
                add_tab_[(size_t)a * order_ + b] = (std::uint16_t)sum;
                mul_tab_[(size_t)a * order_ + b] = slow_mul((std::uint16_t)a, (std::uint16_t)b);
            }
            std::uint32_t ad = a, ng = 0, pl = 1;
            for (int i = 0; i < s_; ++i) {
                ng += pl * ((p_ - ad % p_) % p_);
                ad /= p_;
                pl *= p_;
            }
            neg_tab_[a] = (std::uint16_t)ng;
        }
    }
}

std::string Field::header() const {
    std::string h = "GF " + std::to_string(p_) + " " + std::to_string(s_);
    for (int c : modulus_) h += " " + std::to_string(c);
    return h;
}

void Field::check_code(std::uint32_t code) const {
    if (code >= order_) throw std::invalid_argument("field: element code out of range");
}

bool Field::same(const Field& other) const {
    return p_ == other.p_ && s_ == other.s_ && modulus_ == other.modulus_;
}

std::uint16_t Field::add(std::uint16_t a, std::uint16_t b) const {
    if (p_ == 2) return a ^ b;
    if (!add_tab_.empty()) return add_tab_[(size_t)a * order_ + b];
    std::uint32_t x = a, y = b, r = 0, place = 1;
    for (int i = 0; i < s_; ++i) {
        r += place * ((x % p_ + y % p_) % p_);
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return (std::uint16_t)r;
}

std::uint16_t Field::neg(std::uint16_t a) const {
    if (p_ == 2) return a;
    if (!neg_tab_.empty()) return neg_tab_[a];
    std::uint32_t x = a, r = 0, place = 1;
    for (int i = 0; i < s_; ++i) {
        r += place * ((p_ - x % p_) % p_);
        x /= p_;
        place *= p_;
    }
    return (std::uint16_t)r;
}

std::uint16_t Field::sub(std::uint16_t a, std::uint16_t b) const {
    return add(a, neg(b));
}

std::uint16_t Field::mul(std::uint16_t a, std::uint16_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

std::uint16_t Field::inv(std::uint16_t a) const {
    if (a == 0) throw std::domain_error("field: division by zero");
    std::uint32_t group = order_ - 1;
    return exp_[(group - log_[a]) % group];
}

std::uint16_t Field::div(std::uint16_t a, std::uint16_t b) const {
    return mul(a, inv(b));
}

std::uint16_t Field::pow(std::uint16_t a, unsigned long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint32_t group = order_ - 1;
    std::uint64_t le = ((std::uint64_t)log_[a] * (e % group)) % group;
    return exp_[le];
}

std::uint16_t Field::frobenius(std::uint16_t a, std::uint32_t q) const {
    if (q < 2 || (std::uint64_t)q * q != order_)
        throw std::invalid_argument("field: q does not match field order");
    check_code(a);
    return pow(a, q);
}

std::uint16_t Field::trace_to(std::uint16_t a, std::uint32_t q) const {
    return add(frobenius(a, q), a);
}

std::uint16_t Field::norm_to(std::uint16_t a, std::uint32_t q) const {
    if (q < 2 || (std::uint64_t)q * q != order_)
        throw std::invalid_argument("field: q does not match field order");
    check_code(a);
    return pow(a, q + 1);
}

std::vector<std::uint16_t> Field::solve_mu_constraint(std::uint16_t delta,
                                                      std::uint32_t q) const {
    std::uint16_t rhs = norm_to(delta, q);
    std::vector<std::uint16_t> mus;
    for (std::uint32_t m = 0; m < order_; ++m)
        if (trace_to((std::uint16_t)m, q) == rhs) mus.push_back((std::uint16_t)m);
    if (mus.size() != q)
        throw std::logic_error("field: mu constraint solution count != q");
    return mus;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    if (!field || !o.field || !field->same(*o.field))
        throw std::invalid_argument("field mismatch");
    return {field, field->add(code, o.code)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    if (!field || !o.field || !field->same(*o.field))
        throw std::invalid_argument("field mismatch");
    return {field, field->sub(code, o.code)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    if (!field || !o.field || !field->same(*o.field))
        throw std::invalid_argument("field mismatch");
    return {field, field->mul(code, o.code)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    if (!field || !o.field || !field->same(*o.field))
        throw std::invalid_argument("field mismatch");
    return {field, field->div(code, o.code)};
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field || !o.field || !field->same(*o.field))
        throw std::invalid_argument("field mismatch");
    return code == o.code;
}

FieldPtr field_create(int p, int s) { return Field::create(p, s); }

FieldElement make_element(const FieldPtr& f, std::uint32_t code) {
    f->check_code(code);
    return {f, (std::uint16_t)code};
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    throw std::invalid_argument("field: unknown arithmetic op");
}

FieldElement frobenius_q(const FieldElement& a, std::uint32_t q) {
    return {a.field, a.field->frobenius(a.code, q)};
}

std::vector<FieldElement> solve_mu_constraint(const FieldElement& delta,
                                              std::uint32_t q) {
    std::vector<FieldElement> out;
    for (std::uint16_t m : delta.field->solve_mu_constraint(delta.code, q))
        out.push_back({delta.field, m});
    return out;
}

} // namespace hermfold
