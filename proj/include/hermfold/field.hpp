#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hermfold {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// A finite field GF(p^s), p prime, p^s <= 2^16.  Elements are identified by
// integer codes in [0, p^s): the code of a0 + a1*t + ... + a_{s-1}*t^{s-1}
// (t the residue of the indeterminate modulo the field's modulus polynomial)
// is a0 + a1*p + ... + a_{s-1}*p^{s-1}.  The modulus is the lexicographically
// least monic irreducible polynomial of degree s over GF(p), where polynomials
// are compared by their coefficient codes (constant term first), so every
// (p, s) names one canonical field and element codes are reproducible across
// runs and machines.
class Field : public std::enable_shared_from_this<Field> {
public:
    // Canonical field for (p, s); instances are cached, so repeated calls
    // return the same object.
    static FieldPtr create(int p, int s);

    // Field with an explicitly given modulus (coefficients constant term
    // first, must be monic and irreducible).  Used when importing data that
    // carries a field header.
    static FieldPtr with_modulus(int p, int s, const std::vector<int>& coeffs);

    // Parses a "GF p s c0 c1 ... cs" header line.
    static FieldPtr parse_header(const std::string& line);

    int characteristic() const { return p_; }
    int degree() const { return s_; }
    std::uint32_t order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }

    // "GF p s c0 c1 ... cs" with the modulus coefficients constant term first.
    std::string header() const;

    // Arithmetic on element codes.
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t neg(std::uint16_t a) const;
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t inv(std::uint16_t a) const;            // throws on 0
    std::uint16_t div(std::uint16_t a, std::uint16_t b) const;
    std::uint16_t pow(std::uint16_t a, unsigned long long e) const;

    // a^q where q^2 == order(); the q-power Frobenius of GF(q^2).
    std::uint16_t frobenius(std::uint16_t a, std::uint32_t q) const;

    // Trace and norm from GF(q^2) down to GF(q): a^q + a and a^(q+1).
    std::uint16_t trace_to(std::uint16_t a, std::uint32_t q) const;
    std::uint16_t norm_to(std::uint16_t a, std::uint32_t q) const;

    // All mu in GF(q^2) with mu^q + mu == delta^(q+1), sorted by code.
    // There are always exactly q of them.
    std::vector<std::uint16_t> solve_mu_constraint(std::uint16_t delta,
                                                   std::uint32_t q) const;

    // Least element code (necessarily >= 2 when order > 2) whose
    // multiplicative order is order() - 1.
    std::uint16_t least_primitive() const { return generator_; }

    bool is_valid_code(std::uint32_t code) const { return code < order_; }
    void check_code(std::uint32_t code) const;

    // Structural equality: same characteristic, degree and modulus.
    bool same(const Field& other) const;

    // Full multiplication table, row-major [a * order() + b], available only
    // when order() <= 256; null otherwise.  Used by the dense linear algebra
    // kernels.
    const std::uint16_t* mul_table() const {
        return mul_tab_.empty() ? nullptr : mul_tab_.data();
    }
    const std::uint16_t* add_table() const {
        return add_tab_.empty() ? nullptr : add_tab_.data();
    }

private:
    Field(int p, int s, std::vector<int> modulus);
    void build_tables();

    int p_;
    int s_;
    std::uint32_t order_;
    std::vector<int> modulus_;       // degree s_, monic, constant term first
    std::uint16_t generator_;
    std::vector<std::uint16_t> exp_; // exp_[i] = generator^i, i < 2*(order-1)
    std::vector<std::uint32_t> log_; // log_[exp_[i]] = i for i < order-1
    std::vector<std::uint16_t> add_tab_; // order <= 256 only
    std::vector<std::uint16_t> mul_tab_; // order <= 256 only
    std::vector<std::uint16_t> neg_tab_;
};

// Element-with-field value type for callers that prefer checked arithmetic
// over raw codes.
struct FieldElement {
    FieldPtr field;
    std::uint16_t code = 0;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldPtr field_create(int p, int s);
FieldElement make_element(const FieldPtr& f, std::uint32_t code);
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);
FieldElement frobenius_q(const FieldElement& a, std::uint32_t q);
std::vector<FieldElement> solve_mu_constraint(const FieldElement& delta,
                                              std::uint32_t q);

} // namespace hermfold
