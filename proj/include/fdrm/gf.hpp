#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

namespace fdrm {

// Thrown when an operation would exceed a hard enumeration/size cap.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Hard cap on field sizes and exhaustive enumerations: 2^20.
inline constexpr long long kFieldSizeCap = 1LL << 20;

/*
 * GF(p^e) with elements encoded as integers in [0, q): the element
 * sum c_i x^i (mod modulus) is encoded as sum c_i p^i.  Multiplication
 * and inversion run on discrete-log tables built at construction.
 */
class Field {
public:
    // Canonical field: modulus is the monic irreducible polynomial of
    // degree e over GF(p) with the smallest base-p coefficient encoding.
    static std::shared_ptr<const Field> get(int p, int e);

    // Field with an explicitly supplied modulus (validated monic irreducible).
    static std::shared_ptr<const Field> with_modulus(int p, int e, const std::vector<int>& modulus);

    int p() const { return p_; }
    int e() const { return e_; }
    long long q() const { return q_; }
    // Coefficients low to high, length e+1, leading coefficient 1.
    const std::vector<int>& modulus() const { return modulus_; }
    // Smallest-encoded element of multiplicative order q-1.
    int alpha() const { return alpha_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int pow(int a, long long n) const;
    long long order(int a) const;

    bool same(const Field& other) const {
        return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
    }

private:
    Field(int p, int e, std::vector<int> modulus);
    void build_tables();
    void check_element(int a) const;

    int p_;
    int e_;
    long long q_;
    std::vector<int> modulus_;
    int alpha_ = 1;
    std::vector<int> exp_;  // size 2(q-1): alpha^i
    std::vector<int> log_;  // size q: log_[0] = -1
};

using FieldPtr = std::shared_ptr<const Field>;

/*
 * GF(q^k) as an extension of GF(q), realised inside the canonical field
 * GF(p^{e*k}).  alpha is the smallest-encoded primitive element; expand
 * writes elements in the ordered basis {1, alpha, ..., alpha^{k-1}} with
 * coordinates in the base field.
 */
class Extension {
public:
    // Errors with ResourceCapError when q^k exceeds 2^20.
    static std::shared_ptr<const Extension> get(const FieldPtr& base, int k);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& big() const { return big_; }
    int k() const { return k_; }
    int alpha() const { return alpha_; }

    // Field embedding GF(q) -> GF(q^k).
    int embed(int a) const;
    // Inverse of embed; errors if x is outside the embedded base field.
    int project(int x) const;
    // Coordinates of x over {1, alpha, ..., alpha^{k-1}}, entries in GF(q).
    std::vector<int> expand(int x) const;
    // Inverse of expand.
    int compose(const std::vector<int>& coords) const;

private:
    Extension(FieldPtr base, int k);

    FieldPtr base_;
    FieldPtr big_;
    int k_;
    int alpha_;
    std::vector<int> embed_table_;
    std::vector<std::vector<int>> phi_inv_;  // (ek x ek) over GF(p): digits -> expand coords
};

using ExtensionPtr = std::shared_ptr<const Extension>;

}  // namespace fdrm
