#include "fdrm/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace fdrm {
namespace {

long long ipow_capped(int base, int exp, long long cap) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        r *= base;
        if (r > cap) return -1;
    }
    return r;
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; (long long)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> to_digits(long long x, int p, int len) {
    std::vector<int> d(len, 0);
    for (int i = 0; i < len && x > 0; ++i) {
        d[i] = (int)(x % p);
        x /= p;
    }
    return d;
}

long long from_digits(const std::vector<int>& d, int p) {
    long long x = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) x = x * p + d[i];
    return x;
}

void poly_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a by monic b, coefficients mod p.
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b, int p) {
    poly_trim(a);
    int db = (int)b.size() - 1;
    while ((int)a.size() - 1 >= db && !a.empty()) {
        int shift = (int)a.size() - 1 - db;
        int c = a.back();
        for (int i = 0; i <= db; ++i) {
            a[shift + i] = (int)(((long long)a[shift + i] - (long long)c * b[i]) % p + p) % p;
        }
        poly_trim(a);
    }
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (int)((r[i + j] + (long long)a[i] * b[j]) % p);
    return r;
}

bool poly_irreducible(const std::vector<int>& f, int p) {
    int e = (int)f.size() - 1;
    if (e == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    for (int d = 1; 2 * d <= e; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            std::vector<int> g = to_digits(c, p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<int> canonical_modulus(int p, int e) {
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long c = 0; c < count; ++c) {
        std::vector<int> f = to_digits(c, p, e);
        f.push_back(1);
        if (poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::vector<long long> distinct_prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::mutex g_field_mutex;
std::map<std::tuple<int, int, long long>, std::shared_ptr<const Field>> g_field_cache;

std::mutex g_ext_mutex;
std::map<std::tuple<int, int, long long, int>, std::shared_ptr<const Extension>> g_ext_cache;

}  // namespace

Field::Field(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (int i = 0; i < e_; ++i) q_ *= p_;
    build_tables();
}

void Field::build_tables() {
    const long long n = q_ - 1;
    // Multiplication without tables, used only while bootstrapping.
    auto raw_mul = [&](long long a, long long b) -> long long {
        auto pa = to_digits(a, p_, e_);
        auto pb = to_digits(b, p_, e_);
        auto r = poly_rem(poly_mul(pa, pb, p_), modulus_, p_);
        r.resize(e_, 0);
        return from_digits(r, p_);
    };
    auto raw_pow = [&](long long a, long long m) -> long long {
        long long r = 1, base = a;
        while (m > 0) {
            if (m & 1) r = raw_mul(r, base);
            base = raw_mul(base, base);
            m >>= 1;
        }
        return r;
    };
    const auto factors = distinct_prime_factors(n);
    alpha_ = 1;
    for (long long g = 1; g < q_; ++g) {
        bool primitive = true;
        for (long long f : factors) {
            if (raw_pow(g, n / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            alpha_ = (int)g;
            break;
        }
    }
    exp_.assign(n > 0 ? 2 * n : 1, 1);
    log_.assign(q_, -1);
    long long cur = 1;
    for (long long i = 0; i < n; ++i) {
        exp_[i] = (int)cur;
        if (log_[cur] < 0) log_[cur] = (int)i;
        cur = raw_mul(cur, alpha_);
    }
    for (long long i = n; i < 2 * n; ++i) exp_[i] = exp_[i - n];
}

std::shared_ptr<const Field> Field::get(int p, int e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (ipow_capped(p, e, kFieldSizeCap) < 0)
        throw ResourceCapError("field size exceeds 2^20");
    auto modulus = canonical_modulus(p, e);
    return with_modulus(p, e, modulus);
}

std::shared_ptr<const Field> Field::with_modulus(int p, int e, const std::vector<int>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (ipow_capped(p, e, kFieldSizeCap) < 0)
        throw ResourceCapError("field size exceeds 2^20");
    if ((int)modulus.size() != e + 1 || modulus[e] != 1)
        throw std::invalid_argument("modulus must be monic of degree e");
    for (int c : modulus)
        if (c < 0 || c >= p) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (!poly_irreducible(modulus, p) && e > 1)
        throw std::invalid_argument("modulus is reducible");
    long long enc = from_digits(modulus, p);
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_tuple(p, e, enc);
    auto it = g_field_cache.find(key);
    if (it != g_field_cache.end()) return it->second;
    std::shared_ptr<const Field> f(new Field(p, e, modulus));
    g_field_cache[key] = f;
    return f;
}

void Field::check_element(int a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("element out of range");
}

int Field::add(int a, int b) const {
    check_element(a);
    check_element(b);
    if (p_ == 2) return a ^ b;
    if (e_ == 1) return (int)(((long long)a + b) % p_);
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int Field::neg(int a) const {
    check_element(a);
    if (p_ == 2) return a;
    if (e_ == 1) return (p_ - a) % p_;
    int r = 0, mult = 1;
    for (int i = 0; i < e_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
    check_element(a);
    check_element(b);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

int Field::inv(int a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("inverse of zero");
    return exp_[(q_ - 1) - log_[a]];
}

int Field::pow(int a, long long n) const {
    check_element(a);
    if (a == 0) {
        if (n == 0) return 1;
        if (n > 0) return 0;
        throw std::invalid_argument("inverse of zero");
    }
    long long m = q_ - 1;
    if (m == 0) return 1;
    long long r = ((n % m) + m) % m;
    return exp_[(log_[a] * r) % m];
}

long long Field::order(int a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("order of zero");
    long long n = q_ - 1;
    if (n == 0) return 1;
    return n / std::gcd(n, (long long)log_[a]);
}

Extension::Extension(FieldPtr base, int k) : base_(std::move(base)), k_(k) {
    const int p = base_->p();
    const int e = base_->e();
    const long long q = base_->q();
    big_ = Field::get(p, e * k);
    alpha_ = big_->alpha();

    // Embedding of the base field: send its generator to the
    // smallest-encoded root of the base modulus inside the big field.
    int rho = 0;
    if (e > 1) {
        const auto& mod = base_->modulus();
        bool found = false;
        for (long long x = 0; x < big_->q(); ++x) {
            int acc = 1;
            for (int i = e - 1; i >= 0; --i) acc = big_->add(big_->mul(acc, (int)x), mod[i]);
            if (acc == 0) {
                rho = (int)x;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("base modulus has no root in extension");
    }
    embed_table_.assign(q, 0);
    for (long long a = 0; a < q; ++a) {
        auto d = to_digits(a, p, e);
        int acc = 0;
        for (int i = e - 1; i >= 0; --i) acc = big_->add(big_->mul(acc, rho), d[i]);
        embed_table_[a] = acc;
    }

    // Matrix over GF(p) sending expand-coordinates (digit blocks of the
    // base-field coordinates) to base-p digits of the big-field element;
    // invert it once.
    const int n = e * k;
    std::vector<std::vector<int>> phi(n, std::vector<int>(2 * n, 0));
    for (int j = 0; j < k; ++j) {
        int aj = big_->pow(alpha_, j);
        for (int d = 0; d < e; ++d) {
            int rd = (e == 1) ? 1 : big_->pow(rho, d);
            int w = big_->mul(rd, aj);
            auto digits = to_digits(w, p, n);
            for (int r = 0; r < n; ++r) phi[r][j * e + d] = digits[r];
        }
    }
    for (int r = 0; r < n; ++r) phi[r][n + r] = 1;
    // Gauss-Jordan mod p.
    auto inv_mod_p = [&](int a) {
        int r = 1, b = a, m = p - 2;
        while (m > 0) {
            if (m & 1) r = (int)((long long)r * b % p);
            b = (int)((long long)b * b % p);
            m >>= 1;
        }
        return r;
    };
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (phi[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(phi[row], phi[piv]);
        int s = inv_mod_p(phi[row][col]);
        for (int c = 0; c < 2 * n; ++c) phi[row][c] = (int)((long long)phi[row][c] * s % p);
        for (int r = 0; r < n; ++r) {
            if (r == row || phi[r][col] == 0) continue;
            int f = phi[r][col];
            for (int c = 0; c < 2 * n; ++c)
                phi[r][c] = (int)(((long long)phi[r][c] - (long long)f * phi[row][c]) % p + p) % p;
        }
        ++row;
    }
    if (row < n) throw std::logic_error("expand basis is singular");
    phi_inv_.assign(n, std::vector<int>(n, 0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) phi_inv_[r][c] = phi[r][n + c];
}

std::shared_ptr<const Extension> Extension::get(const FieldPtr& base, int k) {
    if (!base) throw std::invalid_argument("null base field");
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (ipow_capped(base->p(), base->e() * k, kFieldSizeCap) < 0)
        throw ResourceCapError("extension size exceeds 2^20");
    long long enc = from_digits(base->modulus(), base->p());
    auto key = std::make_tuple(base->p(), base->e(), enc, k);
    std::lock_guard<std::mutex> lock(g_ext_mutex);
    auto it = g_ext_cache.find(key);
    if (it != g_ext_cache.end()) return it->second;
    std::shared_ptr<const Extension> ext(new Extension(base, k));
    g_ext_cache[key] = ext;
    return ext;
}

int Extension::embed(int a) const {
    if (a < 0 || a >= base_->q()) throw std::invalid_argument("element out of range");
    return embed_table_[a];
}

int Extension::project(int x) const {
    auto coords = expand(x);
    for (int j = 1; j < k_; ++j)
        if (coords[j] != 0) throw std::invalid_argument("element lies outside base field");
    return coords[0];
}

std::vector<int> Extension::expand(int x) const {
    if (x < 0 || x >= big_->q()) throw std::invalid_argument("element out of range");
    const int p = base_->p();
    const int e = base_->e();
    const int n = e * k_;
    auto digits = to_digits(x, p, n);
    std::vector<int> coords(k_, 0);
    for (int j = 0; j < k_; ++j) {
        std::vector<int> block(e, 0);
        for (int d = 0; d < e; ++d) {
            long long acc = 0;
            for (int c = 0; c < n; ++c) acc += (long long)phi_inv_[j * e + d][c] * digits[c];
            block[d] = (int)(acc % p);
        }
        coords[j] = (int)from_digits(block, p);
    }
    return coords;
}

int Extension::compose(const std::vector<int>& coords) const {
    if ((int)coords.size() != k_) throw std::invalid_argument("coordinate count mismatch");
    int acc = 0;
    for (int j = 0; j < k_; ++j)
        acc = big_->add(acc, big_->mul(embed(coords[j]), big_->pow(alpha_, j)));
    return acc;
}

}  // namespace fdrm
