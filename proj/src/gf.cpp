#include "torusplit/gf.hpp"

namespace torusplit {

namespace {

/// Multiply polynomials over F_p and reduce by the monic modulus.
std::vector<int> polymul_mod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, int p) {
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    int k = static_cast<int>(mod.size()) - 1;
    for (int d = static_cast<int>(c.size()) - 1; d >= k; --d) {
        int coef = c[d];
        if (coef == 0) continue;
        for (int i = 0; i <= k; ++i) {
            int idx = d - k + i;
            c[idx] = ((c[idx] - coef * mod[i]) % p + p * p) % p;
        }
    }
    c.resize(k);
    return c;
}

bool is_irreducible(const std::vector<int>& mod, int p) {
    // no roots for small check plus brute-force factor search by trial
    // division against all monic polynomials of degree <= k/2
    int k = static_cast<int>(mod.size()) - 1;
    for (int d = 1; d <= k / 2; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int enc = 0; enc < count; ++enc) {
            std::vector<int> f(d + 1, 0);
            f[d] = 1;
            int e = enc;
            for (int i = 0; i < d; ++i) {
                f[i] = e % p;
                e /= p;
            }
            // polynomial remainder of mod by f
            std::vector<int> r = mod;
            for (int top = static_cast<int>(r.size()) - 1; top >= d; --top) {
                int coef = r[top];
                if (coef == 0) continue;
                for (int i = 0; i <= d; ++i) {
                    int idx = top - d + i;
                    r[idx] = ((r[idx] - coef * f[i]) % p + p * p) % p;
                }
            }
            bool zero = true;
            for (int i = 0; i < d; ++i)
                if (r[i] != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

GF::GF(int p, int k) : p_(p), k_(k) {
    if (p < 2 || k < 1) throw std::invalid_argument("bad field parameters");
    q_ = 1;
    for (int i = 0; i < k; ++i) q_ *= p;
    if (k == 1) {
        mod_ = {0, 1};  // x (unused for k=1)
        return;
    }
    // least lexicographic monic irreducible of degree k: scan constant-first
    int count = q_;
    for (int enc = 0; enc < count; ++enc) {
        std::vector<int> f(k + 1, 0);
        f[k] = 1;
        int e = enc;
        for (int i = 0; i < k; ++i) {
            f[i] = e % p;
            e /= p;
        }
        if (is_irreducible(f, p)) {
            mod_ = f;
            return;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::vector<int> GF::digits(int a) const {
    std::vector<int> d(k_, 0);
    for (int i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

int GF::undigits(const std::vector<int>& d) const {
    int a = 0;
    for (int i = k_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
}

int GF::add(int a, int b) const {
    auto da = digits(a), db = digits(b);
    for (int i = 0; i < k_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da);
}

int GF::neg(int a) const {
    auto d = digits(a);
    for (auto& v : d) v = (p_ - v) % p_;
    return undigits(d);
}

int GF::sub(int a, int b) const { return add(a, neg(b)); }

int GF::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
    auto c = polymul_mod(digits(a), digits(b), mod_, p_);
    return undigits(c);
}

int GF::pow(int a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw std::domain_error("0 has no inverse");
        return 0;
    }
    long long m = q_ - 1;
    e %= m;
    if (e < 0) e += m;
    int out = 1, base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

int GF::inv(int a) const {
    if (a == 0) throw std::domain_error("0 has no inverse");
    return pow(a, q_ - 2);
}

int GF::from_int(long long n) const {
    long long r = n % p_;
    if (r < 0) r += p_;
    return static_cast<int>(r);
}

bool GF::is_square(int a) const {
    if (a == 0) throw std::domain_error("is_square expects a unit");
    if (p_ == 2) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

int GF::generator() const {
    for (int g = 1; g < q_; ++g) {
        int x = g;
        int ord = 1;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == q_ - 1) return g;
    }
    throw std::logic_error("no generator found");
}

}  // namespace torusplit
