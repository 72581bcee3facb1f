#include "packets/gf.hpp"

#include <string>

namespace packets {

bool prime_power(int q, int* p_out, int* k_out) {
    if (q < 2) return false;
    int p = 0;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q; // q itself prime
    int k = 0;
    int m = q;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return false;
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

namespace {

// Polynomial coded base p: digit i is the coefficient of x^i.
std::vector<int> decode(int code, int p, int len) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len && code; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

int encode(const std::vector<int>& c, int p) {
    int code = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) code = code * p + c[i];
    return code;
}

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    int dm = static_cast<int>(m.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
        int c = a[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p * p) % p;
        }
    }
    a.resize(dm);
    return a;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    int k = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= k; ++d) {
        int count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int low = 0; low < count; ++low) {
            std::vector<int> g = decode(low, p, d + 1);
            g[d] = 1; // monic degree d
            std::vector<int> r = poly_mod(f, g, p);
            bool zero = true;
            for (int c : r)
                if (c % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

} // namespace

Gf::Gf(int p, int k) : p_(p), k_(k) {
    int check_p, check_k;
    if (!prime_power(p, &check_p, &check_k) || check_k != 1)
        throw ParameterError("GF characteristic must be prime, got " + std::to_string(p));
    order_ = 1;
    for (int i = 0; i < k; ++i) order_ *= p;
    if (order_ > 128) throw ResourceError("GF order " + std::to_string(order_) + " exceeds the table bound");

    if (k == 1) {
        irreducible_ = {0, 1}; // x, unused
    } else {
        int count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        irreducible_.clear();
        for (int low = 0; low < count; ++low) {
            std::vector<int> f = decode(low, p, k + 1);
            f[k] = 1;
            if (is_irreducible(f, p)) {
                irreducible_ = f;
                break;
            }
        }
        if (irreducible_.empty()) throw InternalError("no irreducible polynomial found");
    }
    build_tables();
}

Gf Gf::of_order(int q) {
    int p, k;
    if (!prime_power(q, &p, &k)) throw ParameterError(std::to_string(q) + " is not a prime power");
    return Gf(p, k);
}

int Gf::add(int a, int b) const {
    int r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

int Gf::neg(int a) const {
    int r = 0, mult = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

int Gf::mul_raw(int a, int b) const {
    std::vector<int> pa = decode(a, p_, k_), pb = decode(b, p_, k_);
    std::vector<int> prod(2 * k_ - 1, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    if (k_ > 1) prod = poly_mod(prod, irreducible_, p_);
    prod.resize(k_);
    return encode(prod, p_);
}

void Gf::build_tables() {
    // Find a generator of the unit group by order testing.
    int units = order_ - 1;
    gen_ = 0;
    for (int cand = 1; cand < order_; ++cand) {
        int x = cand, ord = 1;
        while (x != 1) {
            x = mul_raw(x, cand);
            ++ord;
            if (ord > units) throw InternalError("unit order overflow");
        }
        if (ord == units) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0) throw InternalError("no generator found");
    exp_table_.assign(units, 1);
    log_table_.assign(order_, -1);
    int x = 1;
    for (int e = 0; e < units; ++e) {
        exp_table_[e] = x;
        log_table_[x] = e;
        x = mul_raw(x, gen_);
    }
}

int Gf::mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    long long e = (log_table_[a] + log_table_[b]) % (order_ - 1);
    return exp_table_[e];
}

int Gf::inv(int a) const {
    if (a == 0) throw ParameterError("division by zero in GF");
    long long e = (order_ - 1 - log_table_[a]) % (order_ - 1);
    return exp_table_[e];
}

int Gf::pow(int a, long long e) const {
    if (a == 0) {
        if (e <= 0) throw ParameterError("0^e undefined for e <= 0 in GF");
        return 0;
    }
    long long units = order_ - 1;
    long long le = (log_table_[a] * (e % units)) % units;
    if (le < 0) le += units;
    return exp_table_[le];
}

int Gf::unit_from_dlog(long long e) const {
    long long units = order_ - 1;
    e %= units;
    if (e < 0) e += units;
    return exp_table_[e];
}

long long Gf::dlog(int a) const {
    if (a <= 0 || a >= order_) throw ParameterError("dlog argument must be a nonzero field element");
    return log_table_[a];
}

} // namespace packets
