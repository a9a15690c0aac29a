#include "qfrob/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qfrob {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long pos_mod(long a, long b) {
    long r = a % b;
    return r < 0 ? r + b : r;
}

mpz_class binom_z(long n, long k) {
    if (k < 0) return 0;
    if (n < 0) {
        mpz_class r = binom_z(k - n - 1, k);
        return (k % 2) ? mpz_class(-r) : r;
    }
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace {

using Poly = std::vector<mpz_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic polynomial; throws if the remainder is nonzero
Poly div_exact_monic(Poly a, const Poly& m) {
    trim(a);
    const size_t dm = m.size() - 1;
    if (a.size() <= dm) {
        if (!a.empty()) throw ArithmeticError("inexact polynomial division");
        return {};
    }
    Poly q(a.size() - dm);
    for (size_t k = a.size(); k-- > dm;) {
        mpz_class c = a[k];
        if (c == 0) continue;
        q[k - dm] = c;
        for (size_t j = 0; j <= dm; ++j) a[k - dm + j] -= c * m[j];
    }
    trim(a);
    if (!a.empty()) throw ArithmeticError("inexact polynomial division");
    return q;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly cyclotomic(int n, std::map<int, Poly>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    Poly num(n + 1);
    num[0] = -1;
    num[n] = 1;
    Poly den{1};
    for (int d = 1; d < n; ++d)
        if (n % d == 0) den = poly_mul(den, cyclotomic(d, memo));
    Poly r = div_exact_monic(num, den);
    memo[n] = r;
    return r;
}

// reduce a coefficient vector of any length mod Phi_l (in place), result size euler_deg
void reduce_in_place(const RootParams* rp, Poly& a) {
    const int d = rp->euler_deg;
    const int l = rp->l;
    if (static_cast<int>(a.size()) > l) {
        for (size_t k = l; k < a.size(); ++k) a[k % l] += a[k];
        a.resize(l);
    }
    for (int k = static_cast<int>(a.size()) - 1; k >= d; --k) {
        if (a[k] == 0) continue;
        mpz_class c = a[k];
        for (int j = 0; j < d; ++j) a[k - d + j] -= c * rp->phi[j];
        a[k] = 0;
    }
    a.resize(d);
}

}  // namespace

const RootParams* make_root_params(int l) {
    if (l < 3 || l % 2 == 0)
        throw ConfigError("l must be odd and >= 3, got " + std::to_string(l));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<RootParams>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(l);
    if (it != cache.end()) return it->second.get();
    auto rp = std::make_unique<RootParams>();
    rp->l = l;
    std::map<int, Poly> memo;
    rp->phi = cyclotomic(l, memo);
    rp->euler_deg = static_cast<int>(rp->phi.size()) - 1;
    rp->half_exp = static_cast<int>(pos_mod((1 - l) / 2, l));
    rp->half_sign = -1;
    for (int k = 0; k < 2 * rp->euler_deg; ++k) {
        Poly row(k + 1);
        row[k] = 1;
        reduce_in_place(rp.get(), row);
        rp->reduce_rows.push_back(row);
    }
    const RootParams* out = rp.get();
    cache[l] = std::move(rp);
    return out;
}

// ---------------------------------------------------------------- CycloScalar

CycloScalar::CycloScalar(const RootParams* rp) : rp_(rp) {
    if (rp_) num_.assign(rp_->euler_deg, 0);
}

CycloScalar::CycloScalar(const RootParams* rp, long c) : CycloScalar(rp, mpz_class(c)) {}

CycloScalar::CycloScalar(const RootParams* rp, const mpz_class& c) : rp_(rp) {
    if (rp_) {
        num_.assign(rp_->euler_deg, 0);
        num_[0] = c;
    } else if (c != 0) {
        num_ = {c};
    }
}

CycloScalar::CycloScalar(const RootParams* rp, std::vector<mpz_class> num, mpz_class den)
    : rp_(rp), num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw ArithmeticError("zero denominator");
    if (rp_) reduce_in_place(rp_, num_);
    normalize();
}

CycloScalar CycloScalar::rational(const RootParams* rp, const mpq_class& r) {
    CycloScalar s(rp, r.get_num());
    s.div_int(r.get_den());
    return s;
}

void CycloScalar::lift(const RootParams* rp) {
    if (rp_ || !rp) return;
    rp_ = rp;
    mpz_class c = num_.empty() ? mpz_class(0) : num_[0];
    num_.assign(rp_->euler_deg, 0);
    num_[0] = c;
}

void CycloScalar::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    mpz_class g = den_;
    bool all_zero = true;
    for (const auto& c : num_) {
        if (c != 0) {
            all_zero = false;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g == 1) break;
        }
    }
    if (all_zero) {
        den_ = 1;
        if (!rp_) num_.clear();
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

bool CycloScalar::is_zero() const {
    for (const auto& c : num_)
        if (c != 0) return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
    for (size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool CycloScalar::is_dyadic() const {
    mpz_class d = den_;
    while (mpz_even_p(d.get_mpz_t())) d /= 2;
    return d == 1;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    lift(o.rp_);
    CycloScalar other = o;
    other.lift(rp_);
    if (!rp_ && num_.empty()) num_ = {0};
    if (!rp_ && other.num_.empty()) other.num_ = {0};
    if (den_ == other.den_) {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] += other.num_[i];
    } else {
        for (size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    const RootParams* rp = a.rp_ ? a.rp_ : b.rp_;
    if (a.is_zero() || b.is_zero()) return CycloScalar(rp);
    if (!a.rp_ && !b.rp_) {
        CycloScalar r;
        r.num_ = {a.num_[0] * b.num_[0]};
        r.den_ = a.den_ * b.den_;
        r.normalize();
        return r;
    }
    if (!a.rp_ || !b.rp_) {
        const CycloScalar& rat = a.rp_ ? b : a;
        CycloScalar r = a.rp_ ? a : b;
        for (auto& c : r.num_) c *= rat.num_[0];
        r.den_ *= rat.den_;
        r.normalize();
        return r;
    }
    const int d = rp->euler_deg;
    Poly prod(2 * d - 1);
    for (int i = 0; i < d; ++i) {
        if (a.num_[i] == 0) continue;
        for (int j = 0; j < d; ++j)
            if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    CycloScalar r(rp);
    for (int k = 0; k < d; ++k) r.num_[k] = prod[k];
    for (int k = d; k < 2 * d - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& row = rp->reduce_rows[k];
        for (int j = 0; j < d; ++j)
            if (row[j] != 0) mpz_addmul(r.num_[j].get_mpz_t(), prod[k].get_mpz_t(), row[j].get_mpz_t());
    }
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) { return *this = *this * o; }

CycloScalar& CycloScalar::add_mul(const CycloScalar& a, const CycloScalar& b) { return *this += a * b; }

CycloScalar& CycloScalar::mul_int(const mpz_class& c) {
    if (c == 0) {
        for (auto& x : num_) x = 0;
        den_ = 1;
        if (!rp_) num_.clear();
        return *this;
    }
    for (auto& x : num_) x *= c;
    normalize();
    return *this;
}

CycloScalar& CycloScalar::div_int(const mpz_class& c) {
    if (c == 0) throw ArithmeticError("division by zero");
    den_ *= c;
    normalize();
    return *this;
}

namespace {

using QPoly = std::vector<mpq_class>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void qdivmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    rem = a;
    qtrim(rem);
    quot.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    const mpq_class lead = b.back();
    while (rem.size() >= b.size()) {
        size_t sh = rem.size() - b.size();
        mpq_class c = rem.back() / lead;
        quot[sh] = c;
        for (size_t j = 0; j < b.size(); ++j) rem[sh + j] -= c * b[j];
        rem.pop_back();
        qtrim(rem);
    }
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
    QPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

}  // namespace

CycloScalar CycloScalar::inv() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    if (!rp_) {
        CycloScalar r;
        r.num_ = {den_};
        r.den_ = num_[0];
        r.normalize();
        return r;
    }
    QPoly r0(rp_->phi.begin(), rp_->phi.end());
    QPoly r1(num_.begin(), num_.end());
    qtrim(r1);
    QPoly s0, s1{1};
    while (r1.size() > 1) {
        QPoly quot, rem;
        qdivmod(r0, r1, quot, rem);
        QPoly s2 = qsub(s0, qmul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw ArithmeticError("element is not invertible mod Phi_l");
    mpq_class c = r1[0];
    mpz_class lcm = 1;
    for (auto& x : s1) {
        x /= c;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<mpz_class> num;
    for (auto& x : s1) num.push_back(x.get_num() * (lcm / x.get_den()));
    // value = num_/den_, so its inverse is den_ * (num_)^{-1}
    for (auto& x : num) x *= den_;
    return CycloScalar(rp_, std::move(num), lcm);
}

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    CycloScalar result(rp_, 1L), base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.den_ != b.den_) return false;
    size_t n = std::max(a.num_.size(), b.num_.size());
    for (size_t i = 0; i < n; ++i) {
        mpz_class x = i < a.num_.size() ? a.num_[i] : mpz_class(0);
        mpz_class y = i < b.num_.size() ? b.num_[i] : mpz_class(0);
        if (x != y) return false;
    }
    return true;
}

std::string CycloScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    int nterms = 0;
    for (size_t i = 0; i < num_.size(); ++i) {
        const mpz_class& c = num_[i];
        if (c == 0) continue;
        ++nterms;
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    if (den_ == 1) return os.str();
    if (nterms == 1) return os.str() + "/" + den_.get_str();
    return "(" + os.str() + ")/" + den_.get_str();
}

long CycloScalar::reduce_mod_p(long p) const {
    mpz_class s = 0;
    for (const auto& c : num_) s += c;
    mpz_class pp = p, d = den_ % pp;
    if (d == 0) throw ArithmeticError("denominator not invertible mod p");
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t());
    mpz_class r = (s * dinv) % pp;
    if (r < 0) r += pp;
    return r.get_si();
}

CycloScalar q_power_half(const RootParams* rp, long e2) {
    const long l = rp->l;
    long k;
    int sign = 1;
    if (e2 % 2 == 0) {
        k = pos_mod(e2 / 2, l);
    } else {
        // (q^{1/2})^{e2} = (-1)^{e2} q^{half_exp * e2}
        k = pos_mod((static_cast<long>(rp->half_exp) % l) * pos_mod(e2, l), l);
        sign = -1;
    }
    std::vector<mpz_class> c(l, 0);
    c[k] = sign;
    return CycloScalar(rp, std::move(c), 1);
}

// ------------------------------------------------------------ Gaussian binomials

namespace {

using Cyc = std::vector<mpz_class>;  // element of Z[v]/(v^l - 1), length l

struct PascalCache {
    std::mutex mu;
    // rows[n][k] = Gaussian binomial in u = v^2, folded mod v^l - 1, k <= n/2 stored
    std::vector<std::vector<Cyc>> rows;
};

PascalCache& pascal_cache(int l) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PascalCache>> caches;
    std::lock_guard<std::mutex> lock(mu);
    auto& p = caches[l];
    if (!p) p = std::make_unique<PascalCache>();
    return *p;
}

const Cyc& pascal_get(const std::vector<std::vector<Cyc>>& rows, long n, long k) {
    if (2 * k > n) k = n - k;
    return rows[n][k];
}

// G_u(n,k) folded; caller holds the lock
Cyc pascal(PascalCache& pc, int l, long n, long k) {
    auto& rows = pc.rows;
    while (static_cast<long>(rows.size()) <= n) {
        long m = static_cast<long>(rows.size());
        std::vector<Cyc> row(m / 2 + 1, Cyc(l, 0));
        row[0][0] = 1;
        for (long j = 1; j <= m / 2; ++j) {
            // G(m,j) = G(m-1,j-1) + u^j G(m-1,j)
            Cyc& out = row[j];
            const Cyc& a = pascal_get(rows, m - 1, j - 1);
            for (int e = 0; e < l; ++e) out[e] += a[e];
            if (j <= m - 1) {
                const Cyc& b = pascal_get(rows, m - 1, j);
                long sh = pos_mod(2 * j, l);
                for (int e = 0; e < l; ++e) out[(e + sh) % l] += b[e];
            }
        }
        rows.push_back(std::move(row));
    }
    return pascal_get(rows, n, k);
}

}  // namespace

CycloScalar gauss_binomial(const RootParams* rp, long n, long k, int d) {
    if (k < 0) return CycloScalar::zero(rp);
    if (n < 0) {
        CycloScalar r = gauss_binomial(rp, k - n - 1, k, d);
        return (k % 2) ? -r : r;
    }
    if (k > n) return CycloScalar::zero(rp);
    const int l = rp->l;
    Cyc g;
    {
        PascalCache& pc = pascal_cache(l);
        std::lock_guard<std::mutex> lock(pc.mu);
        g = pascal(pc, l, n, k);
    }
    // symmetric form: v^{-k(n-k)} G_{v^2}(n,k), then v -> v^d
    long shift = pos_mod(-k * (n - k), l);
    std::vector<mpz_class> c(l, 0);
    for (int e = 0; e < l; ++e) {
        if (g[e] == 0) continue;
        long ex = pos_mod((e + shift) % l * static_cast<long>(d), l);
        c[ex] += g[e];
    }
    return CycloScalar(rp, std::move(c), 1);
}

CycloScalar gauss_binomial_generic(const RootParams* rp, long n, long k, int d) {
    if (k < 0) return CycloScalar::zero(rp);
    // prod_h (v^{m_h} - v^{-m_h}) / prod_h (v^h - v^{-h}), m_h = n-h+1
    // = sign * v^{-sum|m_h| + sum h} * prod(u^{|m_h|} - 1) / prod(u^h - 1), u = v^2
    int sign = 1;
    long vshift = 0;
    Poly num{1}, den{1};
    for (long h = 1; h <= k; ++h) {
        long m = n - h + 1;
        if (m == 0) return CycloScalar::zero(rp);
        if (m < 0) {
            sign = -sign;
            m = -m;
        }
        Poly f(m + 1, 0);
        f[0] = -1;
        f[m] = 1;
        num = poly_mul(num, f);
        Poly g(h + 1, 0);
        g[0] = -1;
        g[h] = 1;
        den = poly_mul(den, g);
        vshift += h - m;
    }
    Poly quo = div_exact_monic(num, den);
    const long l = rp->l;
    std::vector<mpz_class> c(l, 0);
    for (size_t j = 0; j < quo.size(); ++j) {
        if (quo[j] == 0) continue;
        long ex = pos_mod((2 * static_cast<long>(j) + vshift) % l * d, l);
        c[ex] += sign * quo[j];
    }
    return CycloScalar(rp, std::move(c), 1);
}

CycloScalar quantum_int(const RootParams* rp, long n, int d) { return gauss_binomial(rp, n, 1, d); }

// ---------------------------------------------------------------- F_p

ModPScalar::ModPScalar(long value, long p) : v_(pos_mod(value, p)), p_(p) {}

ModPScalar& ModPScalar::operator+=(const ModPScalar& o) {
    if (!p_) p_ = o.p_;
    v_ = pos_mod(v_ + o.v_, p_);
    return *this;
}

ModPScalar& ModPScalar::operator-=(const ModPScalar& o) {
    if (!p_) p_ = o.p_;
    v_ = pos_mod(v_ - o.v_, p_);
    return *this;
}

ModPScalar& ModPScalar::operator*=(const ModPScalar& o) {
    if (!p_) p_ = o.p_;
    v_ = static_cast<long>((static_cast<__int128>(v_) * o.v_) % p_);
    return *this;
}

ModPScalar ModPScalar::inv() const {
    if (v_ == 0) throw ArithmeticError("inverse of zero mod p");
    long a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
        long q = a / m;
        long t = a - q * m;
        a = m;
        m = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return ModPScalar(x0, p_);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ModPScalar binom_mod_p(long n, long k, long p) {
    if (k < 0) return ModPScalar(0, p);
    if (n < 0) {
        ModPScalar r = binom_mod_p(k - n - 1, k, p);
        return (k % 2) ? -r : r;
    }
    long result = 1;
    while (n > 0 || k > 0) {
        long nd = n % p, kd = k % p;
        if (kd > nd) return ModPScalar(0, p);
        mpz_class b = binom_z(nd, kd) % p;
        result = (result * b.get_si()) % p;
        n /= p;
        k /= p;
    }
    return ModPScalar(result, p);
}

}  // namespace qfrob
