#include "blockcensus/field.hpp"

#include <algorithm>
#include <cstddef>

namespace blockcensus {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(u32 p) : p_(p) {
    if (!is_prime(p)) throw InvalidPrimeError("modulus " + std::to_string(p) + " is not prime");
    if (p > (1u << 16)) throw InvalidPrimeError("modulus exceeds 2^16");
}

u32 PrimeField::pow(u32 a, u64 e) const {
    u64 base = a % p_, acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<u32>(acc);
}

u32 PrimeField::inv(u32 a) const {
    if (a % p_ == 0) throw SingularMatrixError("inverse of 0 mod " + std::to_string(p_));
    return pow(a, p_ - 2);
}

Fp::Fp(u32 modulus, u32 v) : p(modulus), value(v) {
    PrimeField f(modulus);  // primality check
    if (v >= modulus) throw InvalidParamsError("value not reduced mod p");
}

u64 multiplicative_order(const PrimeField& f, u32 a) {
    if (a % f.modulus() == 0) throw InvalidParamsError("order of 0 undefined");
    u64 ord = 1;
    u32 x = a % f.modulus();
    while (x != 1) {
        x = f.mul(x, a);
        ++ord;
    }
    return ord;
}

Vec make_vec(u32 p, std::vector<u32> coords) {
    PrimeField f(p);
    if (coords.empty()) throw InvalidParamsError("vector dimension must be >= 1");
    for (u32 c : coords)
        if (c >= p) throw InvalidParamsError("vector coordinate not reduced mod p");
    return Vec{p, std::move(coords)};
}

Vec zero_vec(u32 p, u32 d) { return make_vec(p, std::vector<u32>(d, 0)); }

Mat make_mat(u32 p, u32 n, std::vector<u32> entries) {
    PrimeField f(p);
    if (n == 0) throw InvalidParamsError("matrix dimension must be >= 1");
    if (entries.size() != (std::size_t)n * n) throw InvalidParamsError("entry count != n*n");
    for (u32 e : entries)
        if (e >= p) throw InvalidParamsError("matrix entry not reduced mod p");
    return Mat{p, n, std::move(entries)};
}

Mat identity_mat(u32 p, u32 n) {
    Mat m{p, n, std::vector<u32>((std::size_t)n * n, 0)};
    for (u32 i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool is_identity(const Mat& m) {
    for (u32 i = 0; i < m.n; ++i)
        for (u32 j = 0; j < m.n; ++j)
            if (m.at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.p != y.p || x.n != y.n) throw InvalidParamsError("matrix shape/modulus mismatch");
    Mat r{x.p, x.n, std::vector<u32>((std::size_t)x.n * x.n, 0)};
    for (u32 i = 0; i < x.n; ++i) {
        for (u32 k = 0; k < x.n; ++k) {
            u64 xik = x.at(i, k);
            if (xik == 0) continue;
            for (u32 j = 0; j < x.n; ++j) {
                r.at(i, j) = static_cast<u32>((r.at(i, j) + xik * y.at(k, j)) % x.p);
            }
        }
    }
    return r;
}

Mat mat_pow(const Mat& m, u64 e) {
    Mat acc = identity_mat(m.p, m.n);
    Mat base = m;
    while (e > 0) {
        if (e & 1) acc = mat_mul(acc, base);
        base = mat_mul(base, base);
        e >>= 1;
    }
    return acc;
}

Mat mat_transpose(const Mat& m) {
    Mat r{m.p, m.n, std::vector<u32>((std::size_t)m.n * m.n, 0)};
    for (u32 i = 0; i < m.n; ++i)
        for (u32 j = 0; j < m.n; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Mat mat_inv(const Mat& m) {
    const PrimeField f(m.p);
    const u32 n = m.n;
    Mat a = m;
    Mat inv = identity_mat(m.p, n);
    for (u32 col = 0; col < n; ++col) {
        u32 pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) throw SingularMatrixError("matrix is singular mod " + std::to_string(m.p));
        if (pivot != col) {
            for (u32 j = 0; j < n; ++j) {
                std::swap(a.a[(std::size_t)pivot * n + j], a.a[(std::size_t)col * n + j]);
                std::swap(inv.a[(std::size_t)pivot * n + j], inv.a[(std::size_t)col * n + j]);
            }
        }
        const u32 scale = f.inv(a.at(col, col));
        for (u32 j = 0; j < n; ++j) {
            a.at(col, j) = f.mul(a.at(col, j), scale);
            inv.at(col, j) = f.mul(inv.at(col, j), scale);
        }
        for (u32 r = 0; r < n; ++r) {
            if (r == col || a.at(r, col) == 0) continue;
            const u32 factor = a.at(r, col);
            for (u32 j = 0; j < n; ++j) {
                a.at(r, j) = f.sub(a.at(r, j), f.mul(factor, a.at(col, j)));
                inv.at(r, j) = f.sub(inv.at(r, j), f.mul(factor, inv.at(col, j)));
            }
        }
    }
    return inv;
}

Mat dual_matrix(const Mat& m) { return mat_transpose(mat_inv(m)); }

Vec apply(const Vec& v, const Mat& m) {
    if (v.p != m.p || v.dim() != m.n) throw InvalidParamsError("vector/matrix mismatch");
    Vec r{v.p, std::vector<u32>(v.dim(), 0)};
    for (u32 i = 0; i < m.n; ++i) {
        u64 vi = v.coords[i];
        if (vi == 0) continue;
        for (u32 j = 0; j < m.n; ++j) {
            r.coords[j] = static_cast<u32>((r.coords[j] + vi * m.at(i, j)) % m.p);
        }
    }
    return r;
}

u32 pairing(const Vec& v, const Vec& mu) {
    if (v.p != mu.p || v.dim() != mu.dim()) throw InvalidParamsError("pairing shape mismatch");
    u64 acc = 0;
    for (u32 i = 0; i < v.dim(); ++i) acc += (u64)v.coords[i] * mu.coords[i];
    return static_cast<u32>(acc % v.p);
}

u64 vec_to_index(const Vec& v) {
    u64 idx = 0, base = 1;
    for (u32 i = 0; i < v.dim(); ++i) {
        idx += v.coords[i] * base;
        base *= v.p;
    }
    return idx;
}

Vec vec_from_index(u64 index, u32 p, u32 d) {
    if (index >= pow_u64(p, d)) throw IndexOutOfRangeError("index >= p^d");
    std::vector<u32> coords(d);
    for (u32 i = 0; i < d; ++i) {
        coords[i] = static_cast<u32>(index % p);
        index /= p;
    }
    return Vec{p, std::move(coords)};
}

u64 pow_u64(u64 base, u32 exp) {
    u64 r = 1;
    while (exp--) r *= base;
    return r;
}

namespace {

// dense polynomial helpers over F_p, coefficients low degree first

int poly_deg(const std::vector<u32>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

std::vector<u32> poly_rem(const PrimeField& f, std::vector<u32> a, const std::vector<u32>& b) {
    const int db = poly_deg(b);
    const u32 lead_inv = f.inv(b[db]);
    for (int i = poly_deg(a); i >= db; i = poly_deg(a)) {
        const u32 c = f.mul(a[i], lead_inv);
        for (int j = 0; j <= db; ++j) {
            a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
        }
    }
    a.resize(std::max(poly_deg(a) + 1, 1));
    return a;
}

std::vector<u32> poly_mulmod(const PrimeField& f, const std::vector<u32>& a,
                             const std::vector<u32>& b, const std::vector<u32>& mod) {
    std::vector<u32> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<u32>((prod[i + j] + (u64)a[i] * b[j]) % f.modulus());
        }
    }
    return poly_rem(f, std::move(prod), mod);
}

std::vector<u32> poly_powmod(const PrimeField& f, std::vector<u32> base, u64 e,
                             const std::vector<u32>& mod) {
    std::vector<u32> acc{1};
    base = poly_rem(f, std::move(base), mod);
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(f, acc, base, mod);
        base = poly_mulmod(f, base, base, mod);
        e >>= 1;
    }
    return acc;
}

std::vector<u32> poly_gcd(const PrimeField& f, std::vector<u32> a, std::vector<u32> b) {
    while (poly_deg(b) >= 0) {
        a = poly_rem(f, std::move(a), b);
        std::swap(a, b);
    }
    return a;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

std::vector<u32> fit_coeffs(std::vector<u32> a, u32 k) {
    a.resize(k, 0);
    return a;
}

}  // namespace

std::vector<u32> FieldExt::one() const {
    std::vector<u32> e(k, 0);
    e[0] = 1;
    return e;
}

std::vector<u32> FieldExt::mul(const std::vector<u32>& a, const std::vector<u32>& b) const {
    PrimeField f(p);
    return fit_coeffs(poly_mulmod(f, a, b, modulus_poly), k);
}

std::vector<u32> FieldExt::pow(const std::vector<u32>& a, u64 e) const {
    PrimeField f(p);
    return fit_coeffs(poly_powmod(f, a, e, modulus_poly), k);
}

u64 FieldExt::mult_order(const std::vector<u32>& a) const {
    if (poly_deg(a) < 0) throw InvalidParamsError("order of 0 undefined");
    u64 ord = order() - 1;
    if (pow(a, ord) != one())
        throw InvalidParamsError("element order does not divide p^k - 1");
    for (u64 q : prime_factors(ord)) {
        while (ord % q == 0 && pow(a, ord / q) == one()) ord /= q;
    }
    return ord;
}

Mat FieldExt::multiplication_matrix() const {
    Mat m{p, k, std::vector<u32>((std::size_t)k * k, 0)};
    std::vector<u32> row = primitive_elt;  // x^0 * g
    std::vector<u32> x(k, 0);
    if (k == 1) {
        m.at(0, 0) = primitive_elt[0];
        return m;
    }
    x[1] = 1;
    for (u32 i = 0; i < k; ++i) {
        for (u32 j = 0; j < k; ++j) m.at(i, j) = row[j];
        if (i + 1 < k) row = mul(row, x);
    }
    return m;
}

Mat FieldExt::frobenius_matrix() const {
    if (k == 1) return identity_mat(p, 1);
    Mat m{p, k, std::vector<u32>((std::size_t)k * k, 0)};
    std::vector<u32> x(k, 0);
    x[1] = 1;
    const std::vector<u32> xp = pow(x, p);
    std::vector<u32> row = one();  // (x^0)^p
    for (u32 i = 0; i < k; ++i) {
        for (u32 j = 0; j < k; ++j) m.at(i, j) = row[j];
        if (i + 1 < k) row = mul(row, xp);  // (x^(i+1))^p = (x^p)^(i+1)
    }
    return m;
}

FieldExt ext_field_build(u32 p, u32 k) {
    PrimeField f(p);
    if (k < 1) throw InvalidParamsError("extension degree must be >= 1");

    if (k == 1) {
        // F_p itself; take the smallest generator of the multiplicative group.
        for (u32 g = 2; g < p; ++g) {
            if (multiplicative_order(f, g) == p - 1) {
                return FieldExt{p, 1, {0, 1}, {g}};
            }
        }
        // p == 2: the unit group is trivial
        return FieldExt{p, 1, {0, 1}, {1}};
    }

    const u64 group_order = pow_u64(p, k) - 1;
    // Lexicographic search, low-degree coefficients most significant.
    std::vector<u32> coeffs(k, 0);  // c_0 .. c_{k-1}; leading coefficient fixed to 1
    for (;;) {
        if (coeffs[0] != 0) {  // x must be a unit mod f
            std::vector<u32> mod = coeffs;
            mod.push_back(1);
            FieldExt cand{p, k, mod, {}};
            std::vector<u32> x(k, 0);
            x[1] = 1;
            // order exactly p^k - 1 forces irreducibility: a ring with zero
            // divisors has fewer than p^k - 1 units
            if (cand.pow(x, group_order) == cand.one() && cand.mult_order(x) == group_order) {
                cand.primitive_elt = x;
                return cand;
            }
        }
        u32 i = 0;
        while (i < k && ++coeffs[i] == p) coeffs[i++] = 0;
        if (i == k) break;
    }
    throw InvalidParamsError("no primitive polynomial found");  // unreachable for prime p
}

bool poly_irreducible(u32 p, const std::vector<u32>& poly) {
    PrimeField f(p);
    const int k = poly_deg(poly);
    if (k <= 0) return false;
    if (k == 1) return true;
    // x^(p^k) == x mod f, and gcd(x^(p^(k/r)) - x, f) = 1 for prime r | k
    std::vector<u32> x{0, 1};
    std::vector<u32> xp = x;
    std::vector<std::vector<u32>> powers;  // x^(p^i) for i = 1..k
    for (int i = 1; i <= k; ++i) {
        xp = poly_powmod(f, xp, p, poly);
        powers.push_back(xp);
    }
    auto minus_x = [&](std::vector<u32> a) {
        a.resize(std::max<std::size_t>(a.size(), 2), 0);
        a[1] = f.sub(a[1], 1);
        return a;
    };
    if (poly_deg(minus_x(powers[k - 1])) >= 0) return false;
    for (u64 r : prime_factors(k)) {
        auto g = poly_gcd(f, poly, minus_x(powers[k / r - 1]));
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

}  // namespace blockcensus
