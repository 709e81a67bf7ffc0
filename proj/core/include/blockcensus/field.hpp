#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "blockcensus/errors.hpp"

namespace blockcensus {

using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Trial-division primality test. Intended for moduli up to 2^16 and similar
/// small inputs; not a general-purpose test.
bool is_prime(u64 n);

/// Context for arithmetic in the prime field with p elements. Construction
/// checks primality once, after which all operations are branch-light.
/// Moduli are limited to 2^16 so products fit comfortably in 64 bits.
class PrimeField {
public:
    explicit PrimeField(u32 p);

    u32 modulus() const { return p_; }

    u32 reduce(u64 x) const { return static_cast<u32>(x % p_); }
    u32 add(u32 a, u32 b) const { u32 s = a + b; return s >= p_ ? s - p_ : s; }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p_ - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p_ - a; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>((u64)a * b % p_); }
    u32 pow(u32 a, u64 e) const;
    u32 inv(u32 a) const;  // throws SingularMatrixError on a == 0

private:
    u32 p_;
};

/// A single checked element of F_p. Most of the library works on raw u32
/// entries with the modulus carried by the containing Vec/Mat; this type is
/// for the places where a standalone scalar matters.
struct Fp {
    u32 p = 0;
    u32 value = 0;

    Fp() = default;
    Fp(u32 modulus, u32 v);

    friend bool operator==(const Fp&, const Fp&) = default;
};

u64 multiplicative_order(const PrimeField& f, u32 a);

/// Row vector over F_p.
struct Vec {
    u32 p = 0;
    std::vector<u32> coords;

    u32 dim() const { return static_cast<u32>(coords.size()); }
    friend bool operator==(const Vec&, const Vec&) = default;
    friend auto operator<=>(const Vec& a, const Vec& b) {
        return a.coords <=> b.coords;  // coordinate 0 most significant
    }
};

Vec make_vec(u32 p, std::vector<u32> coords);
Vec zero_vec(u32 p, u32 d);

/// Square matrix over F_p, row-major. Vectors act on the right: v -> v * M,
/// so row i of M is the image of the i-th basis vector.
struct Mat {
    u32 p = 0;
    u32 n = 0;
    std::vector<u32> a;  // n*n entries in [0, p)

    u32& at(u32 r, u32 c) { return a[(std::size_t)r * n + c]; }
    u32 at(u32 r, u32 c) const { return a[(std::size_t)r * n + c]; }

    friend bool operator==(const Mat&, const Mat&) = default;
    friend auto operator<=>(const Mat& x, const Mat& y) { return x.a <=> y.a; }
};

Mat make_mat(u32 p, u32 n, std::vector<u32> entries);
Mat identity_mat(u32 p, u32 n);
bool is_identity(const Mat& m);

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_pow(const Mat& m, u64 e);
Mat mat_transpose(const Mat& m);

/// Inverse by Gauss-Jordan elimination over F_p.
/// Throws SingularMatrixError when det = 0.
Mat mat_inv(const Mat& m);

/// The matrix acting on linear characters identified with row vectors:
/// transpose of the inverse. Satisfies dual_matrix(a*b) =
/// dual_matrix(a)*dual_matrix(b) and preserves the pairing
/// <v*g, mu*dual_matrix(g)> = <v, mu>.
Mat dual_matrix(const Mat& m);

Vec apply(const Vec& v, const Mat& m);
u32 pairing(const Vec& v, const Vec& mu);  // sum v_i * mu_i mod p

/// Little-endian base-p encoding of vectors: index = sum v_i * p^i.
u64 vec_to_index(const Vec& v);
/// Inverse of vec_to_index. Throws IndexOutOfRangeError for index >= p^d.
Vec vec_from_index(u64 index, u32 p, u32 d);

u64 pow_u64(u64 base, u32 exp);  // unchecked small power

/// The field F_{p^k} presented as F_p[x]/(f) with a distinguished generator
/// of the multiplicative group. Field elements are coefficient vectors of
/// length k, low degree first.
///
/// The modulus is selected deterministically: the lexicographically smallest
/// monic degree-k polynomial (coefficients compared low-degree-first) whose
/// residue class of x has multiplicative order exactly p^k - 1. Such a
/// modulus is automatically irreducible. For k = 1 the modulus is x and the
/// primitive element is the smallest generator of F_p^x.
struct FieldExt {
    u32 p = 0;
    u32 k = 0;
    std::vector<u32> modulus_poly;   // k+1 coefficients, low degree first, monic
    std::vector<u32> primitive_elt;  // k coefficients

    u64 order() const { return pow_u64(p, k); }

    std::vector<u32> one() const;
    std::vector<u32> mul(const std::vector<u32>& a, const std::vector<u32>& b) const;
    std::vector<u32> pow(const std::vector<u32>& a, u64 e) const;
    u64 mult_order(const std::vector<u32>& a) const;

    /// Right-action matrix of multiplication by the primitive element in the
    /// basis 1, x, ..., x^(k-1).
    Mat multiplication_matrix() const;
    /// Right-action matrix of the Frobenius a -> a^p (identity when k = 1).
    Mat frobenius_matrix() const;

    friend bool operator==(const FieldExt&, const FieldExt&) = default;
};

FieldExt ext_field_build(u32 p, u32 k);

/// Exact irreducibility test over F_p (used to cross-check the builder).
bool poly_irreducible(u32 p, const std::vector<u32>& poly);

}  // namespace blockcensus
