#include "twistsieve/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace twistsieve {

namespace {

int top_bit(const std::vector<std::uint64_t>& w) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i]) return static_cast<int>(i * 64 + 63 - std::countl_zero(w[i]));
    }
    return -1;
}

void trim_words(std::vector<std::uint64_t>& w) {
    while (!w.empty() && w.back() == 0) w.pop_back();
}

// dst ^= src << shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst,
                 const std::vector<std::uint64_t>& src, std::size_t shift) {
    if (src.empty()) return;
    const std::size_t word_shift = shift / 64;
    const unsigned bit_shift = shift % 64;
    const std::size_t need = src.size() + word_shift + 1;
    if (dst.size() < need) dst.resize(need, 0);
    if (bit_shift == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + word_shift] ^= src[i];
    } else {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i + word_shift] ^= (src[i] << bit_shift) | carry;
            carry = src[i] >> (64 - bit_shift);
        }
        dst[src.size() + word_shift] ^= carry;
    }
}

// In-place remainder of w modulo m (m nonzero).
void reduce_words(std::vector<std::uint64_t>& w,
                  const std::vector<std::uint64_t>& m, int deg_m) {
    int deg_w = top_bit(w);
    while (deg_w >= deg_m) {
        xor_shifted(w, m, static_cast<std::size_t>(deg_w - deg_m));
        // The leading bit was cancelled; rescan from the old top downward.
        int i = deg_w / 64;
        if (static_cast<std::size_t>(i) >= w.size()) i = static_cast<int>(w.size()) - 1;
        deg_w = -1;
        for (; i >= 0; --i) {
            if (w[static_cast<std::size_t>(i)]) {
                deg_w = i * 64 + 63 -
                        std::countl_zero(w[static_cast<std::size_t>(i)]);
                break;
            }
        }
    }
    trim_words(w);
}

// Interleave-with-zero of one byte: bit i -> bit 2i.
constexpr std::uint16_t spread_byte(std::uint8_t b) {
    std::uint16_t v = 0;
    for (int i = 0; i < 8; ++i)
        if (b & (1u << i)) v |= static_cast<std::uint16_t>(1u << (2 * i));
    return v;
}

struct SpreadTable {
    std::uint16_t t[256];
    constexpr SpreadTable() : t{} {
        for (int i = 0; i < 256; ++i) t[i] = spread_byte(static_cast<std::uint8_t>(i));
    }
};
constexpr SpreadTable kSpread{};

}  // namespace

BigNat BigNat::from_u64(std::uint64_t v) {
    BigNat b;
    if (v) b.limbs_.push_back(v);
    return b;
}

BigNat BigNat::pow2(std::size_t k) {
    BigNat b;
    b.limbs_.assign(k / 64 + 1, 0);
    b.limbs_[k / 64] = 1ull << (k % 64);
    return b;
}

std::size_t BigNat::bit_length() const {
    const int t = top_bit(limbs_);
    return t < 0 ? 0 : static_cast<std::size_t>(t) + 1;
}

bool BigNat::bit(std::size_t i) const {
    const std::size_t w = i / 64;
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % 64)) & 1u;
}

Gf2Poly Gf2Poly::one() { return from_integer(1); }
Gf2Poly Gf2Poly::x() { return from_integer(2); }

Gf2Poly Gf2Poly::from_integer(std::uint64_t bits) {
    Gf2Poly p;
    if (bits) p.words_.push_back(bits);
    return p;
}

Gf2Poly Gf2Poly::from_coeff_bits(std::span<const std::uint8_t> bits) {
    Gf2Poly p;
    p.words_.assign(bits.size() / 64 + 1, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) p.words_[i / 64] |= 1ull << (i % 64);
    p.trim();
    return p;
}

int Gf2Poly::degree() const { return top_bit(words_); }

bool Gf2Poly::coeff(std::size_t i) const {
    const std::size_t w = i / 64;
    if (w >= words_.size()) return false;
    return (words_[w] >> (i % 64)) & 1u;
}

void Gf2Poly::set_coeff(std::size_t i, bool v) {
    const std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v) {
        words_[w] |= 1ull << (i % 64);
    } else {
        words_[w] &= ~(1ull << (i % 64));
        trim();
    }
}

void Gf2Poly::trim() { trim_words(words_); }

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly res = *this;
    if (res.words_.size() < o.words_.size()) res.words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) res.words_[i] ^= o.words_[i];
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    Gf2Poly res;
    if (is_zero() || o.is_zero()) return res;
    const Gf2Poly& small = degree() <= o.degree() ? *this : o;
    const Gf2Poly& big = degree() <= o.degree() ? o : *this;
    for (std::size_t i = 0; i < small.words_.size(); ++i) {
        std::uint64_t w = small.words_[i];
        while (w) {
            const unsigned b = static_cast<unsigned>(std::countr_zero(w));
            w &= w - 1;
            xor_shifted(res.words_, big.words_, i * 64 + b);
        }
    }
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::square() const {
    Gf2Poly res;
    res.words_.assign(words_.size() * 2, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        const std::uint64_t w = words_[i];
        std::uint64_t lo = 0, hi = 0;
        for (unsigned b = 0; b < 4; ++b)
            lo |= static_cast<std::uint64_t>(kSpread.t[(w >> (8 * b)) & 0xFF]) << (16 * b);
        for (unsigned b = 4; b < 8; ++b)
            hi |= static_cast<std::uint64_t>(kSpread.t[(w >> (8 * b)) & 0xFF]) << (16 * (b - 4));
        res.words_[2 * i] = lo;
        res.words_[2 * i + 1] = hi;
    }
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::operator%(const Gf2Poly& modulus) const {
    if (modulus.is_zero()) throw std::invalid_argument("zero modulus");
    Gf2Poly res = *this;
    reduce_words(res.words_, modulus.words_, modulus.degree());
    return res;
}

Gf2Poly Gf2Poly::shifted_left(std::size_t k) const {
    Gf2Poly res;
    xor_shifted(res.words_, words_, k);
    res.trim();
    return res;
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint8_t> Gf2Poly::to_bytes_le() const {
    const int d = degree();
    if (d < 0) return {};
    const std::size_t nbytes = static_cast<std::size_t>(d) / 8 + 1;
    std::vector<std::uint8_t> out(nbytes, 0);
    for (std::size_t i = 0; i < nbytes; ++i) {
        const std::size_t w = i / 8;
        out[i] = static_cast<std::uint8_t>(words_[w] >> (8 * (i % 8)));
    }
    return out;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<std::size_t>(i))) continue;
        if (!s.empty()) s += " + ";
        if (i == 0)
            s += "1";
        else if (i == 1)
            s += "x";
        else
            s += "x^" + std::to_string(i);
    }
    return s;
}

namespace {

void require_modulus(const Gf2Poly& modulus) {
    if (modulus.is_zero()) throw std::invalid_argument("zero modulus");
    if (modulus.degree() < 1)
        throw std::invalid_argument("modulus degree must be >= 1");
}

}  // namespace

Gf2Poly poly_mul_mod(const Gf2Poly& p, const Gf2Poly& q, const Gf2Poly& modulus) {
    require_modulus(modulus);
    return ((p % modulus) * (q % modulus)) % modulus;
}

Gf2Poly poly_pow_mod(const Gf2Poly& base, const BigNat& exponent,
                     const Gf2Poly& modulus) {
    require_modulus(modulus);
    Gf2Poly result = Gf2Poly::one() % modulus;
    const Gf2Poly b = base % modulus;
    for (std::size_t i = exponent.bit_length(); i-- > 0;) {
        result = result.square() % modulus;
        if (exponent.bit(i)) result = (result * b) % modulus;
    }
    return result;
}

Gf2Poly poly_pow_mod(const Gf2Poly& base, std::uint64_t exponent,
                     const Gf2Poly& modulus) {
    return poly_pow_mod(base, BigNat::from_u64(exponent), modulus);
}

Gf2Poly berlekamp_massey(std::span<const std::uint8_t> bits) {
    if (bits.empty()) throw std::invalid_argument("empty sequence");
    const std::size_t n = bits.size();
    const std::size_t nw = n / 64 + 1;

    // rev holds the processed bits newest-first: bit j == s_{k-j}.
    std::vector<std::uint64_t> rev(nw, 0);
    std::vector<std::uint64_t> c(nw, 0), b(nw, 0);
    c[0] = 1;
    b[0] = 1;
    std::size_t len_c = 1, len_b = 1;  // active word counts
    std::size_t L = 0, m = 1;

    // c ^= b << shift. Bits of b<<shift never exceed position n (the new
    // connection polynomial's degree is bounded by L <= n), so clamping
    // to nw words only skips provably-zero words.
    auto add_b_shifted = [&](std::size_t shift) {
        const std::size_t ws = shift / 64;
        const unsigned bs = shift % 64;
        std::uint64_t cr = 0;
        for (std::size_t i = 0; i < len_b && i + ws < nw; ++i) {
            const std::uint64_t v = bs ? ((b[i] << bs) | cr) : b[i];
            if (bs) cr = b[i] >> (64 - bs);
            c[i + ws] ^= v;
        }
        if (bs && cr && len_b + ws < nw) c[len_b + ws] ^= cr;
        len_c = std::max(len_c, std::min(len_b + ws + 1, nw));
    };

    for (std::size_t k = 0; k < n; ++k) {
        // rev <<= 1; rev[0] = s_k
        std::uint64_t carry = bits[k] ? 1u : 0u;
        const std::size_t active = k / 64 + 1;
        for (std::size_t i = 0; i < active; ++i) {
            const std::uint64_t nc = rev[i] >> 63;
            rev[i] = (rev[i] << 1) | carry;
            carry = nc;
        }
        // discrepancy = parity of <c, rev> over the first L+1 bits
        unsigned d = 0;
        const std::size_t span = std::min(len_c, active);
        for (std::size_t i = 0; i < span; ++i)
            d ^= static_cast<unsigned>(std::popcount(c[i] & rev[i])) & 1u;
        if (d == 0) {
            ++m;
        } else if (2 * L <= k) {
            std::vector<std::uint64_t> t(c.begin(), c.begin() + static_cast<long>(len_c));
            add_b_shifted(m);
            L = k + 1 - L;
            b.assign(nw, 0);
            std::copy(t.begin(), t.end(), b.begin());
            len_b = t.size();
            m = 1;
        } else {
            add_b_shifted(m);
            ++m;
        }
    }

    // Minimal polynomial is the degree-L reciprocal of the connection
    // polynomial: coefficient of x^(L-i) is c_i.
    Gf2Poly min_poly;
    for (std::size_t i = 0; i <= L; ++i) {
        const bool ci = (c[i / 64] >> (i % 64)) & 1u;
        if (ci) min_poly.set_coeff(L - i, true);
    }
    if (min_poly.is_zero()) min_poly = Gf2Poly::one();
    return min_poly;
}

bool is_irreducible(const Gf2Poly& p) {
    const int d = p.degree();
    if (d < 1) throw std::invalid_argument("constant polynomial");
    if (d == 1) return true;

    // Checkpoints where gcd(x^(2^k) - x, p) must be 1: the Rabin
    // conditions k = d/q for primes q | d, plus small k as a cheap
    // small-degree-factor sieve (sound: for irreducible p these gcds are
    // all 1 whenever k < d).
    std::vector<std::size_t> checkpoints;
    {
        const std::size_t cap = std::min<std::size_t>(20, static_cast<std::size_t>(d) - 1);
        for (std::size_t k = 1; k <= cap; ++k) checkpoints.push_back(k);
        int rem = d;
        for (int q = 2; q * q <= rem; ++q) {
            if (rem % q == 0) {
                checkpoints.push_back(static_cast<std::size_t>(d / q));
                while (rem % q == 0) rem /= q;
            }
        }
        if (rem > 1 && rem < d)
            checkpoints.push_back(static_cast<std::size_t>(d / rem));
        std::sort(checkpoints.begin(), checkpoints.end());
        checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()),
                          checkpoints.end());
    }

    const Gf2Poly xp = Gf2Poly::x();
    Gf2Poly u = xp;
    std::size_t next_cp = 0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(d); ++k) {
        u = u.square() % p;
        if (next_cp < checkpoints.size() && checkpoints[next_cp] == k) {
            ++next_cp;
            const Gf2Poly g = Gf2Poly::gcd(u + xp, p);
            if (!(g == Gf2Poly::one())) return false;
        }
    }
    return u == xp;
}

}  // namespace twistsieve
