#include "cyc/gf.hpp"

#include <algorithm>
#include <cassert>

namespace cyc {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::SizeExceeded: return "SizeExceeded";
        case Errc::NotCoprime: return "NotCoprime";
        case Errc::ZeroElement: return "ZeroElement";
        case Errc::OrderUnavailable: return "OrderUnavailable";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroPolyDegree: return "ZeroPolyDegree";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::NotMonic: return "NotMonic";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::TooLarge: return "TooLarge";
        case Errc::NotOddPrime: return "NotOddPrime";
        case Errc::QNotResidue: return "QNotResidue";
        case Errc::NotInLambda: return "NotInLambda";
        case Errc::AssumptionViolated: return "AssumptionViolated";
        case Errc::NoGammaExists: return "NoGammaExists";
        case Errc::NonCoprimeParams: return "NonCoprimeParams";
        case Errc::RootClassViolation: return "RootClassViolation";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::Usage: return "Usage";
    }
    return "UnknownError";
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// ---- polynomial arithmetic over the prime field GF(p), used only for the
// ---- irreducible-modulus search. Coefficients low-to-high, trimmed.

using PPoly = std::vector<std::uint64_t>;

std::uint64_t p_inv(std::uint64_t a, std::uint64_t p) {
    // Fermat; p is prime.
    std::uint64_t r = 1, e = p - 2, base = a % p;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

void p_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly p_mulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // f is monic of degree deg(f)
    std::size_t df = f.size() - 1;
    for (std::size_t i = c.size(); i-- > df;) {
        std::uint64_t t = c[i] % p;
        if (!t) continue;
        for (std::size_t j = 0; j < df; ++j)
            c[i - df + j] = (c[i - df + j] + t * (p - f[j] % p)) % p;
        c[i] = 0;
    }
    c.resize(df);
    p_trim(c);
    return c;
}

PPoly p_powmod(PPoly base, std::uint64_t e, const PPoly& f, std::uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = p_mulmod(r, base, f, p);
        base = p_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

// t^(p^k) mod f by k successive p-th powers
PPoly p_frobenius(PPoly t, unsigned k, const PPoly& f, std::uint64_t p) {
    for (unsigned i = 0; i < k; ++i) t = p_powmod(t, p, f, p);
    return t;
}

PPoly p_gcd(PPoly a, PPoly b, std::uint64_t p) {
    p_trim(a);
    p_trim(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t lead_inv = p_inv(b.back(), p);
        while (a.size() >= b.size()) {
            std::uint64_t t = a.back() * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = (a[shift + j] + t * (p - b[j])) % p;
            p_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool p_is_irreducible(const PPoly& f, std::uint64_t p) {
    unsigned m = static_cast<unsigned>(f.size() - 1);
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    PPoly x{0, 1};
    // x^(p^m) == x mod f
    PPoly xm = p_frobenius(x, m, f, p);
    if (xm != x) return false;
    for (std::uint64_t ell : prime_factors(m)) {
        PPoly h = p_frobenius(x, static_cast<unsigned>(m / ell), f, p);
        // gcd(h - x, f) must be 1
        PPoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        p_trim(diff);
        PPoly g = p_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldPtr Field::make(std::uint64_t p, unsigned m, std::uint64_t ceiling) {
    if (!is_prime(p))
        throw Error(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
    if (m < 1) throw Error(Errc::SizeExceeded, "extension degree must be >= 1");
    // overflow-safe p^m
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > ceiling / p)
            throw Error(Errc::SizeExceeded, "p^m exceeds ceiling");
        q *= p;
    }
    if (q > ceiling) throw Error(Errc::SizeExceeded, "p^m exceeds ceiling");

    auto field = std::shared_ptr<Field>(new Field());
    field->p_ = p;
    field->m_ = m;
    field->q_ = q;

    if (m == 1) {
        field->modulus_ = {0, 1};  // x
    } else {
        // Lexicographically smallest irreducible, coefficients read
        // low-to-high, so c0 is the most significant digit of the scan.
        std::uint64_t count = q;  // p^m candidate lower parts
        bool found = false;
        // c0 = 0 would be divisible by x, so start the scan at the c0 = 1
        // block (c0 is the most significant digit of the code)
        for (std::uint64_t code = q / p; code < count && !found; ++code) {
            PPoly f(m + 1, 0);
            f[m] = 1;
            std::uint64_t c = code;
            for (unsigned i = m; i-- > 0;) {  // low digits peel off last
                f[i] = c % p;
                c /= p;
            }
            // decoded so that f[0] is the most significant digit of `code`
            if (p_is_irreducible(f, p)) {
                field->modulus_ = f;
                found = true;
            }
        }
        if (!found)
            throw Error(Errc::OrderUnavailable, "no irreducible found");  // unreachable
    }

    field->order_factors_ = prime_factors(q - 1);

    if (q <= kTableLimit && q > 2) {
        // find the smallest-rep primitive element with raw arithmetic
        std::uint64_t gen = 0;
        for (std::uint64_t g = 2; g < q; ++g) {
            bool primitive = true;
            for (std::uint64_t f : field->order_factors_) {
                // pow via mul_raw
                std::uint64_t r = 1, base = g, e = (q - 1) / f;
                while (e) {
                    if (e & 1) r = field->mul_raw(r, base);
                    base = field->mul_raw(base, base);
                    e >>= 1;
                }
                if (r == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen = g;
                break;
            }
        }
        field->generator_ = gen;
        field->exp_.resize(q - 1);
        field->log_.resize(q);
        std::uint64_t acc = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            field->exp_[i] = static_cast<std::uint32_t>(acc);
            field->log_[acc] = static_cast<std::uint32_t>(i);
            acc = field->mul_raw(acc, gen);
        }
        field->has_tables_ = true;
    } else if (q == 2) {
        field->generator_ = 1;
    }
    return field;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t out = 0, mult = 1;
    while (a || b) {
        std::uint64_t d = (a % p_ + b % p_) % p_;
        out += d * mult;
        mult *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

std::uint64_t Field::neg(std::uint64_t a) const {
    if (p_ == 2) return a;
    std::uint64_t out = 0, mult = 1;
    while (a) {
        std::uint64_t d = a % p_;
        out += (d ? p_ - d : 0) * mult;
        mult *= p_;
        a /= p_;
    }
    return out;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul_raw(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (p_ == 2) {
        // carryless multiply then reduce by the modulus bit pattern
        unsigned __int128 acc = 0;
        std::uint64_t bb = b;
        unsigned shift = 0;
        while (bb) {
            if (bb & 1) acc ^= static_cast<unsigned __int128>(a) << shift;
            bb >>= 1;
            ++shift;
        }
        std::uint64_t mod_bits = 0;
        for (unsigned i = 0; i <= m_; ++i)
            if (modulus_[i]) mod_bits |= std::uint64_t{1} << i;
        for (int bit = 2 * static_cast<int>(m_) - 2; bit >= static_cast<int>(m_); --bit) {
            if ((acc >> bit) & 1)
                acc ^= static_cast<unsigned __int128>(mod_bits) << (bit - m_);
        }
        return static_cast<std::uint64_t>(acc);
    }
    // general characteristic: digit convolution, then monic reduction
    std::uint64_t da[64], db[64];
    unsigned la = 0, lb = 0;
    for (std::uint64_t t = a; t; t /= p_) da[la++] = t % p_;
    for (std::uint64_t t = b; t; t /= p_) db[lb++] = t % p_;
    std::uint64_t buf[128] = {0};
    for (unsigned i = 0; i < la; ++i)
        for (unsigned j = 0; j < lb; ++j) buf[i + j] += da[i] * db[j];
    unsigned len = la + lb - 1;
    for (unsigned i = 0; i < len; ++i) buf[i] %= p_;
    for (unsigned i = len; i-- > m_;) {
        std::uint64_t t = buf[i];
        if (!t) continue;
        for (unsigned j = 0; j < m_; ++j)
            buf[i - m_ + j] = (buf[i - m_ + j] + t * (p_ - modulus_[j])) % p_;
        buf[i] = 0;
    }
    std::uint64_t out = 0;
    for (unsigned i = std::min(len, m_); i-- > 0;) out = out * p_ + buf[i];
    return out;
}

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_)
        return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
    return mul_raw(a, b);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables_) {
        std::uint64_t le = (static_cast<unsigned __int128>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
        return exp_[le];
    }
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "inverse of zero");
    if (has_tables_) {
        std::uint64_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }
    return pow(a, q_ - 2);
}

std::uint64_t Field::generator() const {
    if (generator_) return generator_;
    for (std::uint64_t g = 2; g < q_; ++g) {
        bool primitive = true;
        for (std::uint64_t f : order_factors_) {
            if (pow(g, (q_ - 1) / f) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            generator_ = g;
            return g;
        }
    }
    throw Error(Errc::OrderUnavailable, "no primitive element");  // unreachable
}

std::uint64_t Field::element_order(std::uint64_t a) const {
    if (a == 0) throw Error(Errc::ZeroElement, "order of zero");
    std::uint64_t t = q_ - 1;
    for (std::uint64_t f : order_factors_) {
        while (t % f == 0 && pow(a, t / f) == 1) t /= f;
    }
    return t;
}

bool Field::in_subfield(std::uint64_t a, unsigned sub_m) const {
    std::uint64_t sq = 1;
    for (unsigned i = 0; i < sub_m; ++i) sq *= p_;
    return pow(a, sq) == a;
}

std::uint64_t min_extension_degree(std::uint64_t q, std::uint64_t N) {
    if (N == 0 || gcd_u64(q, N) != 1)
        throw Error(Errc::NotCoprime, "gcd(N, q) != 1");
    if (N == 1) return 1;
    std::uint64_t acc = q % N, e = 1;
    while (acc != 1) {
        acc = acc * q % N;
        ++e;
        if (e > N) throw Error(Errc::NotCoprime, "q has no order mod N");
    }
    return e;
}

std::uint64_t primitive_root_of_unity(const Field& ext, std::uint64_t N) {
    if (N == 0 || (ext.q() - 1) % N != 0)
        throw Error(Errc::OrderUnavailable,
                    "N = " + std::to_string(N) + " does not divide q-1");
    return ext.pow(ext.generator(), (ext.q() - 1) / N);
}

Embedding::Embedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
    if (base_->p() != ext_->p() || ext_->m() % base_->m() != 0)
        throw Error(Errc::FieldMismatch, "no embedding: base field does not divide extension");
    if (base_->q() > Field::kTableLimit)
        throw Error(Errc::SizeExceeded, "embedding table only built for small base fields");

    const std::uint64_t q = base_->q();
    table_.resize(q);
    if (base_->same(*ext_)) {
        root_ = base_->m() == 1 ? 1 : base_->p();
        for (std::uint64_t a = 0; a < q; ++a) table_[a] = a;
    } else if (base_->m() == 1) {
        // prime subfield: constants map to constants
        root_ = 1;
        for (std::uint64_t a = 0; a < q; ++a) table_[a] = a;
    } else {
        // the embedded copy of GF(q)^* is the unique cyclic subgroup of
        // order q-1; find the smallest-rep root of the base modulus there
        const std::uint64_t step = (ext_->q() - 1) / (q - 1);
        const std::uint64_t sub_gen = ext_->pow(ext_->generator(), step);
        std::uint64_t best = 0;
        bool have = false;
        std::uint64_t cand = 1;
        const auto& f = base_->modulus();
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            // Horner evaluation of the base modulus at cand, in ext
            std::uint64_t v = 0;
            for (std::size_t j = f.size(); j-- > 0;)
                v = ext_->add(ext_->mul(v, cand), ext_->from_int(f[j]));
            if (v == 0 && (!have || cand < best)) {
                best = cand;
                have = true;
            }
            cand = ext_->mul(cand, sub_gen);
        }
        if (!have) throw Error(Errc::OrderUnavailable, "base modulus has no root in extension");
        root_ = best;
        for (std::uint64_t a = 0; a < q; ++a) {
            // digits of a in base p are the polynomial-basis coordinates
            std::uint64_t v = 0, t = a;
            std::uint64_t rp = 1;
            while (t) {
                v = ext_->add(v, ext_->mul(ext_->from_int(t % base_->p()), rp));
                rp = ext_->mul(rp, root_);
                t /= base_->p();
            }
            table_[a] = v;
        }
    }
    for (std::uint64_t a = 0; a < q; ++a) reverse_.emplace(table_[a], a);
}

std::optional<std::uint64_t> Embedding::descend(std::uint64_t ext_rep) const {
    auto it = reverse_.find(ext_rep);
    if (it == reverse_.end()) return std::nullopt;
    return it->second;
}

}  // namespace cyc
