#include "cyc/codes.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cyc {

std::uint64_t pow_saturating(std::uint64_t q, std::uint64_t k) {
    const std::uint64_t cap = std::uint64_t{1} << 63;
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (r > cap / q) return cap;
        r *= q;
    }
    return r;
}

CyclicCode make_cyclic(FieldPtr field, std::uint64_t N, Poly g) {
    if (g.is_zero() || !g.is_monic())
        throw Error(Errc::NotMonic, "generator must be monic and nonzero");
    if (!field->same(*g.field()))
        throw Error(Errc::FieldMismatch, "generator over a different field");
    if (g.degree() >= N)
        throw Error(Errc::AssumptionViolated, "generator degree >= N (dimension would be 0)");
    if (!divides(g, Poly::xn_minus_1(field, N)))
        throw Error(Errc::NotADivisor, "generator does not divide x^N - 1");
    std::uint64_t k = N - g.degree();
    return CyclicCode{std::move(field), N, std::move(g), k};
}

Poly encode(const CyclicCode& code, std::span<const std::uint64_t> message) {
    if (message.size() != code.k)
        throw Error(Errc::LengthMismatch, "message length != k");
    Poly m(code.field, std::vector<std::uint64_t>(message.begin(), message.end()));
    return mod_xn_minus_1(m * code.g, code.N);
}

std::vector<std::vector<std::uint64_t>> generator_matrix(const CyclicCode& code) {
    std::vector<std::vector<std::uint64_t>> rows(code.k,
                                                 std::vector<std::uint64_t>(code.N, 0));
    const auto& gc = code.g.coeffs();
    for (std::uint64_t i = 0; i < code.k; ++i)
        for (std::size_t j = 0; j < gc.size(); ++j) rows[i][i + j] = gc[j];
    return rows;
}

namespace {

// ---------- shared helpers ----------

std::uint64_t binom_saturating(std::uint64_t n, std::uint64_t w) {
    const std::uint64_t cap = std::uint64_t{1} << 62;
    if (w > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= w; ++i) {
        if (r > cap / (n - w + i)) return cap;
        r = r * (n - w + i) / i;
    }
    return r;
}

Poly row_to_poly(const FieldPtr& f, const std::vector<std::uint64_t>& row) {
    return Poly(f, row);
}

std::size_t row_weight(const std::vector<std::uint64_t>& row) {
    return static_cast<std::size_t>(
        std::count_if(row.begin(), row.end(), [](std::uint64_t c) { return c != 0; }));
}

// ---------- GF(2) packed representation ----------

struct PackedRows {
    std::size_t n = 0;
    std::size_t words = 0;
    std::vector<std::vector<std::uint64_t>> rows;

    static PackedRows from(const std::vector<std::vector<std::uint64_t>>& G) {
        PackedRows pr;
        pr.n = G.empty() ? 0 : G[0].size();
        pr.words = (pr.n + 63) / 64;
        pr.rows.reserve(G.size());
        for (const auto& r : G) {
            std::vector<std::uint64_t> w(pr.words, 0);
            for (std::size_t c = 0; c < r.size(); ++c)
                if (r[c]) w[c / 64] |= std::uint64_t{1} << (c % 64);
            pr.rows.push_back(std::move(w));
        }
        return pr;
    }
};

std::size_t packed_weight(const std::vector<std::uint64_t>& w) {
    std::size_t s = 0;
    for (std::uint64_t x : w) s += static_cast<std::size_t>(std::popcount(x));
    return s;
}

std::vector<std::uint64_t> unpack(const std::vector<std::uint64_t>& w, std::size_t n) {
    std::vector<std::uint64_t> out(n, 0);
    for (std::size_t c = 0; c < n; ++c)
        if ((w[c / 64] >> (c % 64)) & 1) out[c] = 1;
    return out;
}

// ---------- exhaustive engines ----------

struct Best {
    std::size_t weight = static_cast<std::size_t>(-1);
    std::vector<std::uint64_t> codeword;  // unpacked reps
};

// Gray-code walk over all nonzero messages of a packed binary matrix.
void exhaust_gf2(const PackedRows& pr, std::uint64_t budget, Best& best,
                 std::vector<std::uint64_t>* dist, std::uint64_t& enumerated,
                 bool& complete) {
    const std::size_t k = pr.rows.size();
    const std::uint64_t total = std::uint64_t{1} << k;
    std::vector<std::uint64_t> cur(pr.words, 0);
    std::uint64_t prev_gray = 0;
    complete = true;
    for (std::uint64_t msg = 1; msg < total; ++msg) {
        if (enumerated >= budget) {
            complete = false;
            return;
        }
        std::uint64_t gray = msg ^ (msg >> 1);
        std::uint64_t flipped = gray ^ prev_gray;
        prev_gray = gray;
        const auto& row = pr.rows[std::countr_zero(flipped)];
        for (std::size_t i = 0; i < pr.words; ++i) cur[i] ^= row[i];
        ++enumerated;
        std::size_t wt = packed_weight(cur);
        if (dist) ++(*dist)[wt];
        if (wt < best.weight) {
            best.weight = wt;
            best.codeword = unpack(cur, pr.n);
        }
    }
}

// Depth-first walk over all q^k messages, sharing partial row sums.
struct GenericExhaust {
    const Field& f;
    const std::vector<std::vector<std::uint64_t>>& rows;
    std::uint64_t budget;
    Best& best;
    std::vector<std::uint64_t>* dist;
    std::uint64_t& enumerated;
    bool complete = true;
    std::vector<std::vector<std::uint64_t>> stack;  // partial sums per depth

    void run() {
        stack.assign(rows.size() + 1,
                     std::vector<std::uint64_t>(rows.empty() ? 0 : rows[0].size(), 0));
        walk(0, false);
    }

    void walk(std::size_t depth, bool nonzero) {
        if (!complete) return;
        if (depth == rows.size()) {
            if (!nonzero) return;
            if (enumerated >= budget) {
                complete = false;
                return;
            }
            ++enumerated;
            const auto& cw = stack[depth];
            std::size_t wt = row_weight(cw);
            if (dist) ++(*dist)[wt];
            if (wt < best.weight) {
                best.weight = wt;
                best.codeword = cw;
            }
            return;
        }
        const auto& row = rows[depth];
        for (std::uint64_t v = 0; v < f.q(); ++v) {
            auto& next = stack[depth + 1];
            if (v == 0) {
                next = stack[depth];
            } else {
                const auto& prev = stack[depth];
                for (std::size_t c = 0; c < row.size(); ++c)
                    next[c] = f.add(prev[c], f.mul(v, row[c]));
            }
            walk(depth + 1, nonzero || v != 0);
            if (!complete) return;
        }
    }
};

// ---------- information-set (Brouwer-Zimmermann) engine ----------

struct SysMatrix {
    std::vector<std::vector<std::uint64_t>> rows;  // k x N, reduced
    std::size_t delta = 0;                         // pivots reused from earlier sets
};

std::vector<SysMatrix> build_info_sets(std::vector<std::vector<std::uint64_t>> G,
                                       const Field& f) {
    const std::size_t k = G.size(), N = G[0].size();
    std::vector<bool> used(N, false);
    std::vector<SysMatrix> out;
    while (true) {
        auto M = G;
        std::vector<std::size_t> order;
        order.reserve(N);
        for (std::size_t c = 0; c < N; ++c)
            if (!used[c]) order.push_back(c);
        const std::size_t fresh_limit = order.size();
        for (std::size_t c = 0; c < N; ++c)
            if (used[c]) order.push_back(c);

        std::size_t row = 0;
        std::vector<std::size_t> fresh_pivots;
        for (std::size_t oi = 0; oi < order.size() && row < k; ++oi) {
            const std::size_t c = order[oi];
            std::size_t pr = row;
            while (pr < k && M[pr][c] == 0) ++pr;
            if (pr == k) continue;
            std::swap(M[row], M[pr]);
            const std::uint64_t inv = f.inv(M[row][c]);
            if (inv != 1)
                for (auto& x : M[row]) x = f.mul(x, inv);
            for (std::size_t r = 0; r < k; ++r) {
                if (r == row || M[r][c] == 0) continue;
                const std::uint64_t t = M[r][c];
                for (std::size_t cc = 0; cc < N; ++cc)
                    M[r][cc] = f.sub(M[r][cc], f.mul(t, M[row][cc]));
            }
            if (oi < fresh_limit) fresh_pivots.push_back(c);
            ++row;
        }
        if (fresh_pivots.empty()) break;
        for (std::size_t c : fresh_pivots) used[c] = true;
        out.push_back(SysMatrix{std::move(M), k - fresh_pivots.size()});
    }
    return out;
}

// all weight-w combinations with first coefficient normalized to 1
struct GenericCombEnum {
    const Field& f;
    const std::vector<std::vector<std::uint64_t>>& rows;
    std::size_t w;
    Best& best;
    std::vector<std::vector<std::uint64_t>> stack;

    void run() {
        stack.assign(w + 1, std::vector<std::uint64_t>(rows[0].size(), 0));
        recurse(0, 0);
    }

    void recurse(std::size_t start, std::size_t depth) {
        if (depth == w) {
            const auto& cw = stack[depth];
            std::size_t wt = row_weight(cw);
            if (wt < best.weight && wt > 0) {
                best.weight = wt;
                best.codeword = cw;
            }
            return;
        }
        for (std::size_t i = start; i + (w - depth) <= rows.size(); ++i) {
            const auto& row = rows[i];
            const std::uint64_t vmax = depth == 0 ? 1 : f.q() - 1;
            for (std::uint64_t v = 1; v <= vmax; ++v) {
                auto& next = stack[depth + 1];
                const auto& prev = stack[depth];
                for (std::size_t c = 0; c < row.size(); ++c)
                    next[c] = f.add(prev[c], f.mul(v, row[c]));
                recurse(i + 1, depth + 1);
            }
        }
    }
};

struct PackedCombEnum {
    const PackedRows& pr;
    std::size_t w;
    Best& best;
    std::vector<std::vector<std::uint64_t>> stack;

    void run() {
        stack.assign(w + 1, std::vector<std::uint64_t>(pr.words, 0));
        recurse(0, 0);
    }

    void recurse(std::size_t start, std::size_t depth) {
        if (depth == w) {
            std::size_t wt = packed_weight(stack[depth]);
            if (wt < best.weight && wt > 0) {
                best.weight = wt;
                best.codeword = unpack(stack[depth], pr.n);
            }
            return;
        }
        for (std::size_t i = start; i + (w - depth) <= pr.rows.size(); ++i) {
            auto& next = stack[depth + 1];
            const auto& prev = stack[depth];
            const auto& row = pr.rows[i];
            for (std::size_t c = 0; c < pr.words; ++c) next[c] = prev[c] ^ row[c];
            recurse(i + 1, depth + 1);
        }
    }
};

WeightReport run_infoset(const CyclicCode& code, const MinDistOptions& opts) {
    const Field& f = *code.field;
    auto G = generator_matrix(code);
    auto sets = build_info_sets(G, f);
    const std::size_t k = code.k;
    const bool binary = f.q() == 2;

    std::vector<PackedRows> packed;
    if (binary)
        for (const auto& s : sets) packed.push_back(PackedRows::from(s.rows));

    Best best;
    best.weight = code.g.weight();
    best.codeword = G[0];  // g itself is a codeword

    std::uint64_t enumerated = 0;
    std::uint64_t lower = 0;
    bool budget_hit = false;

    for (std::size_t w = 1; w <= k; ++w) {
        for (std::size_t mi = 0; mi < sets.size(); ++mi) {
            std::uint64_t block = binom_saturating(k, w);
            if (f.q() > 2) {
                for (std::size_t i = 1; i < w; ++i) {
                    const std::uint64_t cap = std::uint64_t{1} << 62;
                    block = block > cap / (f.q() - 1) ? cap : block * (f.q() - 1);
                }
            }
            if (enumerated + block > opts.budget) {
                budget_hit = true;
                break;
            }
            if (binary) {
                PackedCombEnum e{packed[mi], w, best};
                e.run();
            } else {
                GenericCombEnum e{f, sets[mi].rows, w, best};
                e.run();
            }
            enumerated += block;
        }
        if (budget_hit) break;
        std::uint64_t lb = 0;
        for (const auto& s : sets)
            lb += (w + 1 > s.delta) ? (w + 1 - s.delta) : 0;
        lower = std::min<std::uint64_t>(lb, best.weight);
        if (lb >= best.weight) break;
        if (w == k) {
            lower = best.weight;  // full enumeration of every message
            break;
        }
    }

    WeightReport rep;
    rep.method = DistMethod::InfoSet;
    rep.d = best.weight;
    rep.certificate = row_to_poly(code.field, best.codeword);
    rep.lower_bound = budget_hit ? std::max<std::uint64_t>(lower, 1) : lower;
    rep.exact = !budget_hit && rep.lower_bound >= rep.d;
    rep.enumerated = enumerated;
    return rep;
}

WeightReport run_exhaustive(const CyclicCode& code, const MinDistOptions& opts) {
    const Field& f = *code.field;
    auto G = generator_matrix(code);
    Best best;
    std::uint64_t enumerated = 0;
    bool complete = false;
    if (f.q() == 2) {
        auto pr = PackedRows::from(G);
        exhaust_gf2(pr, opts.budget, best, nullptr, enumerated, complete);
    } else {
        GenericExhaust e{f, G, opts.budget, best, nullptr, enumerated};
        e.run();
        complete = e.complete;
    }
    WeightReport rep;
    rep.method = DistMethod::Exhaustive;
    rep.d = best.weight;
    rep.certificate = row_to_poly(code.field, best.codeword);
    rep.lower_bound = complete ? rep.d : 1;
    rep.exact = complete;
    rep.enumerated = enumerated;
    return rep;
}

}  // namespace

WeightReport min_distance(const CyclicCode& code, const MinDistOptions& opts) {
    DistMethod method = opts.method;
    if (method == DistMethod::Auto) {
        method = pow_saturating(code.field->q(), code.k) <= (std::uint64_t{1} << 24)
                     ? DistMethod::Exhaustive
                     : DistMethod::InfoSet;
    }
    return method == DistMethod::Exhaustive ? run_exhaustive(code, opts)
                                            : run_infoset(code, opts);
}

std::vector<std::uint64_t> weight_distribution(const CyclicCode& code) {
    const Field& f = *code.field;
    if (pow_saturating(f.q(), code.k) > (std::uint64_t{1} << 24))
        throw Error(Errc::TooLarge, "q^k > 2^24");
    auto G = generator_matrix(code);
    std::vector<std::uint64_t> dist(code.N + 1, 0);
    dist[0] = 1;  // the zero codeword
    Best best;
    std::uint64_t enumerated = 0;
    bool complete = false;
    if (f.q() == 2) {
        auto pr = PackedRows::from(G);
        exhaust_gf2(pr, UINT64_MAX, best, &dist, enumerated, complete);
    } else {
        GenericExhaust e{f, G, UINT64_MAX, best, &dist, enumerated};
        e.run();
    }
    return dist;
}

std::vector<std::uint64_t> generator_root_exponents(const CyclicCode& code) {
    auto part = cyclotomic_cosets(code.field->q(), code.N);
    auto factors = factor_xN_minus_1(code.field, code.N);
    std::vector<std::uint64_t> exponents;
    for (std::size_t c = 0; c < factors.size(); ++c)
        if (divides(factors[c], code.g))
            exponents.insert(exponents.end(), part.cosets[c].begin(), part.cosets[c].end());
    std::sort(exponents.begin(), exponents.end());
    return exponents;
}

CyclicCode multiplier_image(const CyclicCode& code, std::uint64_t u) {
    const std::uint64_t N = code.N;
    if (gcd_u64(u % N, N) != 1) throw Error(Errc::NotCoprime, "gcd(u, N) != 1");
    auto part = cyclotomic_cosets(code.field->q(), N);
    auto factors = factor_xN_minus_1(code.field, N);
    std::unordered_map<std::uint64_t, std::size_t> coset_of;
    for (std::size_t c = 0; c < part.cosets.size(); ++c)
        for (std::uint64_t i : part.cosets[c]) coset_of[i] = c;
    Poly g_new = Poly::one(code.field);
    for (std::size_t c = 0; c < factors.size(); ++c) {
        if (!divides(factors[c], code.g)) continue;
        std::size_t image = coset_of.at(part.cosets[c][0] * (u % N) % N);
        g_new = g_new * factors[image];
    }
    return make_cyclic(code.field, N, std::move(g_new));
}

ExtendedCode extend_self_dual(const CyclicCode& code, std::uint64_t n1, std::uint64_t n2) {
    const Field& f = *code.field;
    if (code.N != n1 * n2)
        throw Error(Errc::AssumptionViolated, "N != n1 * n2");
    // smallest gamma with 1 + gamma^2 n1 n2 = 0 in the field
    const std::uint64_t nn = f.from_int(n1 * n2 % f.p());
    std::uint64_t gamma = 0;
    bool found = false;
    for (std::uint64_t g = 0; g < f.q(); ++g) {
        if (f.add(1, f.mul(f.mul(g, g), nn)) == 0) {
            gamma = g;
            found = true;
            break;
        }
    }
    if (!found)
        throw Error(Errc::NoGammaExists, "no gamma in GF(q) with 1 + gamma^2 n1 n2 = 0");

    ExtendedCode ext;
    ext.base = code;
    ext.gamma = gamma;
    auto G = generator_matrix(code);
    for (auto& row : G) {
        std::uint64_t sum = 0;
        for (std::uint64_t c : row) sum = f.add(sum, c);
        row.push_back(f.neg(f.mul(gamma, sum)));
        ext.rows.push_back(std::move(row));
    }
    bool orthogonal = true;
    for (std::size_t i = 0; i < ext.rows.size() && orthogonal; ++i) {
        for (std::size_t j = i; j < ext.rows.size() && orthogonal; ++j) {
            std::uint64_t dot = 0;
            for (std::size_t c = 0; c < ext.rows[i].size(); ++c)
                dot = f.add(dot, f.mul(ext.rows[i][c], ext.rows[j][c]));
            if (dot != 0) orthogonal = false;
        }
    }
    ext.self_dual = orthogonal && 2 * code.k == code.N + 1;
    return ext;
}

}  // namespace cyc
