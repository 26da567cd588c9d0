#include "ssflood/coding.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace ssf {

namespace {

// Primitive polynomials over GF(2), one per field order.
constexpr std::array<std::pair<int, int>, 8> kPrimitivePolys = {{
    {3, 0b1011},
    {4, 0b10011},
    {5, 0b100101},
    {6, 0b1000011},
    {7, 0b10001001},
    {8, 0b100011101},
    {9, 0b1000010001},
    {10, 0b10000001001},
}};

}  // namespace

int BchCode::gf_mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    return alpha_to_[(index_of_[a] + index_of_[b]) % n_];
}

int BchCode::gf_div(int a, int b) const {
    if (a == 0) return 0;
    return alpha_to_[(index_of_[a] - index_of_[b] + n_) % n_];
}

BchCode BchCode::create(const BchSpec& spec) {
    BchCode code;
    code.n_ = spec.n;
    code.k_ = spec.k;
    code.t_ = spec.t;
    code.pad_ = spec.pad_bits;
    int m = 0, poly = 0;
    for (auto [mm, pp] : kPrimitivePolys) {
        if ((1 << mm) - 1 == spec.n) {
            m = mm;
            poly = pp;
            break;
        }
    }
    if (m == 0) {
        std::ostringstream msg;
        msg << "bch.n = " << spec.n << " is not 2^m - 1 for m in [3, 10]";
        throw ConfigError(msg.str());
    }
    code.m_ = m;

    code.alpha_to_.assign(code.n_ + 1, 0);
    code.index_of_.assign(code.n_ + 1, 0);
    int x = 1;
    for (int i = 0; i < code.n_; ++i) {
        code.alpha_to_[i] = x;
        code.index_of_[x] = i;
        x <<= 1;
        if (x & (1 << m)) x ^= poly;
    }

    // Generator = product of the distinct minimal polynomials of
    // alpha^1 .. alpha^2t (union of their conjugacy classes).
    std::set<int> roots;
    for (int i = 1; i <= 2 * spec.t; ++i) {
        int c = i % code.n_;
        if (c == 0) throw ConfigError("bch.t too large for bch.n");
        for (int r = c;;) {
            roots.insert(r);
            r = (2 * r) % code.n_;
            if (r == c) break;
        }
    }
    // Multiply out prod (x + alpha^r) in GF(2^m); the result must have 0/1
    // coefficients.
    std::vector<int> g = {1};
    for (int r : roots) {
        std::vector<int> next(g.size() + 1, 0);
        const int ar = code.alpha_to_[r];
        for (size_t i = 0; i < g.size(); ++i) {
            next[i] ^= code.gf_mul(g[i], ar);
            next[i + 1] ^= g[i];
        }
        g = std::move(next);
    }
    const int deg = static_cast<int>(g.size()) - 1;
    if (deg != spec.n - spec.k) {
        std::ostringstream msg;
        msg << "inconsistent BCH parameters: (n, t) = (" << spec.n << ", " << spec.t
            << ") gives k = " << spec.n - deg << ", not " << spec.k;
        throw ConfigError(msg.str());
    }
    code.gen_.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0 && g[i] != 1) throw ConfigError("generator polynomial not binary");
        code.gen_[i] = static_cast<std::uint8_t>(g[i]);
    }
    return code;
}

BitVec BchCode::encode(std::span<const std::uint8_t> info) const {
    if (static_cast<int>(info.size()) != k_)
        throw ConfigError("encode: info length must equal bch.k");
    // Systematic: codeword = [parity | info], parity = x^(n-k) i(x) mod g(x).
    const int r = n_ - k_;
    BitVec out(static_cast<size_t>(n_ + pad_), 0);
    std::vector<std::uint8_t> parity(static_cast<size_t>(r), 0);
    for (int i = k_ - 1; i >= 0; --i) {
        const std::uint8_t feedback = static_cast<std::uint8_t>(info[static_cast<size_t>(i)] ^ parity[static_cast<size_t>(r - 1)]);
        for (int j = r - 1; j > 0; --j)
            parity[static_cast<size_t>(j)] = static_cast<std::uint8_t>(parity[static_cast<size_t>(j - 1)] ^ (feedback & gen_[static_cast<size_t>(j)]));
        parity[0] = static_cast<std::uint8_t>(feedback & gen_[0]);
    }
    std::copy(parity.begin(), parity.end(), out.begin());
    std::copy(info.begin(), info.end(), out.begin() + r);
    return out;
}

std::optional<BitVec> BchCode::decode(std::span<const std::uint8_t> received) const {
    if (static_cast<int>(received.size()) != n_ + pad_)
        throw ConfigError("decode: received length must equal the on-air length");
    std::vector<std::uint8_t> word(received.begin(), received.begin() + n_);

    // Syndromes S_i = r(alpha^i), i = 1..2t.
    const int nsyn = 2 * t_;
    std::vector<int> syn(static_cast<size_t>(nsyn + 1), 0);
    bool clean = true;
    for (int i = 1; i <= nsyn; ++i) {
        int s = 0;
        for (int j = 0; j < n_; ++j)
            if (word[static_cast<size_t>(j)]) s ^= alpha_to_[(i * j) % n_];
        syn[static_cast<size_t>(i)] = s;
        if (s != 0) clean = false;
    }
    auto extract = [this](const std::vector<std::uint8_t>& w) {
        return BitVec(w.begin() + (n_ - k_), w.end());
    };
    if (clean) return extract(word);

    // Berlekamp-Massey: error locator sigma(x).
    std::vector<int> sigma = {1}, prev = {1};
    int L = 0, shift = 1, b = 1;
    for (int step = 0; step < nsyn; ++step) {
        int d = syn[static_cast<size_t>(step + 1)];
        for (int i = 1; i <= L && i < static_cast<int>(sigma.size()); ++i)
            d ^= gf_mul(sigma[static_cast<size_t>(i)], syn[static_cast<size_t>(step + 1 - i)]);
        if (d == 0) {
            ++shift;
            continue;
        }
        std::vector<int> next = sigma;
        const int coef = gf_div(d, b);
        if (static_cast<int>(next.size()) < static_cast<int>(prev.size()) + shift)
            next.resize(prev.size() + static_cast<size_t>(shift), 0);
        for (size_t i = 0; i < prev.size(); ++i)
            next[i + static_cast<size_t>(shift)] ^= gf_mul(coef, prev[i]);
        if (2 * L <= step) {
            prev = sigma;
            b = d;
            L = step + 1 - L;
            shift = 1;
        } else {
            ++shift;
        }
        sigma = std::move(next);
    }
    while (!sigma.empty() && sigma.back() == 0) sigma.pop_back();
    const int deg = static_cast<int>(sigma.size()) - 1;
    if (deg > t_ || L > t_) return std::nullopt;

    // Chien search over all positions.
    std::vector<int> errors;
    for (int p = 0; p < n_; ++p) {
        int acc = 0;
        for (size_t i = 0; i < sigma.size(); ++i) {
            if (sigma[i] == 0) continue;
            // sigma_i * (alpha^{-p})^i
            const int e = (index_of_[sigma[i]] + static_cast<int>(i) * (n_ - p)) % n_;
            acc ^= alpha_to_[e];
        }
        if (acc == 0) errors.push_back(p);
    }
    if (static_cast<int>(errors.size()) != deg) return std::nullopt;
    for (int p : errors) word[static_cast<size_t>(p)] ^= 1;
    return extract(word);
}

}  // namespace ssf
