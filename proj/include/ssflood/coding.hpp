#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ssflood/params.hpp"

namespace ssf {

using BitVec = std::vector<std::uint8_t>;

// Binary BCH(n, k, t) over GF(2^m), n = 2^m - 1, systematic encoding,
// hard-decision Berlekamp-Massey decoding. pad_bits zeros are appended to
// reach the on-air length; their received values are ignored on decode.
class BchCode {
  public:
    static BchCode create(const BchSpec& spec);

    int n() const { return n_; }
    int k() const { return k_; }
    int t() const { return t_; }
    int pad_bits() const { return pad_; }
    int on_air_bits() const { return n_ + pad_; }
    double rate() const { return static_cast<double>(k_) / n_; }
    const std::vector<std::uint8_t>& generator() const { return gen_; }

    // info (k bits) -> codeword + pad (n + pad_bits), parity first.
    BitVec encode(std::span<const std::uint8_t> info) const;

    // Corrects any pattern of weight <= t; heavier patterns return nullopt
    // or a wrong codeword (callers count either as a packet error).
    std::optional<BitVec> decode(std::span<const std::uint8_t> received) const;

  private:
    BchCode() = default;

    int gf_mul(int a, int b) const;
    int gf_div(int a, int b) const;

    int m_ = 0, n_ = 0, k_ = 0, t_ = 0, pad_ = 0;
    std::vector<int> alpha_to_;  // alpha_to[i] = alpha^i
    std::vector<int> index_of_;  // discrete log, index_of[0] unused
    std::vector<std::uint8_t> gen_;  // generator polynomial, degree n - k
};

}  // namespace ssf
