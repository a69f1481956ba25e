#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "zipper/gf1024.hpp"

namespace zipper {

// Result of one constituent decode attempt.
struct DecodeOutcome {
    enum class Status : std::uint8_t {
        NoError,
        Corrected,
        Uncorrectable,    // no error pattern of weight <= t fits the syndromes
        OutOfRangeRoot,   // a located error fell in a shortened position
        GenieVeto,        // correction inconsistent with the true error support
    };

    Status status = Status::NoError;
    int num_positions = 0;             // valid when status == Corrected
    std::array<int, 3> positions{};    // sorted, all < n

    bool is_failure() const {
        return status == Status::Uncorrectable ||
               status == Status::OutOfRangeRoot || status == Status::GenieVeto;
    }
};

// Binary BCH code of parent length 1023 shortened to length n, correcting
// up to t errors. Systematic layout: positions [0, k) carry information,
// [k, n) parity. Position j corresponds to the coefficient of x^(1022-j);
// positions n..1022 are shortened (fixed to zero, never transmitted).
class BchCode {
public:
    static constexpr int kParentLength = 1023;

    // t in {1,2,3}; n <= 1023 and n > r. Throws std::invalid_argument.
    BchCode(const gf::Field& field, int t, int n);

    const gf::Field& field() const { return *field_; }
    int t() const { return t_; }
    int n() const { return n_; }
    int k() const { return n_ - r_; }
    int r() const { return r_; }
    std::uint64_t generator() const { return generator_; }

    // Parity for the information bits in positions [0, k) of `row_words`.
    // Bit r-1-idx of the result is the parity bit at position k+idx.
    std::uint32_t parity(const std::uint64_t* row_words) const;

    // Overwrites positions [k, n) of the packed n-bit row with parity.
    void encode_in_place(std::uint64_t* row_words) const;

    // Bounded-distance decode of a packed n-bit word (bits beyond n must be
    // zero). Corrected positions are not applied to the word.
    DecodeOutcome decode(const std::uint64_t* word_words) const;

    // As decode(), but any Corrected whose positions are not all set in the
    // packed `support_words` bitmap becomes a GenieVeto failure.
    DecodeOutcome genie_decode(const std::uint64_t* word_words,
                               const std::uint64_t* support_words) const;

private:
    DecodeOutcome decode_t1(unsigned s1) const;
    DecodeOutcome decode_t2(unsigned s1, unsigned s3) const;
    DecodeOutcome decode_bm(const unsigned* syn) const;  // t == 3

    // Map a locator log e (X = alpha^e) to a position, or fail out of range.
    static int locator_to_position(int e) { return 1022 - e; }

    const gf::Field* field_;
    int t_;
    int n_;
    int r_;
    std::uint64_t generator_;        // bit i = coefficient of x^i
    std::uint32_t generator_low_;    // generator without the x^r term

    // Per-position syndrome contributions: syn_tab_[s][j] = alpha^((2s+1)*(1022-j)).
    std::vector<std::array<std::uint16_t, 3>> syn_tab_;
};

}  // namespace zipper
