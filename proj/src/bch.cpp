#include "zipper/bch.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "zipper/bitops.hpp"

namespace zipper {

namespace {

// Minimal polynomial of alpha^i: product of (x - alpha^j) over the
// cyclotomic coset of i. Coefficients land in GF(2).
std::uint64_t minimal_polynomial(const gf::Field& f, int i) {
    std::vector<int> coset;
    int j = i % gf::Field::kOrder;
    do {
        coset.push_back(j);
        j = (2 * j) % gf::Field::kOrder;
    } while (j != i % gf::Field::kOrder);

    std::vector<unsigned> poly{1};  // GF coefficients, poly[d] = coeff of x^d
    for (int e : coset) {
        const unsigned root = f.alpha_pow(e);
        std::vector<unsigned> next(poly.size() + 1, 0);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] ^= poly[d];
            next[d] ^= f.mul(poly[d], root);
        }
        poly = std::move(next);
    }
    std::uint64_t bits = 0;
    for (std::size_t d = 0; d < poly.size(); ++d) {
        if (poly[d] > 1)
            throw std::logic_error("minimal polynomial has non-binary coefficient");
        bits |= static_cast<std::uint64_t>(poly[d]) << d;
    }
    return bits;
}

// Product of binary polynomials (carryless multiply).
std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    for (int i = 0; b >> i; ++i)
        if ((b >> i) & 1) acc ^= a << i;
    return acc;
}

int poly_degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

}  // namespace

BchCode::BchCode(const gf::Field& field, int t, int n)
    : field_(&field), t_(t), n_(n) {
    if (t < 1 || t > 3) throw std::invalid_argument("t must be in {1,2,3}");
    if (n > kParentLength) throw std::invalid_argument("n exceeds parent length");

    generator_ = 1;
    std::vector<std::uint64_t> seen;
    for (int i = 1; i <= 2 * t - 1; i += 2) {
        std::uint64_t m = minimal_polynomial(field, i);
        if (std::find(seen.begin(), seen.end(), m) == seen.end()) {
            seen.push_back(m);
            generator_ = poly_mul(generator_, m);
        }
    }
    r_ = poly_degree(generator_);
    if (n <= r_) throw std::invalid_argument("shortened length must exceed parity count");
    generator_low_ = static_cast<std::uint32_t>(generator_ & ((1ull << r_) - 1));

    syn_tab_.resize(n);
    for (int j = 0; j < n; ++j) {
        const int e = 1022 - j;
        for (int s = 0; s < 3; ++s)
            syn_tab_[j][s] = static_cast<std::uint16_t>(
                field.alpha_pow(((2 * s + 1) * e) % gf::Field::kOrder));
    }
}

std::uint32_t BchCode::parity(const std::uint64_t* row_words) const {
    // LFSR division: info(x) * x^r mod g(x), info bit at position 0 first.
    const int kk = k();
    std::uint32_t reg = 0;
    const std::uint32_t top = 1u << (r_ - 1);
    for (int j = 0; j < kk; ++j) {
        const bool b = bitops::get_bit(row_words, j);
        const bool fb = b ^ ((reg & top) != 0);
        reg = (reg << 1) & ((1u << r_) - 1);
        if (fb) reg ^= generator_low_;
    }
    return reg;
}

void BchCode::encode_in_place(std::uint64_t* row_words) const {
    const std::uint32_t p = parity(row_words);
    const int kk = k();
    for (int idx = 0; idx < r_; ++idx)
        bitops::set_bit(row_words, kk + idx, (p >> (r_ - 1 - idx)) & 1u);
}

DecodeOutcome BchCode::decode(const std::uint64_t* word_words) const {
    unsigned syn[3] = {0, 0, 0};
    const std::size_t nwords = bitops::words_for_bits(n_);
    for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t bits = word_words[w];
        while (bits) {
            const int j = static_cast<int>(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            syn[0] ^= syn_tab_[j][0];
            if (t_ >= 2) syn[1] ^= syn_tab_[j][1];
            if (t_ >= 3) syn[2] ^= syn_tab_[j][2];
        }
    }

    if (t_ == 1) return decode_t1(syn[0]);
    if (t_ == 2) return decode_t2(syn[0], syn[1]);
    return decode_bm(syn);
}

DecodeOutcome BchCode::decode_t1(unsigned s1) const {
    DecodeOutcome out;
    if (s1 == 0) return out;
    const int pos = locator_to_position(field_->log(s1));
    if (pos >= n_) {
        out.status = DecodeOutcome::Status::OutOfRangeRoot;
        return out;
    }
    out.status = DecodeOutcome::Status::Corrected;
    out.num_positions = 1;
    out.positions[0] = pos;
    return out;
}

DecodeOutcome BchCode::decode_t2(unsigned s1, unsigned s3) const {
    const gf::Field& f = *field_;
    DecodeOutcome out;
    if (s1 == 0 && s3 == 0) return out;

    if (s1 == 0) {  // weight >= 3
        out.status = DecodeOutcome::Status::Uncorrectable;
        return out;
    }
    const unsigned s1_cubed = f.pow(s1, 3);
    if (s3 == s1_cubed) {  // single error, locator X = S1
        const int pos = locator_to_position(f.log(s1));
        if (pos >= n_) {
            out.status = DecodeOutcome::Status::OutOfRangeRoot;
            return out;
        }
        out.status = DecodeOutcome::Status::Corrected;
        out.num_positions = 1;
        out.positions[0] = pos;
        return out;
    }

    // Two errors: sigma(x) = x^2 + S1 x + (S3/S1 + S1^2). Substituting
    // x = S1 y reduces to y^2 + y = sigma2 / S1^2.
    const unsigned sigma2 = f.div(s3, s1) ^ f.sqr(s1);
    const unsigned d = f.div(sigma2, f.sqr(s1));
    const int y0 = f.solve_quadratic(d);
    if (y0 < 0) {
        out.status = DecodeOutcome::Status::Uncorrectable;
        return out;
    }
    const unsigned x1 = f.mul(s1, static_cast<unsigned>(y0));
    const unsigned x2 = x1 ^ s1;  // S1 * (y0 + 1)
    if (x1 == 0 || x2 == 0) {     // sigma2 == 0 cannot reach here, but be safe
        out.status = DecodeOutcome::Status::Uncorrectable;
        return out;
    }
    int p1 = locator_to_position(f.log(x1));
    int p2 = locator_to_position(f.log(x2));
    if (p1 > p2) std::swap(p1, p2);
    if (p2 >= n_) {
        out.status = DecodeOutcome::Status::OutOfRangeRoot;
        return out;
    }
    out.status = DecodeOutcome::Status::Corrected;
    out.num_positions = 2;
    out.positions[0] = p1;
    out.positions[1] = p2;
    return out;
}

DecodeOutcome BchCode::decode_bm(const unsigned* syn_odd) const {
    const gf::Field& f = *field_;
    DecodeOutcome out;

    // Full syndrome vector S1..S6 (even ones from squaring).
    unsigned s[7] = {0};
    s[1] = syn_odd[0];
    s[3] = syn_odd[1];
    s[5] = syn_odd[2];
    s[2] = f.sqr(s[1]);
    s[4] = f.sqr(s[2]);
    s[6] = f.sqr(s[3]);
    if (s[1] == 0 && s[3] == 0 && s[5] == 0) return out;

    // Berlekamp-Massey for the error locator sigma (degree <= 3).
    unsigned sigma[4] = {1, 0, 0, 0};
    unsigned prev[4] = {1, 0, 0, 0};
    int L = 0, mshift = 1;
    unsigned b = 1;
    for (int step = 1; step <= 2 * t_; ++step) {
        unsigned delta = s[step];
        for (int i = 1; i <= L; ++i) delta ^= f.mul(sigma[i], s[step - i]);
        if (delta == 0) {
            ++mshift;
            continue;
        }
        unsigned tmp[4];
        std::copy(sigma, sigma + 4, tmp);
        const unsigned coef = f.div(delta, b);
        for (int i = 0; i + mshift <= 3; ++i)
            sigma[i + mshift] ^= f.mul(coef, prev[i]);
        if (2 * L <= step - 1) {
            L = step - L;
            std::copy(tmp, tmp + 4, prev);
            b = delta;
            mshift = 1;
        } else {
            ++mshift;
        }
    }
    if (L > t_) {
        out.status = DecodeOutcome::Status::Uncorrectable;
        return out;
    }

    // Chien-style root search over the whole parent length; roots landing in
    // shortened positions are the miscorrection-detection signal.
    int found = 0;
    int pos_buf[3];
    bool out_of_range = false;
    for (int e = 0; e < gf::Field::kOrder && found < L; ++e) {
        const unsigned x = f.alpha_pow(e);
        unsigned v = sigma[0];
        unsigned xp = 1;
        for (int i = 1; i <= L; ++i) {
            xp = f.mul(xp, x);
            v ^= f.mul(sigma[i], xp);
        }
        if (v == 0) {
            // sigma's roots are inverse locators: X = alpha^(-e)
            const int pos =
                locator_to_position((gf::Field::kOrder - e) % gf::Field::kOrder);
            if (pos >= n_)
                out_of_range = true;
            else
                pos_buf[found] = pos;
            ++found;
        }
    }
    if (found != L) {
        out.status = DecodeOutcome::Status::Uncorrectable;
        return out;
    }
    if (out_of_range) {
        out.status = DecodeOutcome::Status::OutOfRangeRoot;
        return out;
    }
    std::sort(pos_buf, pos_buf + found);
    out.status = DecodeOutcome::Status::Corrected;
    out.num_positions = found;
    for (int i = 0; i < found; ++i) out.positions[i] = pos_buf[i];
    return out;
}

DecodeOutcome BchCode::genie_decode(const std::uint64_t* word_words,
                                    const std::uint64_t* support_words) const {
    DecodeOutcome out = decode(word_words);
    if (out.status == DecodeOutcome::Status::Corrected) {
        for (int i = 0; i < out.num_positions; ++i) {
            if (!bitops::get_bit(support_words, out.positions[i])) {
                DecodeOutcome veto;
                veto.status = DecodeOutcome::Status::GenieVeto;
                return veto;
            }
        }
    }
    return out;
}

}  // namespace zipper
