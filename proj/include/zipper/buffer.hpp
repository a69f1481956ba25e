#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "zipper/bitops.hpp"
#include "zipper/interleaver.hpp"

namespace zipper {

// Static parameters of a zipper code instance.
struct ZipperParams {
    int n = 0;  // row length
    int m = 0;  // virtual buffer width
    int r = 0;  // parity bits per row

    int real_width() const { return n - m; }
    int info_width() const { return n - m - r; }
    // Exact code rate 1 - r / (n - m).
    double rate() const { return 1.0 - static_cast<double>(r) / (n - m); }
};

// Windowed realization of the semi-infinite buffer: a circular store of
// packed n-bit rows. Rows below the retained range read as all-zero
// (startup convention); rows are recycled as the stream advances.
class Buffer {
public:
    Buffer(int n, std::int64_t capacity_rows);

    int n() const { return n_; }
    std::size_t words_per_row() const { return words_; }
    std::int64_t base_row() const { return base_row_; }
    std::int64_t frontier() const { return frontier_; }  // highest filled row + 1

    // Appends a zeroed row at the frontier; the oldest retained row must
    // already have been released. Returns the new row's index.
    std::int64_t push_row();

    // Drops rows below `row` from the retained range.
    void release_below(std::int64_t row) {
        if (row > base_row_) base_row_ = row;
    }

    bool retained(std::int64_t row) const {
        return row >= base_row_ && row < frontier_;
    }

    std::span<std::uint64_t> row(std::int64_t i) {
        check_retained(i);
        return {storage_.data() + slot(i) * words_, words_};
    }
    std::span<const std::uint64_t> row(std::int64_t i) const {
        check_retained(i);
        return {storage_.data() + slot(i) * words_, words_};
    }

    // Reads a bit; rows before the first row ever written read as zero.
    bool bit(Pos p) const {
        if (p.row < 0) return false;
        check_retained(p.row);
        return bitops::get_bit(storage_.data() + slot(p.row) * words_,
                               static_cast<std::size_t>(p.col));
    }

    void set_bit(Pos p, bool v) {
        check_retained(p.row);
        bitops::set_bit(storage_.data() + slot(p.row) * words_,
                        static_cast<std::size_t>(p.col), v);
    }

    // Flips one stored bit and bumps the row's version (freshness signal).
    void flip(Pos p) {
        check_retained(p.row);
        bitops::flip_bit(storage_.data() + slot(p.row) * words_,
                         static_cast<std::size_t>(p.col));
        ++version_[slot(p.row)];
    }

    std::uint64_t version(std::int64_t i) const { return version_[slot(i)]; }
    void bump_version(std::int64_t i) { ++version_[slot(i)]; }

    // Fresh/stale tracking: a row is fresh when its content changed since
    // the last decode attempt recorded against it.
    bool fresh(std::int64_t i) const {
        return version_[slot(i)] != decoded_version_[slot(i)];
    }
    void mark_decoded(std::int64_t i) {
        decoded_version_[slot(i)] = version_[slot(i)];
    }

private:
    void check_retained(std::int64_t i) const {
        if (i < base_row_ || i >= frontier_)
            throw std::out_of_range("buffer row outside retained window");
    }
    std::size_t slot(std::int64_t i) const {
        return static_cast<std::size_t>(i % capacity_) * 1u;
    }

    int n_;
    std::size_t words_;
    std::int64_t capacity_;
    std::int64_t base_row_ = 0;
    std::int64_t frontier_ = 0;
    std::vector<std::uint64_t> storage_;
    std::vector<std::uint64_t> version_;
    std::vector<std::uint64_t> decoded_version_;
};

}  // namespace zipper
