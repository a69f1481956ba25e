#include "zipper/buffer.hpp"

#include <algorithm>

namespace zipper {

Buffer::Buffer(int n, std::int64_t capacity_rows)
    : n_(n),
      words_(bitops::words_for_bits(static_cast<std::size_t>(n))),
      capacity_(capacity_rows),
      storage_(static_cast<std::size_t>(capacity_rows) * words_, 0),
      version_(static_cast<std::size_t>(capacity_rows), 0),
      decoded_version_(static_cast<std::size_t>(capacity_rows), 0) {
    if (n < 1 || capacity_rows < 1)
        throw std::invalid_argument("buffer needs positive row length and capacity");
}

std::int64_t Buffer::push_row() {
    if (frontier_ - base_row_ >= capacity_)
        throw std::out_of_range("buffer capacity exhausted; release rows first");
    const std::int64_t i = frontier_++;
    std::uint64_t* w = storage_.data() + slot(i) * words_;
    std::fill(w, w + words_, 0);
    ++version_[slot(i)];
    return i;
}

}  // namespace zipper
