#include "zipper/zipper_core.hpp"

namespace zipper {

void fill_virtual(Buffer& buf, const InterleaverMap& map, std::int64_t i) {
    auto row = buf.row(i);
    for (int j = 0; j < map.m(); ++j) {
        const Pos src = map.phi(i, j);
        if (buf.bit(src))
            bitops::set_bit(row.data(), static_cast<std::size_t>(j), true);
    }
}

std::int64_t encode_row(Buffer& buf, const InterleaverMap& map,
                        const BchCode& code,
                        std::span<const std::uint64_t> info_words) {
    const std::int64_t i = buf.push_row();
    auto row = buf.row(i);
    const int m = map.m();
    const int info_bits = code.k() - m;
    for (int b = 0; b < info_bits; ++b)
        bitops::set_bit(row.data(), static_cast<std::size_t>(m + b),
                        bitops::get_bit(info_words.data(),
                                        static_cast<std::size_t>(b)));
    fill_virtual(buf, map, i);
    code.encode_in_place(row.data());
    return i;
}

int flip_with_copies(Buffer& buf, const InterleaverMap& map, Pos p,
                     Pos applied[3]) {
    // Resolve to the real position this bit is (a copy of).
    Pos target = p;
    if (p.col < map.m()) target = map.phi(p.row, p.col);
    if (target.row >= 0 && target.row < buf.base_row())
        throw std::out_of_range("flip target evicted from buffer");

    int count = 0;
    if (target.row >= 0 && target.row < buf.frontier()) {
        buf.flip(target);
        applied[count++] = target;
    }
    Pos pre[2];
    const int npre = map.phi_inverse(target.row, target.col, pre);
    for (int idx = 0; idx < npre; ++idx) {
        if (pre[idx].row < 0 || pre[idx].row >= buf.frontier())
            continue;  // before the stream start or not yet received
        if (pre[idx].row < buf.base_row())
            throw std::out_of_range("flip copy evicted from buffer");
        buf.flip(pre[idx]);
        applied[count++] = pre[idx];
    }
    return count;
}

}  // namespace zipper
