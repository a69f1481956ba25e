#pragma once

#include <span>

#include "zipper/bch.hpp"
#include "zipper/buffer.hpp"
#include "zipper/interleaver.hpp"

namespace zipper {

// Copies the virtual bits of row i from their interleaver sources.
// Sources in rows < 0 read as zero.
void fill_virtual(Buffer& buf, const InterleaverMap& map, std::int64_t i);

// Encodes one new row at the buffer frontier: new information bits go to
// positions [m, n-r), virtual bits are copied per the map, parity fills
// [n-r, n). `info_words` holds n-r-m packed bits. Returns the row index.
std::int64_t encode_row(Buffer& buf, const InterleaverMap& map,
                        const BchCode& code,
                        std::span<const std::uint64_t> info_words);

// Flips a stored bit together with all of its retained copies (the flip set
// of the decoding rule). Copies in rows at or beyond the frontier do not
// exist yet and are skipped; flipping them is deferred to the virtual-copy
// step when those rows arrive. Flipping a position whose real source row
// has been evicted throws (buffer depth misconfiguration).
// `applied` receives the flipped positions; returns their count (<= 3).
int flip_with_copies(Buffer& buf, const InterleaverMap& map, Pos p,
                     Pos applied[3]);

}  // namespace zipper
