#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "escode/coder.hpp"

namespace escode {

/// ESCC container, byte-exact layout:
///   magic "ESCC" (45 53 43 43) | version 01 | D (1 byte) |
///   symbol count (8 bytes, big-endian) | codebook section length
///   (4 bytes, big-endian) | codebook section (codebook TSV) | payload.
/// For D = 2 the payload packs 8 digits per byte MSB-first, zero-padded;
/// for D > 2 it holds one digit per byte. Decoding is bounded by the symbol
/// count, so pad digits after the last codeword are ignored.
struct EncodedStream {
    Codebook book;
    std::uint64_t symbol_count = 0;
    std::vector<std::uint8_t> payload;
    /// Digit slots in the payload: the exact number of code digits written
    /// when produced by encode(); the byte-padded capacity when parsed back
    /// from a container (D = 2 rounds up to whole bytes).
    std::uint64_t payload_digits = 0;
};

/// Concatenates the codewords of `symbols` into a stream. Throws
/// UnknownSymbol for an index without a codeword.
EncodedStream encode(std::span<const std::size_t> symbols, const Codebook& book);

/// Walks the payload with the embedded codebook and returns exactly
/// symbol_count symbol indices. Throws DanglingBits if the payload ends
/// mid-codeword and CorruptPayload on a digit sequence that matches no
/// codeword (possible only for incomplete codes or tampered data).
std::vector<std::size_t> decode(const EncodedStream& stream);

std::vector<std::uint8_t> serialize(const EncodedStream& stream);

/// Parses and validates a container. Every read is bounds-checked; a
/// tampered header yields CorruptHeader (or NonPrefixCodebook for a broken
/// embedded codebook), never an out-of-range access.
EncodedStream parse_stream(std::span<const std::uint8_t> bytes);

} // namespace escode
