#include "escode/codec.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <string>

#include "escode/errors.hpp"

namespace escode {

namespace {

constexpr std::uint8_t kMagic[4] = {0x45, 0x53, 0x43, 0x43}; // "ESCC"
constexpr std::uint8_t kVersion = 0x01;
constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 8 + 4;

void put_be(std::vector<std::uint8_t>& out, std::uint64_t v, unsigned bytes) {
    for (unsigned i = 0; i < bytes; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * (bytes - 1 - i))));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t at, unsigned bytes) {
    std::uint64_t v = 0;
    for (unsigned i = 0; i < bytes; ++i) v = (v << 8) | in[at + i];
    return v;
}

// Flat decoding trie over the code alphabet; -1 marks a missing child.
struct Trie {
    unsigned base;
    std::vector<std::vector<int>> children;
    std::vector<int> symbol;

    explicit Trie(const Codebook& book) : base(book.alphabet_size()) {
        new_node();
        for (std::size_t s = 0; s < book.size(); ++s) {
            int node = 0;
            for (char c : book.codeword(s)) {
                const unsigned d = digit_value(c);
                if (children[static_cast<std::size_t>(node)][d] < 0) {
                    children[static_cast<std::size_t>(node)][d] = new_node();
                }
                node = children[static_cast<std::size_t>(node)][d];
            }
            symbol[static_cast<std::size_t>(node)] = static_cast<int>(s);
        }
    }

    int new_node() {
        children.emplace_back(base, -1);
        symbol.push_back(-1);
        return static_cast<int>(symbol.size()) - 1;
    }
};

} // namespace

EncodedStream encode(std::span<const std::size_t> symbols, const Codebook& book) {
    EncodedStream stream{book, symbols.size(), {}, 0};
    const unsigned base = book.alphabet_size();
    if (base == 2) {
        std::uint8_t acc = 0;
        unsigned filled = 0;
        for (std::size_t s : symbols) {
            if (s >= book.size())
                throw UnknownSymbol("symbol index " + std::to_string(s) +
                                    " has no codeword");
            for (char c : book.codeword(s)) {
                acc = static_cast<std::uint8_t>(acc << 1) |
                      static_cast<std::uint8_t>(digit_value(c));
                if (++filled == 8) {
                    stream.payload.push_back(acc);
                    acc = 0;
                    filled = 0;
                }
                ++stream.payload_digits;
            }
        }
        if (filled > 0)
            stream.payload.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    } else {
        for (std::size_t s : symbols) {
            if (s >= book.size())
                throw UnknownSymbol("symbol index " + std::to_string(s) +
                                    " has no codeword");
            for (char c : book.codeword(s)) {
                stream.payload.push_back(static_cast<std::uint8_t>(digit_value(c)));
                ++stream.payload_digits;
            }
        }
    }
    return stream;
}

std::vector<std::size_t> decode(const EncodedStream& stream) {
    const unsigned base = stream.book.alphabet_size();
    const Trie trie(stream.book);
    std::vector<std::size_t> out;
    // Each symbol consumes at least one digit, so payload_digits caps the
    // true output size even when the count field was tampered with.
    out.reserve(static_cast<std::size_t>(
        std::min<std::uint64_t>(stream.symbol_count, stream.payload_digits)));
    std::uint64_t pos = 0;
    auto next_digit = [&]() -> unsigned {
        if (base == 2) {
            const std::uint64_t byte = pos / 8;
            const unsigned bit = static_cast<unsigned>(7 - pos % 8);
            ++pos;
            return (stream.payload[static_cast<std::size_t>(byte)] >> bit) & 1u;
        }
        const std::uint8_t d = stream.payload[static_cast<std::size_t>(pos)];
        ++pos;
        if (d >= base)
            throw CorruptPayload("payload digit " + std::to_string(d) +
                                 " out of range for base " + std::to_string(base));
        return d;
    };
    while (out.size() < stream.symbol_count) {
        int node = 0;
        while (trie.symbol[static_cast<std::size_t>(node)] < 0) {
            if (pos >= stream.payload_digits)
                throw DanglingBits("payload ended inside a codeword after " +
                                   std::to_string(out.size()) + " of " +
                                   std::to_string(stream.symbol_count) + " symbols");
            const unsigned d = next_digit();
            node = trie.children[static_cast<std::size_t>(node)][d];
            if (node < 0)
                throw CorruptPayload("digit sequence matches no codeword");
        }
        out.push_back(static_cast<std::size_t>(trie.symbol[static_cast<std::size_t>(node)]));
    }
    return out;
}

std::vector<std::uint8_t> serialize(const EncodedStream& stream) {
    std::ostringstream cb;
    write_codebook_tsv(cb, stream.book);
    const std::string cb_text = cb.str();
    if (cb_text.size() > 0xFFFFFFFFull)
        throw Error("codebook section exceeds the container's 4-byte length field");
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + cb_text.size() + stream.payload.size());
    for (std::uint8_t b : kMagic) out.push_back(b);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(stream.book.alphabet_size()));
    put_be(out, stream.symbol_count, 8);
    put_be(out, cb_text.size(), 4);
    out.insert(out.end(), cb_text.begin(), cb_text.end());
    out.insert(out.end(), stream.payload.begin(), stream.payload.end());
    return out;
}

EncodedStream parse_stream(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kHeaderSize)
        throw CorruptHeader("container shorter than the fixed header");
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw CorruptHeader("bad magic; not an ESCC container");
    if (bytes[4] != kVersion)
        throw CorruptHeader("unsupported container version " + std::to_string(bytes[4]));
    const unsigned base = bytes[5];
    const std::uint64_t count = get_be(bytes, 6, 8);
    const std::uint64_t cb_len = get_be(bytes, 14, 4);
    if (bytes.size() < kHeaderSize + cb_len)
        throw CorruptHeader("truncated codebook section");

    std::istringstream cb_in(std::string(
        reinterpret_cast<const char*>(bytes.data()) + kHeaderSize,
        static_cast<std::size_t>(cb_len)));
    Codebook book = [&]() {
        try {
            return read_codebook_tsv(cb_in);
        } catch (const ParseError& e) {
            throw CorruptHeader(std::string("embedded codebook: ") + e.what());
        }
    }();
    if (book.alphabet_size() != base)
        throw CorruptHeader("alphabet size byte disagrees with the embedded codebook");

    EncodedStream stream{std::move(book), count, {}, 0};
    stream.payload.assign(bytes.begin() + static_cast<std::ptrdiff_t>(kHeaderSize + cb_len),
                          bytes.end());
    stream.payload_digits = (base == 2) ? stream.payload.size() * 8
                                        : stream.payload.size();
    return stream;
}

} // namespace escode
