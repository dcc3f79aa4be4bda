#include "texguard/pdf/inflate.hpp"

#include <algorithm>
#include <array>

namespace texguard::pdf {

namespace {

constexpr int kMaxBits = 15;
constexpr int kMaxLengthCodes = 286;
constexpr int kMaxDistCodes = 30;
constexpr int kFixedLengthCodes = 288;

struct InflateError {
  const char* message;
  std::size_t offset;
};

struct Huffman {
  std::array<short, kMaxBits + 1> count{};
  std::array<short, kFixedLengthCodes> symbol{};
};

// Canonical Huffman decoder after Mark Adler's puff.
class Decoder {
 public:
  Decoder(std::string_view in, std::size_t max_output, std::string& out)
      : in_(in), max_output_(max_output), out_(out) {}

  void run() {
    int last = 0;
    do {
      last = bits(1);
      const int type = bits(2);
      switch (type) {
        case 0: stored(); break;
        case 1: fixed(); break;
        case 2: dynamic(); break;
        default: fail("invalid block type");
      }
    } while (!last);
  }

  std::size_t position() const { return pos_; }

  // Drops the partial byte so the caller can read the trailer.
  void align() {
    bitbuf_ = 0;
    bitcnt_ = 0;
  }

 private:
  [[noreturn]] void fail(const char* message) const { throw InflateError{message, pos_}; }

  int bits(int need) {
    long val = bitbuf_;
    while (bitcnt_ < need) {
      if (pos_ >= in_.size()) fail("unexpected end of data");
      val |= static_cast<long>(static_cast<unsigned char>(in_[pos_++])) << bitcnt_;
      bitcnt_ += 8;
    }
    bitbuf_ = static_cast<int>(val >> need);
    bitcnt_ -= need;
    return static_cast<int>(val & ((1L << need) - 1));
  }

  void emit(char c) {
    if (out_.size() >= max_output_) fail("output limit exceeded");
    out_ += c;
  }

  void stored() {
    bitbuf_ = 0;
    bitcnt_ = 0;
    if (pos_ + 4 > in_.size()) fail("truncated stored block header");
    const unsigned len = static_cast<unsigned char>(in_[pos_]) |
                         (static_cast<unsigned char>(in_[pos_ + 1]) << 8);
    const unsigned nlen = static_cast<unsigned char>(in_[pos_ + 2]) |
                          (static_cast<unsigned char>(in_[pos_ + 3]) << 8);
    if (len != (~nlen & 0xffff)) fail("stored block length check failed");
    pos_ += 4;
    if (pos_ + len > in_.size()) fail("truncated stored block");
    if (out_.size() + len > max_output_) fail("output limit exceeded");
    out_.append(in_.substr(pos_, len));
    pos_ += len;
  }

  int decode(const Huffman& h) {
    int code = 0;
    int first = 0;
    int index = 0;
    for (int len = 1; len <= kMaxBits; ++len) {
      code |= bits(1);
      const int count = h.count[len];
      if (code - count < first) return h.symbol[index + (code - first)];
      index += count;
      first += count;
      first <<= 1;
      code <<= 1;
    }
    fail("invalid Huffman code");
  }

  // Returns 0 for a complete code, >0 incomplete, <0 over-subscribed.
  static int construct(Huffman& h, const short* length, int n) {
    h.count.fill(0);
    for (int symbol = 0; symbol < n; ++symbol) ++h.count[length[symbol]];
    if (h.count[0] == n) return 0;
    int left = 1;
    for (int len = 1; len <= kMaxBits; ++len) {
      left <<= 1;
      left -= h.count[len];
      if (left < 0) return left;
    }
    std::array<short, kMaxBits + 1> offs{};
    for (int len = 1; len < kMaxBits; ++len) offs[len + 1] = offs[len] + h.count[len];
    for (int symbol = 0; symbol < n; ++symbol) {
      if (length[symbol] != 0) h.symbol[offs[length[symbol]]++] = static_cast<short>(symbol);
    }
    return left;
  }

  void codes(const Huffman& lencode, const Huffman& distcode) {
    static constexpr short kLengthBase[29] = {3,  4,  5,  6,  7,  8,  9,  10, 11,  13,
                                              15, 17, 19, 23, 27, 31, 35, 43, 51,  59,
                                              67, 83, 99, 115, 131, 163, 195, 227, 258};
    static constexpr short kLengthExtra[29] = {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2,
                                               3, 3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 0};
    static constexpr short kDistBase[30] = {
        1,   2,   3,   4,   5,   7,    9,    13,   17,   25,   33,   49,   65,    97,    129,
        193, 257, 385, 513, 769, 1025, 1537, 2049, 3073, 4097, 6145, 8193, 12289, 16385, 24577};
    static constexpr short kDistExtra[30] = {0, 0, 0, 0, 1, 1, 2, 2,  3,  3,  4,  4,  5,  5,  6,
                                             6, 7, 7, 8, 8, 9, 9, 10, 10, 11, 11, 12, 12, 13, 13};
    int symbol = 0;
    do {
      symbol = decode(lencode);
      if (symbol < 256) {
        emit(static_cast<char>(symbol));
      } else if (symbol > 256) {
        symbol -= 257;
        if (symbol >= 29) fail("invalid length symbol");
        const std::size_t len = kLengthBase[symbol] + bits(kLengthExtra[symbol]);
        const int dsym = decode(distcode);
        if (dsym >= 30) fail("invalid distance symbol");
        const std::size_t dist = kDistBase[dsym] + bits(kDistExtra[dsym]);
        if (dist > out_.size()) fail("distance too far back");
        if (out_.size() + len > max_output_) fail("output limit exceeded");
        const std::size_t from = out_.size() - dist;
        for (std::size_t i = 0; i < len; ++i) out_ += out_[from + i];
      }
    } while (symbol != 256);
  }

  void fixed() {
    static const std::pair<Huffman, Huffman> tables = [] {
      std::pair<Huffman, Huffman> t;
      std::array<short, kFixedLengthCodes> lengths{};
      int symbol = 0;
      for (; symbol < 144; ++symbol) lengths[symbol] = 8;
      for (; symbol < 256; ++symbol) lengths[symbol] = 9;
      for (; symbol < 280; ++symbol) lengths[symbol] = 7;
      for (; symbol < kFixedLengthCodes; ++symbol) lengths[symbol] = 8;
      construct(t.first, lengths.data(), kFixedLengthCodes);
      for (symbol = 0; symbol < kMaxDistCodes; ++symbol) lengths[symbol] = 5;
      construct(t.second, lengths.data(), kMaxDistCodes);
      return t;
    }();
    codes(tables.first, tables.second);
  }

  void dynamic() {
    static constexpr short kOrder[19] = {16, 17, 18, 0, 8,  7, 9,  6, 10, 5,
                                         11, 4,  12, 3, 13, 2, 14, 1, 15};
    std::array<short, kMaxLengthCodes + kMaxDistCodes> lengths{};
    const int nlen = bits(5) + 257;
    const int ndist = bits(5) + 1;
    const int ncode = bits(4) + 4;
    if (nlen > kMaxLengthCodes || ndist > kMaxDistCodes) fail("bad code counts");
    int index = 0;
    for (; index < ncode; ++index) lengths[kOrder[index]] = static_cast<short>(bits(3));
    for (; index < 19; ++index) lengths[kOrder[index]] = 0;
    Huffman lencode;
    Huffman distcode;
    if (construct(lencode, lengths.data(), 19) != 0) fail("incomplete code-length code");

    index = 0;
    while (index < nlen + ndist) {
      int symbol = decode(lencode);
      if (symbol < 16) {
        lengths[index++] = static_cast<short>(symbol);
        continue;
      }
      short len = 0;
      if (symbol == 16) {
        if (index == 0) fail("repeat with no previous length");
        len = lengths[index - 1];
        symbol = 3 + bits(2);
      } else if (symbol == 17) {
        symbol = 3 + bits(3);
      } else {
        symbol = 11 + bits(7);
      }
      if (index + symbol > nlen + ndist) fail("too many code lengths");
      while (symbol--) lengths[index++] = len;
    }
    if (lengths[256] == 0) fail("missing end-of-block code");
    int err = construct(lencode, lengths.data(), nlen);
    if (err < 0 || (err > 0 && nlen - lencode.count[0] != 1)) fail("bad literal/length code");
    err = construct(distcode, lengths.data() + nlen, ndist);
    if (err < 0 || (err > 0 && ndist - distcode.count[0] != 1)) fail("bad distance code");
    codes(lencode, distcode);
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  int bitbuf_ = 0;
  int bitcnt_ = 0;
  std::size_t max_output_;
  std::string& out_;
};

InflateResult run_decoder(std::string_view input, std::size_t offset, std::size_t max_output,
                          bool zlib) {
  InflateResult result;
  result.zlib_wrapped = zlib;
  Decoder decoder(input.substr(offset), max_output, result.data);
  try {
    decoder.run();
  } catch (const InflateError& e) {
    result.error = e.message;
    result.error_offset = offset + e.offset;
    return result;
  }
  result.ok = true;
  if (zlib) {
    decoder.align();
    const std::size_t trailer = offset + decoder.position();
    if (trailer + 4 <= input.size()) {
      std::uint32_t expected = 0;
      for (int i = 0; i < 4; ++i) {
        expected = (expected << 8) | static_cast<unsigned char>(input[trailer + i]);
      }
      result.checksum_mismatch = expected != adler32(result.data);
    } else {
      result.checksum_mismatch = true;
    }
  }
  return result;
}

}  // namespace

std::uint32_t adler32(std::string_view data) {
  constexpr std::uint32_t kMod = 65521;
  std::uint32_t a = 1;
  std::uint32_t b = 0;
  std::size_t i = 0;
  while (i < data.size()) {
    // 5552 is the largest run that cannot overflow 32 bits.
    const std::size_t end = std::min(data.size(), i + 5552);
    for (; i < end; ++i) {
      a += static_cast<unsigned char>(data[i]);
      b += a;
    }
    a %= kMod;
    b %= kMod;
  }
  return (b << 16) | a;
}

InflateResult inflate_raw(std::string_view input, std::size_t max_output) {
  return run_decoder(input, 0, max_output, false);
}

InflateResult inflate(std::string_view input, std::size_t max_output) {
  if (input.size() >= 2) {
    const auto cmf = static_cast<unsigned char>(input[0]);
    const auto flg = static_cast<unsigned char>(input[1]);
    const bool header_ok = (cmf & 0x0f) == 8 && (cmf >> 4) <= 7 && ((cmf << 8) | flg) % 31 == 0;
    if (header_ok) {
      if (flg & 0x20) {
        InflateResult result;
        result.zlib_wrapped = true;
        result.error = "preset dictionary not supported";
        result.error_offset = 1;
        return result;
      }
      return run_decoder(input, 2, max_output, true);
    }
  }
  return run_decoder(input, 0, max_output, false);
}

}  // namespace texguard::pdf
