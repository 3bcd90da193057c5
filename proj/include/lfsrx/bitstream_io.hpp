#pragma once
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "lfsrx/bitpack.hpp"
#include "lfsrx/errors.hpp"

namespace lfsrx {

// ascii format: '0'/'1' characters, newline after every 64 bits.
inline void write_ascii(std::ostream& os, std::span<const std::uint8_t> bits) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    os.put(bits[i] ? '1' : '0');
    if ((i + 1) % 64 == 0) os.put('\n');
  }
  if (!bits.empty() && bits.size() % 64 != 0) os.put('\n');
}

// packed format: first bit in the least significant bit of the first byte,
// final partial byte zero-padded high.
inline void write_packed(std::ostream& os, std::span<const std::uint8_t> bits) {
  std::uint8_t byte = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    byte |= static_cast<std::uint8_t>((bits[i] & 1) << (i & 7));
    if ((i & 7) == 7) {
      os.put(static_cast<char>(byte));
      byte = 0;
    }
  }
  if (bits.size() & 7) os.put(static_cast<char>(byte));
}

inline BitVec parse_ascii(std::string_view text) {
  BitVec bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
    else if (c == '\n' || c == '\r' || c == '\t' || c == ' ') continue;
    else throw ConfigError(std::string("invalid character '") + c + "' in ascii bit stream");
  }
  return bits;
}

inline BitVec unpack_bytes(std::span<const std::uint8_t> bytes) {
  BitVec bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes)
    for (unsigned b = 0; b < 8; ++b) bits.push_back((byte >> b) & 1);
  return bits;
}

// Whole-file reader with format auto-detection: a file consisting solely of
// '0'/'1' and whitespace parses as ascii, anything else as packed bytes.
inline BitVec read_bits_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open input file '" + path.string() + "'");
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  bool ascii = !data.empty();
  for (char c : data) {
    if (c == '0' || c == '1' || c == '\n' || c == '\r' || c == '\t' || c == ' ') continue;
    ascii = false;
    break;
  }
  if (ascii) return parse_ascii(data);
  return unpack_bytes(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

}  // namespace lfsrx
