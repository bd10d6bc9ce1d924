#include "hlcode/byte_io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <system_error>

#include "hlcode/errors.hpp"

namespace hlcode {

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::bytes(std::span<const std::uint8_t> data) { buf_.insert(buf_.end(), data.begin(), data.end()); }

void ByteWriter::magic(std::string_view tag) {
  for (char c : tag) buf_.push_back(static_cast<std::uint8_t>(c));
}

std::span<const std::uint8_t> ByteReader::bytes(std::size_t count) {
  if (count > remaining())
    throw FormatError("truncated input: need " + std::to_string(count) + " bytes at offset " +
                      std::to_string(pos_) + ", have " + std::to_string(remaining()));
  auto out = data_.subspan(pos_, count);
  pos_ += count;
  return out;
}

std::uint8_t ByteReader::u8() { return bytes(1)[0]; }

std::uint32_t ByteReader::u32() {
  const auto b = bytes(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return v;
}

std::uint64_t ByteReader::u64() {
  const auto b = bytes(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
  return v;
}

void ByteReader::expect_magic(std::string_view tag, std::string_view what) {
  if (remaining() < tag.size()) throw FormatError("truncated " + std::string(what) + ": missing magic");
  const auto b = bytes(tag.size());
  if (!std::equal(tag.begin(), tag.end(), b.begin(), [](char c, std::uint8_t u) { return static_cast<std::uint8_t>(c) == u; }))
    throw FormatError("not a " + std::string(what) + " (expected magic " + std::string(tag) + ")");
}

void ByteReader::expect_end(std::string_view what) const {
  if (!at_end())
    throw FormatError(std::string(what) + ": " + std::to_string(remaining()) + " trailing bytes");
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  in.seekg(0, std::ios::beg);
  std::vector<std::uint8_t> data(static_cast<std::size_t>(size));
  if (size > 0 && !in.read(reinterpret_cast<char*>(data.data()), size)) throw IoError("cannot read " + path.string());
  return data;
}

void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  auto tmp = path;
  tmp += ".tmp" + std::to_string(std::random_device{}());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("short write to " + path.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into " + path.string());
  }
}

}  // namespace hlcode
