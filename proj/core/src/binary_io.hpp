// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Little-endian encoding helpers for the model and index files.

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "dropin/error.hpp"

namespace dropin::detail {

class ByteWriter {
 public:
  void bytes(std::string_view s) { out_.append(s); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    bytes(s);
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

class ByteReader {
 public:
  ByteReader(std::string_view data, std::string what) : data_(data), what_(std::move(what)) {}

  void require(std::size_t n) const {
    if (data_.size() - pos_ < n) throw MalformedInput(pos_, "truncated " + what_ + " file");
  }
  void magic(std::string_view m) {
    require(m.size());
    if (data_.substr(pos_, m.size()) != m) throw MalformedInput(pos_, "not a " + what_ + " file (bad magic)");
    pos_ += m.size();
  }
  std::uint32_t u32() {
    require(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    require(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += 8;
    return v;
  }
  float f32() { return std::bit_cast<float>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const std::uint32_t n = u32();
    require(n);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  void expect_end() const {
    if (pos_ != data_.size()) throw MalformedInput(pos_, "trailing bytes in " + what_ + " file");
  }
  std::size_t offset() const { return pos_; }

 private:
  std::string_view data_;
  std::size_t pos_ = 0;
  std::string what_;
};

}  // namespace dropin::detail
