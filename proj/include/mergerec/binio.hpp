#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "mergerec/errors.hpp"

namespace mergerec {

// Little-endian primitive IO for the MRGD/MRGC/MRGF container formats.
// The build targets little-endian hosts; the static_assert keeps that honest.
static_assert(std::endian::native == std::endian::little,
              "file formats are little-endian; big-endian hosts are unsupported");

class BinWriter {
public:
    explicit BinWriter(const std::string& path) : out_(path, std::ios::binary) {
        if (!out_) throw DataError("cannot open file for writing: " + path);
        path_ = path;
    }
    void write_bytes(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
        if (!out_) throw DataError("write failed: " + path_);
    }
    void write_magic(const char m[4]) { write_bytes(m, 4); }
    void write_u16(std::uint16_t v) { write_bytes(&v, sizeof(v)); }
    void write_u32(std::uint32_t v) { write_bytes(&v, sizeof(v)); }
    void write_u64(std::uint64_t v) { write_bytes(&v, sizeof(v)); }
    void write_f32(float v) { write_bytes(&v, sizeof(v)); }
    void write_string(const std::string& s) {
        if (s.size() > 0xffff) throw DataError("string too long for u16 length prefix");
        write_u16(static_cast<std::uint16_t>(s.size()));
        write_bytes(s.data(), s.size());
    }

private:
    std::ofstream out_;
    std::string path_;
};

class BinReader {
public:
    explicit BinReader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw DataError("cannot open file for reading: " + path);
        path_ = path;
    }
    void read_bytes(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (!in_ || in_.gcount() != static_cast<std::streamsize>(n))
            throw DataError("unexpected end of file: " + path_);
    }
    void expect_magic(const char m[4]) {
        char got[4];
        read_bytes(got, 4);
        if (std::memcmp(got, m, 4) != 0)
            throw DataError("bad magic in " + path_ + " (expected " + std::string(m, 4) + ")");
    }
    std::uint16_t read_u16() { std::uint16_t v; read_bytes(&v, sizeof(v)); return v; }
    std::uint32_t read_u32() { std::uint32_t v; read_bytes(&v, sizeof(v)); return v; }
    std::uint64_t read_u64() { std::uint64_t v; read_bytes(&v, sizeof(v)); return v; }
    float read_f32() { float v; read_bytes(&v, sizeof(v)); return v; }
    std::string read_string() {
        std::string s(read_u16(), '\0');
        if (!s.empty()) read_bytes(s.data(), s.size());
        return s;
    }
    const std::string& path() const { return path_; }

private:
    std::ifstream in_;
    std::string path_;
};

}  // namespace mergerec
