#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "mergerec/errors.hpp"

namespace mergerec {

// FNV-1a over bytes; used for architecture fingerprints, config digests and
// artifact hashes in manifests. Not cryptographic, just stable.
class Fnv64 {
public:
    Fnv64& update(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            state_ ^= std::uint64_t(p[i]);
            state_ *= 0x100000001b3ULL;
        }
        return *this;
    }
    Fnv64& update(std::string_view s) { return update(s.data(), s.size()); }
    template <typename T>
    Fnv64& update_value(const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        return update(&v, sizeof(T));
    }
    std::uint64_t digest() const { return state_; }

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t hash_bytes(const void* data, std::size_t len) {
    return Fnv64().update(data, len).digest();
}

inline std::uint64_t hash_string(std::string_view s) { return hash_bytes(s.data(), s.size()); }

inline std::uint64_t hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file for hashing: " + path);
    Fnv64 h;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        h.update(buf, static_cast<std::size_t>(in.gcount()));
        if (!in) break;
    }
    return h.digest();
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace mergerec
