#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <type_traits>

namespace nfl_lab {

// Fixed-format numeric rendering so identical runs produce identical bytes.
inline std::string fmt_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

inline std::string fmt_u64(std::uint64_t value) {
    char buffer[24];
    std::snprintf(buffer, sizeof buffer, "%llu", static_cast<unsigned long long>(value));
    return buffer;
}

// Accumulates rows in memory and writes the file in one shot.
class CsvWriter {
  public:
    explicit CsvWriter(std::string header) : buffer_(std::move(header)) { buffer_ += '\n'; }

    void raw_row(const std::string& row) {
        buffer_ += row;
        buffer_ += '\n';
    }

    template <typename... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((buffer_ += (first ? (first = false, std::string()) : std::string(",")) + field_text(fields)),
         ...);
        buffer_ += '\n';
    }

    const std::string& text() const { return buffer_; }

    void write(const std::filesystem::path& path) const;

  private:
    static std::string field_text(const std::string& s) { return s; }
    static std::string field_text(const char* s) { return s; }
    static std::string field_text(double v) { return fmt_double(v); }
    template <typename Int>
        requires std::is_integral_v<Int>
    static std::string field_text(Int v) {
        return std::to_string(v);
    }

    std::string buffer_;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nfl_lab
