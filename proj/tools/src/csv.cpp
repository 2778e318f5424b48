#include "nfl_lab/csv.hpp"

#include <fstream>
#include <stdexcept>

namespace nfl_lab {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void CsvWriter::write(const std::filesystem::path& path) const { write_text_file(path, buffer_); }

}  // namespace nfl_lab
