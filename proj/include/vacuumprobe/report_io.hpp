#ifndef VACUUMPROBE_REPORT_IO_HPP
#define VACUUMPROBE_REPORT_IO_HPP

// Deterministic result emission: decimal formatting with 17 significant
// digits, comma-separated CSV with LF line endings, and small helpers
// for writing artifacts. Identical inputs must produce identical bytes.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace vacuumprobe::io {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest-faithful decimal with up to 17 significant digits, '.' as the
// decimal separator regardless of locale.
std::string format_g17(double value);

std::string format_bool(bool value);

class CsvWriter {
  public:
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void row_raw(const std::vector<std::string>& cells);
    const std::string& text() const { return text_; }

  private:
    std::string text_;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

} // namespace vacuumprobe::io

#endif
