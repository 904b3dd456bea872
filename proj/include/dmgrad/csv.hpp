#pragma once

#include <string>
#include <vector>

namespace dmgrad {

// RFC-4180-style CSV with a header row. Doubles are written as %.16e
// (17 significant digits), lossless for binary64 round trips.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void add_row(const std::vector<std::string>& fields);
    std::string str() const { return body_; }
    void write_file(const std::string& path) const;

    static std::string num(double v);

  private:
    size_t columns_;
    std::string body_;
};

}  // namespace dmgrad
