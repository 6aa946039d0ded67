#pragma once

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace losdof::cli {

/// Bad flags, bad values, unwritable paths: reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest text that round-trips to 12 significant digits; nan/inf print as "nan"/"inf".
std::string fmt(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(std::initializer_list<std::string_view> names);

  template <class... T>
  void row(const T&... fields) {
    bool first = true;
    ((emit(fields, first)), ...);
    out_ << '\n';
  }

 private:
  void separator(bool& first) {
    if (!first) out_ << ',';
    first = false;
  }
  void emit(double v, bool& first) {
    separator(first);
    out_ << fmt(v);
  }
  void emit(std::size_t v, bool& first) {
    separator(first);
    out_ << v;
  }
  void emit(std::string_view s, bool& first) {
    separator(first);
    out_ << s;
  }
  void emit(const std::string& s, bool& first) { emit(std::string_view(s), first); }
  void emit(const char* s, bool& first) { emit(std::string_view(s), first); }

  std::ostream& out_;
};

/// "-" selects the fallback stream (normally stdout); anything else is a file opened for writing.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback);
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream& fallback_;
};

}  // namespace losdof::cli
