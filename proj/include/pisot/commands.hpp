#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace pisot::cli {

/// Exit statuses shared by all commands.
enum ExitCode : int { kSuccess = 0, kFalse = 1, kInputError = 2 };

int cmd_analyze(const std::string& file, std::ostream& out, std::ostream& err);

int cmd_window(const std::string& file, int iterations, const std::string& out_svg,
               const std::optional<std::string>& out_text, std::ostream& out, std::ostream& err);

int cmd_tiling(const std::string& file, std::size_t length, const std::string& out_svg,
               const std::optional<std::string>& out_text, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& file1, const std::string& file2,
               const std::optional<std::string>& rho_file, int depth, std::ostream& out,
               std::ostream& err);

struct CompareOptions {
  std::size_t k = 10;
  std::size_t prefix = 10'000;
  std::optional<std::string> rule;
  int levels = 6;
};

int cmd_compare(const std::string& file1, const std::string& file2, const CompareOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace pisot::cli
