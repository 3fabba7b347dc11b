#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpblend/blenders.hpp"
#include "gpblend/guide.hpp"

namespace gpblend::cli {

/// Exit codes of the command-line surface.
enum Exit : int {
  kOk = 0,
  kIoError = 1,
  kValidation = 2,
  kPartialFailure = 3,
};

/// One line of a batch manifest.
struct ManifestEntry {
  std::filesystem::path src_path;
  std::filesystem::path dst_path;
  std::filesystem::path mask_path;
  std::filesystem::path out_path;
  Method method = Method::GpGan;
  GuideSpec guide;
  double beta = 1.0;
  std::optional<int> scales;
  std::vector<double> kernel = {0.25, 0.5, 0.25};
  double mask_threshold = 0.5;
};

/// Parses one JSON manifest line; throws gpblend::Error on bad content.
ManifestEntry parse_manifest_line(const std::string& line);

/// Runs `gpblend <subcommand> ...`; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpblend::cli
