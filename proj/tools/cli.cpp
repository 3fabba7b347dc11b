#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gpblend/error.hpp"
#include "gpblend/metrics.hpp"
#include "gpblend/png_io.hpp"

namespace gpblend::cli {
namespace {

using nlohmann::json;

std::vector<double> parse_kernel(const std::string& text) {
  std::vector<double> weights;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      weights.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadKernel, "cannot parse kernel weight '" + item + "'");
    }
  }
  if (weights.empty()) throw Error(ErrorKind::BadKernel, "empty kernel");
  return normalized_kernel(weights);
}

std::optional<int> parse_scales(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const int s = std::stoi(text, &used);
    if (used == text.size() && s >= 1) return s;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "scales must be 'auto' or a positive integer");
}

Method require_method(const std::string& name) {
  if (auto m = parse_method(name)) return *m;
  throw Error(ErrorKind::InvalidArgument,
              "unknown method '" + name + "' (gp-gan, poisson, multiband, copy-paste)");
}

GpParams params_of(const ManifestEntry& e) {
  GpParams p;
  p.beta = e.beta;
  p.gauss_kernel = e.kernel;
  p.scales = e.scales;
  return p;
}

// Loads, blends and writes one entry; returns the result record.
json run_entry(const ManifestEntry& e) {
  const auto start = std::chrono::steady_clock::now();
  const GpParams params = params_of(e);
  params.validate();
  e.guide.validate();
  if (!(e.mask_threshold >= 0.0 && e.mask_threshold <= 1.0))
    throw Error(ErrorKind::InvalidArgument, "mask threshold must lie in [0,1]");

  BlendRequest req;
  req.src = to_rgb(load_image(e.src_path));
  req.dst = to_rgb(load_image(e.dst_path));
  req.mask = load_mask(e.mask_path, e.mask_threshold);
  req.method = e.method;
  req.guide = e.guide;
  req.params = params;

  const BlendResult result = blend(req);
  save_image(result.image, e.out_path);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json record = {{"out", e.out_path.string()},
                 {"method", to_string(e.method)},
                 {"seconds", seconds},
                 {"S", result.scales},
                 {"beta", e.beta}};
  if (!result.converged) record["warning"] = "poisson solver did not converge";
  return record;
}

int exit_code_for(const Error& e) { return e.is_io() ? kIoError : kValidation; }

// Reports an exception on `err` and returns the matching exit code.
int report(std::ostream& err, const std::exception_ptr& ep) {
  try {
    std::rethrow_exception(ep);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
}

GuideSpec guide_from_json(const json& j) {
  if (j.is_string()) return GuideSpec::parse(j.get<std::string>());
  GuideSpec spec;
  const std::string kind = j.value("kind", "downsample");
  if (kind == "file") {
    spec.kind = GuideKind::File;
    spec.path = j.at("path").get<std::string>();
  } else if (kind != "downsample") {
    throw Error(ErrorKind::InvalidArgument, "unknown guide kind '" + kind + "'");
  }
  spec.size = j.value("size", 64);
  return spec;
}

std::filesystem::path required_path(const json& j, const char* key) {
  const std::string p = j.at(key).get<std::string>();
  if (p.empty()) throw Error(ErrorKind::InvalidArgument, std::string(key) + " is empty");
  return p;
}

void limit_omp_threads(int jobs) {
#ifdef _OPENMP
  if (jobs > 1) omp_set_num_threads(std::max(1, omp_get_num_procs() / jobs));
#else
  (void)jobs;
#endif
}

int cmd_batch(const std::string& manifest_path, int jobs, std::ostream& out, std::ostream& err) {
  if (jobs < 1) {
    err << "error: --jobs must be at least 1\n";
    return kValidation;
  }
  std::ifstream in(manifest_path);
  if (!in) {
    err << "error: cannot read manifest '" << manifest_path << "'\n";
    return kIoError;
  }
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  if (in.bad()) {
    err << "error: failed while reading manifest '" << manifest_path << "'\n";
    return kIoError;
  }

  std::vector<json> records(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    limit_omp_threads(jobs);
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      json record;
      try {
        record = run_entry(parse_manifest_line(lines[i]));
        record["ok"] = true;
      } catch (const std::exception& e) {
        record = {{"ok", false}, {"error", e.what()}};
      }
      record["index"] = i;
      records[i] = std::move(record);
    }
  };
  const int workers = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(lines.size(), 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all_ok = true;
  for (const json& r : records) {
    out << r.dump() << '\n';
    all_ok = all_ok && r.at("ok").get<bool>();
  }
  out.flush();
  return all_ok ? kOk : kPartialFailure;
}

struct MetricsArgs {
  std::string blended, src, dst, mask, guide;
  double mask_threshold = 0.5;
};

int cmd_metrics(const MetricsArgs& a, std::ostream& out) {
  const ImageF blended = to_rgb(load_image(a.blended));
  const ImageF src = to_rgb(load_image(a.src));
  const ImageF dst = to_rgb(load_image(a.dst));
  const MaskImage mask = load_mask(a.mask, a.mask_threshold);
  require_same_shape(blended, src, "metrics");
  require_same_shape(blended, dst, "metrics");
  require_same_dims(blended, mask, "metrics");

  json record = {{"grad_mse", gradient_mse(blended, src, dst, mask)}, {"color_mse", nullptr}};
  if (!a.guide.empty()) record["color_mse"] = colour_mse(blended, to_rgb(load_image(a.guide)));
  out << record.dump() << '\n';
  return kOk;
}

}  // namespace

ManifestEntry parse_manifest_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed manifest line: ") + e.what());
  }
  try {
    ManifestEntry e;
    e.src_path = required_path(j, "src_path");
    e.dst_path = required_path(j, "dst_path");
    e.mask_path = required_path(j, "mask_path");
    e.out_path = required_path(j, "out_path");
    e.method = require_method(j.at("method").get<std::string>());
    if (j.contains("guide")) e.guide = guide_from_json(j.at("guide"));
    e.beta = j.value("beta", 1.0);
    if (j.contains("scales")) {
      const json& s = j.at("scales");
      e.scales = s.is_string() ? parse_scales(s.get<std::string>()) : std::optional<int>(s.get<int>());
    }
    if (j.contains("sigma_kernel")) {
      const json& k = j.at("sigma_kernel");
      e.kernel = k.is_string() ? parse_kernel(k.get<std::string>())
                               : normalized_kernel(k.get<std::vector<double>>());
    }
    e.mask_threshold = j.value("mask_threshold", 0.5);
    return e;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad manifest entry: ") + ex.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gradient-domain image blending (GP-GAN pipeline and baselines)", "gpblend"};
  app.require_subcommand(1);

  std::string src, dst, mask, out_path, method, guide = "downsample", kernel = "1,2,1",
                                                 scales = "auto";
  double beta = 1.0, threshold = 0.5;
  CLI::App* blend_cmd = app.add_subcommand("blend", "Blend one source/destination/mask triple");
  blend_cmd->add_option("--src", src, "Source PNG")->required();
  blend_cmd->add_option("--dst", dst, "Destination PNG")->required();
  blend_cmd->add_option("--mask", mask, "Mask PNG")->required();
  blend_cmd->add_option("--out", out_path, "Output PNG")->required();
  blend_cmd->add_option("--method", method, "gp-gan | poisson | multiband | copy-paste")
      ->required();
  blend_cmd->add_option("--guide", guide, "downsample | file:PATH")->capture_default_str();
  blend_cmd->add_option("--beta", beta, "Colour-preserving weight")->capture_default_str();
  blend_cmd->add_option("--sigma-kernel", kernel, "Gaussian kernel weights, e.g. 1,2,1")
      ->capture_default_str();
  blend_cmd->add_option("--scales", scales, "auto | N")->capture_default_str();
  blend_cmd->add_option("--mask-threshold", threshold, "Mask binarization threshold")
      ->capture_default_str();

  std::string manifest;
  int jobs = 1;
  CLI::App* batch_cmd = app.add_subcommand("batch", "Blend every entry of a JSON-lines manifest");
  batch_cmd->add_option("manifest", manifest, "Manifest path")->required();
  batch_cmd->add_option("--jobs", jobs, "Concurrent workers")
      ->envname("GPBLEND_THREADS")
      ->capture_default_str();

  MetricsArgs margs;
  CLI::App* metrics_cmd = app.add_subcommand("metrics", "Proxy fidelity metrics of a blend");
  metrics_cmd->add_option("--blended", margs.blended, "Blended PNG")->required();
  metrics_cmd->add_option("--src", margs.src, "Source PNG")->required();
  metrics_cmd->add_option("--dst", margs.dst, "Destination PNG")->required();
  metrics_cmd->add_option("--mask", margs.mask, "Mask PNG")->required();
  metrics_cmd->add_option("--guide", margs.guide, "Guide PNG for color_mse");
  metrics_cmd->add_option("--mask-threshold", margs.mask_threshold, "Mask threshold")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (blend_cmd->parsed()) {
      ManifestEntry e;
      e.src_path = src;
      e.dst_path = dst;
      e.mask_path = mask;
      e.out_path = out_path;
      e.method = require_method(method);
      e.guide = GuideSpec::parse(guide);
      e.beta = beta;
      e.kernel = parse_kernel(kernel);
      e.scales = parse_scales(scales);
      e.mask_threshold = threshold;
      out << run_entry(e).dump() << '\n';
      return kOk;
    }
    if (batch_cmd->parsed()) return cmd_batch(manifest, jobs, out, err);
    if (metrics_cmd->parsed()) return cmd_metrics(margs, out);
  } catch (...) {
    return report(err, std::current_exception());
  }
  return kValidation;
}

}  // namespace gpblend::cli
