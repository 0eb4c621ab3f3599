#include "usv/perception/classifier.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace usv::perception {

using nlohmann::json;

CentroidModel train_centroid_model(
    const std::vector<std::pair<ClassLabel, FlatImage>>& labeled_images) {
  if (labeled_images.empty()) {
    throw std::invalid_argument("train_centroid_model: no samples");
  }

  const FlatImage& proto = labeled_images.front().second;
  CentroidModel model;
  std::array<std::vector<double>, 4 * 3> sums;  // class-major channel sums
  for (auto& s : sums) s.assign(proto.pixel_count(), 0.0);

  for (const auto& [label, img] : labeled_images) {
    if (img.width != proto.width || img.height != proto.height) {
      throw std::invalid_argument("train_centroid_model: image size mismatch");
    }
    size_t ci = static_cast<size_t>(label);
    for (int ch = 0; ch < 3; ++ch) {
      for (size_t i = 0; i < img.pixel_count(); ++i) {
        sums[ci * 3 + ch][i] += img.channels[ch][i];
      }
    }
    ++model.counts[ci];
  }

  std::string missing;
  for (ClassLabel cl : kAllClasses) {
    if (model.counts[static_cast<size_t>(cl)] == 0) {
      if (!missing.empty()) missing += ", ";
      missing += sim::to_string(cl);
    }
  }
  if (!missing.empty()) {
    throw std::invalid_argument("train_centroid_model: missing classes: " + missing);
  }

  for (size_t ci = 0; ci < 4; ++ci) {
    FlatImage& mean = model.means[ci];
    mean.width = proto.width;
    mean.height = proto.height;
    mean.meters_per_pixel = proto.meters_per_pixel;
    for (int ch = 0; ch < 3; ++ch) {
      mean.channels[ch].resize(proto.pixel_count());
      for (size_t i = 0; i < proto.pixel_count(); ++i) {
        mean.channels[ch][i] =
            static_cast<float>(sums[ci * 3 + ch][i] / model.counts[ci]);
      }
    }
    model.priors[ci] = static_cast<double>(model.counts[ci]) / labeled_images.size();
  }
  return model;
}

Classification classify(const CentroidModel& model, const FlatImage& image) {
  Classification out;
  double best = std::numeric_limits<double>::infinity();
  double dist_sum = 0.0;
  for (size_t ci = 0; ci < 4; ++ci) {
    if (model.means[ci].width != image.width || model.means[ci].height != image.height) {
      throw std::invalid_argument("classify: image size does not match the model");
    }
    out.distances[ci] = image_distance(model.means[ci], image);
    dist_sum += out.distances[ci];
    if (out.distances[ci] < best) {  // strict <, so ties keep the earlier class
      best = out.distances[ci];
      out.label = static_cast<ClassLabel>(ci);
    }
  }

  // Softmin over distances; temperature set by the mean distance so the
  // score is scale-free.
  double tau = dist_sum / 4.0 + 1e-12;
  double denom = 0.0;
  for (double d : out.distances) denom += std::exp(-(d - best) / tau);
  out.score = 1.0 / denom;
  return out;
}

namespace {

json image_to_json(const FlatImage& img) {
  json j;
  j["width"] = img.width;
  j["height"] = img.height;
  j["meters_per_pixel"] = img.meters_per_pixel;
  for (int ch = 0; ch < 3; ++ch) j["channels"][ch] = img.channels[ch];
  return j;
}

FlatImage image_from_json(const json& j) {
  FlatImage img;
  img.width = j.at("width").get<int>();
  img.height = j.at("height").get<int>();
  img.meters_per_pixel = j.at("meters_per_pixel").get<double>();
  for (int ch = 0; ch < 3; ++ch) {
    img.channels[ch] = j.at("channels").at(ch).get<std::vector<float>>();
    if (img.channels[ch].size() != img.pixel_count()) {
      throw std::runtime_error("model: channel size mismatch");
    }
  }
  return img;
}

}  // namespace

std::string centroid_model_to_json(const CentroidModel& model) {
  json j;
  j["schema_version"] = 1;
  for (size_t ci = 0; ci < 4; ++ci) {
    const char* name = sim::to_string(static_cast<ClassLabel>(ci));
    j["classes"][name]["mean"] = image_to_json(model.means[ci]);
    j["classes"][name]["count"] = model.counts[ci];
    j["classes"][name]["prior"] = model.priors[ci];
  }
  return j.dump(2);
}

CentroidModel centroid_model_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  CentroidModel model;
  for (size_t ci = 0; ci < 4; ++ci) {
    const char* name = sim::to_string(static_cast<ClassLabel>(ci));
    const auto& jc = j.at("classes").at(name);
    model.means[ci] = image_from_json(jc.at("mean"));
    model.counts[ci] = jc.at("count").get<int>();
    model.priors[ci] = jc.at("prior").get<double>();
  }
  return model;
}

void save_centroid_model(const CentroidModel& model, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write model: " + path);
  f << centroid_model_to_json(model);
}

CentroidModel load_centroid_model(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open model: " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  return centroid_model_from_json(buf.str());
}

}  // namespace usv::perception
