// Nearest-centroid classifier over flattened pointclouds.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "usv/perception/flatten.hpp"
#include "usv/sim/types.hpp"

namespace usv::perception {

using ClassLabel = sim::ObjectKind;

inline constexpr std::array<ClassLabel, 4> kAllClasses = {
    ClassLabel::obstacle_buoy, ClassLabel::totem_buoy, ClassLabel::dock,
    ClassLabel::deliver_box};

struct CentroidModel {
  std::array<FlatImage, 4> means;   // indexed by ClassLabel
  std::array<int, 4> counts{0, 0, 0, 0};
  std::array<double, 4> priors{0, 0, 0, 0};
};

// Pixel-wise mean image per class. Throws std::invalid_argument listing
// the classes that have no samples.
CentroidModel train_centroid_model(
    const std::vector<std::pair<ClassLabel, FlatImage>>& labeled_images);

struct Classification {
  ClassLabel label = ClassLabel::obstacle_buoy;
  double score = 0.0;               // softmin-normalized margin in (0, 1]
  std::array<double, 4> distances;  // per-class Euclidean distance
};

// Nearest mean by Euclidean pixel distance; ties break by class order.
Classification classify(const CentroidModel& model, const FlatImage& image);

// JSON (de)serialization of the model.
std::string centroid_model_to_json(const CentroidModel& model);
CentroidModel centroid_model_from_json(const std::string& json_text);
void save_centroid_model(const CentroidModel& model, const std::string& path);
CentroidModel load_centroid_model(const std::string& path);

}  // namespace usv::perception
