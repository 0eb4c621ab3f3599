// Flat-image PNG export: one 8-bit RGB PNG (R = X-Y, G = Y-Z, B = X-Z)
// plus a JSON sidecar with the window metadata.
#pragma once

#include <string>

#include "usv/perception/flatten.hpp"

namespace usv::perception {

void write_flat_image_png(const FlatImage& image, const std::string& path);

// Writes "<path>.json" next to the PNG.
void write_flat_image_sidecar(const FlatImage& image, const std::string& png_path);

}  // namespace usv::perception
