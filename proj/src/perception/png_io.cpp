#include "usv/perception/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace usv::perception {

void write_flat_image_png(const FlatImage& image, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open png for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("libpng write failed: " + path);
  }

  png_init_io(png, fp);
  png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<png_byte> row(static_cast<size_t>(image.width) * 3);
  for (int r = 0; r < image.height; ++r) {
    for (int c = 0; c < image.width; ++c) {
      for (int ch = 0; ch < 3; ++ch) {
        float v = image.channels[ch][r * image.width + c];
        row[c * 3 + ch] = static_cast<png_byte>(v * 255.0f + 0.5f);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

void write_flat_image_sidecar(const FlatImage& image, const std::string& png_path) {
  nlohmann::json j;
  j["width"] = image.width;
  j["height"] = image.height;
  j["meters_per_pixel"] = image.meters_per_pixel;
  j["window_m"] = image.meters_per_pixel * image.width;
  j["channels"] = {"xy", "yz", "xz"};

  std::ofstream f(png_path + ".json", std::ios::binary);
  if (!f) throw std::runtime_error("cannot write sidecar for: " + png_path);
  f << j.dump(2);
}

}  // namespace usv::perception
