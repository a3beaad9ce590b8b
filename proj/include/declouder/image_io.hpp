#ifndef DECLOUDER_IMAGE_IO_HPP
#define DECLOUDER_IMAGE_IO_HPP

#include <filesystem>

#include "declouder/plane.hpp"

namespace declouder {

/// Loads an 8- or 16-bit PNG or binary PPM (P6) and normalizes every channel
/// to [0,1] by the format's max value. Grayscale and paletted PNGs are
/// expanded to RGB; alpha is dropped.
RgbImage load_image(const std::filesystem::path& path);

/// Writes an image as 8-bit RGB. Values are clamped to [0,1] and quantized
/// with round-half-up. The container is chosen by extension: ".ppm" writes
/// binary PPM, anything else writes PNG.
void save_image(const RgbImage& img, const std::filesystem::path& path);

/// Renders a single plane as an 8-bit grayscale image (same clamping and
/// quantization as save_image).
void save_plane(const Plane& plane, const std::filesystem::path& path);

}  // namespace declouder

#endif
