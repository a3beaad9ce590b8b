#ifndef DECLOUDER_PLANE_HPP
#define DECLOUDER_PLANE_HPP

#include <cstdint>
#include <vector>

#include "declouder/errors.hpp"

namespace declouder {

/// A H x W grid of real intensities, row-major, nominally in [0,1].
/// Planes are value types; every filter takes them by const reference and
/// returns a fresh one, so they are safe to share across workers.
class Plane {
public:
    Plane() = default;
    Plane(int height, int width, double fill = 0.0);
    Plane(int height, int width, std::vector<double> data);

    int height() const { return height_; }
    int width() const { return width_; }
    std::size_t size() const { return data_.size(); }

    double at(int row, int col) const { return data_[idx(row, col)]; }
    double& at(int row, int col) { return data_[idx(row, col)]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    const double* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * width_; }
    double* row(int r) { return data_.data() + static_cast<std::size_t>(r) * width_; }

    double mean() const;
    Plane transposed() const;

    /// Throws ValueError if any value is NaN or infinite.
    void require_finite(const char* what) const;

private:
    std::size_t idx(int row, int col) const {
        return static_cast<std::size_t>(row) * width_ + col;
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<double> data_;
};

/// Three aligned planes, one per color channel.
struct RgbImage {
    Plane r, g, b;

    int height() const { return r.height(); }
    int width() const { return r.width(); }

    /// Throws ValueError unless all three planes share dimensions.
    void require_aligned() const;
};

/// Binary mask over a raster, one byte per pixel (0 or 1).
struct PixelMask {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> data;

    PixelMask() = default;
    PixelMask(int h, int w) : height(h), width(w), data(static_cast<std::size_t>(h) * w, 0) {}

    std::uint8_t at(int row, int col) const {
        return data[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return data[static_cast<std::size_t>(row) * width + col];
    }
};

/// Pointwise minimum over the three channels.
Plane min_of_channels(const RgbImage& img);

}  // namespace declouder

#endif
