#include "declouder/plane.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace declouder {

Plane::Plane(int height, int width, double fill)
    : height_(height), width_(width),
      data_(static_cast<std::size_t>(std::max(height, 0)) * std::max(width, 0), fill) {
    if (height <= 0 || width <= 0) {
        throw ValueError("Plane dimensions must be positive, got " + std::to_string(height) +
                         "x" + std::to_string(width));
    }
}

Plane::Plane(int height, int width, std::vector<double> data)
    : height_(height), width_(width), data_(std::move(data)) {
    if (height <= 0 || width <= 0) {
        throw ValueError("Plane dimensions must be positive");
    }
    if (data_.size() != static_cast<std::size_t>(height) * width) {
        throw ValueError("Plane data length " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(height) + "x" + std::to_string(width));
    }
}

double Plane::mean() const {
    double sum = 0.0;
    for (double v : data_) sum += v;
    return data_.empty() ? 0.0 : sum / static_cast<double>(data_.size());
}

Plane Plane::transposed() const {
    Plane out(width_, height_);
    for (int r = 0; r < height_; ++r) {
        for (int c = 0; c < width_; ++c) {
            out.at(c, r) = at(r, c);
        }
    }
    return out;
}

void Plane::require_finite(const char* what) const {
    for (double v : data_) {
        if (!std::isfinite(v)) {
            throw ValueError(std::string(what) + ": plane contains a non-finite value");
        }
    }
}

void RgbImage::require_aligned() const {
    if (g.height() != r.height() || g.width() != r.width() ||
        b.height() != r.height() || b.width() != r.width()) {
        throw ValueError("RgbImage channels do not share dimensions");
    }
}

Plane min_of_channels(const RgbImage& img) {
    img.require_aligned();
    Plane out(img.height(), img.width());
    const auto& rd = img.r.data();
    const auto& gd = img.g.data();
    const auto& bd = img.b.data();
    auto& od = out.data();
    for (std::size_t i = 0; i < od.size(); ++i) {
        od[i] = std::min(rd[i], std::min(gd[i], bd[i]));
    }
    return out;
}

}  // namespace declouder
