// Copyright 2026 The timbrecolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "timbrecolor/ppm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "timbrecolor/error.hpp"

namespace timbrecolor {

Image::Image(std::size_t w, std::size_t h, SRGBColor fill) : width(w), height(h), rgb(w * h * 3) {
    fillRect(0, 0, w, h, fill);
}

SRGBColor Image::at(std::size_t x, std::size_t y) const {
    const std::size_t i = 3 * (y * width + x);
    return {rgb.at(i), rgb.at(i + 1), rgb.at(i + 2)};
}

void Image::set(std::size_t x, std::size_t y, SRGBColor c) {
    const std::size_t i = 3 * (y * width + x);
    rgb.at(i) = c.r;
    rgb.at(i + 1) = c.g;
    rgb.at(i + 2) = c.b;
}

void Image::fillRect(std::size_t x0, std::size_t y0, std::size_t w, std::size_t h, SRGBColor c) {
    for (std::size_t y = y0; y < y0 + h && y < height; ++y) {
        for (std::size_t x = x0; x < x0 + w && x < width; ++x) {
            set(x, y, c);
        }
    }
}

std::vector<std::uint8_t> encodePpm(const Image& image) {
    const std::string header =
        "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.rgb.begin(), image.rgb.end());
    return out;
}

Image decodePpm(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    auto token = [&]() {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(bytes[pos])) {
                ++pos;
            } else {
                break;
            }
        }
        std::string t;
        while (pos < bytes.size() && !std::isspace(bytes[pos])) t.push_back(static_cast<char>(bytes[pos++]));
        if (t.empty()) throw FormatError("truncated PPM header");
        return t;
    };
    if (token() != "P6") throw FormatError("not a binary PPM (magic)");
    const std::size_t w = std::stoul(token());
    const std::size_t h = std::stoul(token());
    if (token() != "255") throw FormatError("PPM max value must be 255");
    ++pos;  // single whitespace before the raster
    if (bytes.size() < pos + w * h * 3) throw FormatError("truncated PPM raster");
    Image image;
    image.width = w;
    image.height = h;
    image.rgb.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                     bytes.begin() + static_cast<std::ptrdiff_t>(pos + w * h * 3));
    return image;
}

void writePpm(const Image& image, const std::filesystem::path& path) {
    const auto bytes = encodePpm(image);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed: " + path.string());
}

Image readPpm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decodePpm(bytes);
}

}  // namespace timbrecolor
