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

#pragma once

// Discretised paths, bands and digraph-shaped gestures in R^d, plus the maps
// they induce under a pointwise function.
//
// A path is a uniform sampling of [0,1] -> R^d. Concatenation drops the
// duplicated junction sample, which makes it strictly associative and makes
// the induced path map preserve it exactly. Homotopy classes are never
// computed; a Band is a concrete sampled fixed-endpoint homotopy.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace timbrecolor::gesture {

using Point = std::vector<double>;

/// Endpoints closer than this (max-norm) count as equal.
inline constexpr double kEndpointTolerance = 1e-9;

/// Max-norm distance between two points of equal dimension.
double distance(std::span<const double> a, std::span<const double> b);

class SampledPath {
public:
    /// `coords` holds the samples back to back, `dimension` values each. Needs
    /// at least 2 samples and finite coordinates; throws DomainError otherwise.
    SampledPath(std::size_t dimension, std::vector<double> coords);

    static SampledPath fromPoints(const std::vector<Point>& points);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return coords_.size() / dimension_; }
    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dimension_, dimension_};
    }
    std::span<const double> front() const { return point(0); }
    std::span<const double> back() const { return point(size() - 1); }
    const std::vector<double>& coords() const noexcept { return coords_; }

    bool operator==(const SampledPath&) const = default;

private:
    std::size_t dimension_;
    std::vector<double> coords_;
};

SampledPath constantPath(std::span<const double> point, std::size_t sampleCount);

/// t -> path(1 - t)
SampledPath reverse(const SampledPath& path);

/// `first` then `second`, without repeating the junction sample. Throws
/// EndpointError when last(first) and first(second) differ by more than
/// kEndpointTolerance, DomainError on a dimension mismatch.
SampledPath concatenate(const SampledPath& first, const SampledPath& second);

/// Rows of a sampled homotopy between two paths with shared endpoints.
class Band {
public:
    /// Throws DomainError on fewer than 2 rows or mismatched shapes, and
    /// EndpointError when a row leaves the fixed endpoints.
    explicit Band(std::vector<SampledPath> rows);

    const std::vector<SampledPath>& rows() const noexcept { return rows_; }
    const SampledPath& from() const { return rows_.front(); }
    const SampledPath& to() const { return rows_.back(); }

private:
    std::vector<SampledPath> rows_;
};

/// Row j = ((K-1-j) from + j to) / (K-1); rows 0 and K-1 are copies of the inputs.
Band linearBand(const SampledPath& from, const SampledPath& to, std::size_t rowCount);

struct Arrow {
    std::size_t source;
    std::size_t target;

    bool operator==(const Arrow&) const = default;
};

class Digraph {
public:
    Digraph(std::size_t vertexCount, std::vector<Arrow> arrows);

    /// v0 -> v1 -> ... -> v(n-1)
    static Digraph line(std::size_t vertexCount);

    std::size_t vertexCount() const noexcept { return vertexCount_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    bool operator==(const Digraph&) const = default;

private:
    std::size_t vertexCount_;
    std::vector<Arrow> arrows_;
};

/// One point per vertex and one path per arrow, every path running from the
/// point of its arrow's source to the point of its target.
class Gesture {
public:
    const Digraph& digraph() const noexcept { return digraph_; }
    const std::vector<Point>& vertexPoints() const noexcept { return vertexPoints_; }
    const std::vector<SampledPath>& arrowPaths() const noexcept { return arrowPaths_; }
    std::size_t dimension() const noexcept { return vertexPoints_.front().size(); }

private:
    friend Gesture makeGesture(Digraph, std::vector<Point>, std::vector<SampledPath>);
    Gesture(Digraph digraph, std::vector<Point> vertexPoints, std::vector<SampledPath> arrowPaths)
        : digraph_(std::move(digraph)),
          vertexPoints_(std::move(vertexPoints)),
          arrowPaths_(std::move(arrowPaths)) {}

    Digraph digraph_;
    std::vector<Point> vertexPoints_;
    std::vector<SampledPath> arrowPaths_;
};

/// Validates shapes and the endpoint law; EndpointError names the arrow.
Gesture makeGesture(Digraph digraph, std::vector<Point> vertexPoints, std::vector<SampledPath> arrowPaths);

using PointMap = std::function<Point(std::span<const double>)>;

/// Samplewise image of a path. Every image point must share one dimension.
SampledPath mapPath(const PointMap& f, const SampledPath& path);

/// Applies `f` to every vertex point and every path sample, then revalidates.
/// A failure inside `f` is rethrown as Error naming the vertex or arrow sample.
Gesture mapGesture(const PointMap& f, const Gesture& g);

struct AdsrParams {
    double attackLevel = 1.0;
    double sustainLevel = 0.6;
    double attackSec = 0.01;
    double decaySec = 0.05;
    double sustainSec = 0.5;
    double releaseSec = 0.2;
};

/// Envelope on the 5-vertex line digraph in the (time, amplitude) plane:
/// (0,0) -> (tA, attack) -> (tA+tD, sustain) -> (tA+tD+tS, sustain) -> (end, 0),
/// each arrow a straight path with `samplesPerSegment` samples.
Gesture adsrGesture(const AdsrParams& params, std::size_t samplesPerSegment);

/// Line-oriented text form:
///
///   digraph V A
///   a SRC DST            (A lines)
///   v X1 .. Xd           (V lines)
///   path ARROW S         (A blocks, each followed by S lines "X1 .. Xd")
///
/// '#' starts a comment. Numbers are written in shortest round-trip form.
std::string serializeGesture(const Gesture& g);
Gesture parseGesture(std::string_view text);

}  // namespace timbrecolor::gesture
