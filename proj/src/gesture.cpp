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

#include "timbrecolor/gesture.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "timbrecolor/error.hpp"

namespace timbrecolor::gesture {

namespace {

void appendNumber(std::string& out, double v) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    out.append(buf, end);
}

void appendPoint(std::string& out, std::span<const double> p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out.push_back(' ');
        appendNumber(out, p[i]);
    }
}

std::string describe(std::span<const double> p) {
    std::string s = "(";
    appendPoint(s, p);
    return s + ")";
}

}  // namespace

double distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DomainError("distance: dimension mismatch");
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::fabs(a[i] - b[i]));
    }
    return d;
}

SampledPath::SampledPath(std::size_t dimension, std::vector<double> coords)
    : dimension_(dimension), coords_(std::move(coords)) {
    if (dimension_ == 0) {
        throw DomainError("path dimension must be at least 1");
    }
    if (coords_.size() % dimension_ != 0) {
        throw DomainError("path coordinates are not a whole number of points");
    }
    if (coords_.size() / dimension_ < 2) {
        throw DomainError("a path needs at least 2 samples");
    }
    if (!std::all_of(coords_.begin(), coords_.end(), [](double v) { return std::isfinite(v); })) {
        throw DomainError("path has a non-finite coordinate");
    }
}

SampledPath SampledPath::fromPoints(const std::vector<Point>& points) {
    if (points.empty()) {
        throw DomainError("a path needs at least 2 samples");
    }
    const std::size_t dim = points.front().size();
    std::vector<double> coords;
    coords.reserve(dim * points.size());
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw DomainError("path points differ in dimension");
        }
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return SampledPath(dim, std::move(coords));
}

SampledPath constantPath(std::span<const double> point, std::size_t sampleCount) {
    std::vector<double> coords;
    coords.reserve(point.size() * sampleCount);
    for (std::size_t i = 0; i < sampleCount; ++i) {
        coords.insert(coords.end(), point.begin(), point.end());
    }
    return SampledPath(point.size(), std::move(coords));
}

SampledPath reverse(const SampledPath& path) {
    std::vector<double> coords;
    coords.reserve(path.coords().size());
    for (std::size_t i = path.size(); i-- > 0;) {
        const auto p = path.point(i);
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return SampledPath(path.dimension(), std::move(coords));
}

SampledPath concatenate(const SampledPath& first, const SampledPath& second) {
    if (first.dimension() != second.dimension()) {
        throw DomainError("concatenate: paths differ in dimension");
    }
    if (distance(first.back(), second.front()) > kEndpointTolerance) {
        throw EndpointError("concatenate: first path ends at " + describe(first.back()) +
                            " but second starts at " + describe(second.front()));
    }
    std::vector<double> coords(first.coords());
    coords.insert(coords.end(), second.coords().begin() + static_cast<std::ptrdiff_t>(second.dimension()),
                  second.coords().end());
    return SampledPath(first.dimension(), std::move(coords));
}

Band::Band(std::vector<SampledPath> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) {
        throw DomainError("a band needs at least 2 rows");
    }
    const auto& first = rows_.front();
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const auto& row = rows_[j];
        if (row.dimension() != first.dimension() || row.size() != first.size()) {
            throw DomainError("band row " + std::to_string(j) + " differs in shape from row 0");
        }
        if (distance(row.front(), first.front()) > kEndpointTolerance ||
            distance(row.back(), first.back()) > kEndpointTolerance) {
            throw EndpointError("band row " + std::to_string(j) + " does not keep the endpoints fixed");
        }
    }
}

Band linearBand(const SampledPath& from, const SampledPath& to, std::size_t rowCount) {
    if (rowCount < 2) {
        throw DomainError("linearBand: need at least 2 rows");
    }
    if (from.dimension() != to.dimension() || from.size() != to.size()) {
        throw DomainError("linearBand: paths differ in dimension or sample count");
    }
    if (distance(from.front(), to.front()) > kEndpointTolerance ||
        distance(from.back(), to.back()) > kEndpointTolerance) {
        throw EndpointError("linearBand: paths do not share their endpoints");
    }
    std::vector<SampledPath> rows;
    rows.reserve(rowCount);
    rows.push_back(from);
    const double denom = static_cast<double>(rowCount - 1);
    for (std::size_t j = 1; j + 1 < rowCount; ++j) {
        const double wFrom = static_cast<double>(rowCount - 1 - j);
        const double wTo = static_cast<double>(j);
        std::vector<double> coords(from.coords().size());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            coords[i] = (wFrom * from.coords()[i] + wTo * to.coords()[i]) / denom;
        }
        rows.emplace_back(from.dimension(), std::move(coords));
    }
    rows.push_back(to);
    return Band(std::move(rows));
}

Digraph::Digraph(std::size_t vertexCount, std::vector<Arrow> arrows)
    : vertexCount_(vertexCount), arrows_(std::move(arrows)) {
    if (vertexCount_ == 0) {
        throw DomainError("a digraph needs at least one vertex");
    }
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
        if (arrows_[a].source >= vertexCount_ || arrows_[a].target >= vertexCount_) {
            throw DomainError("arrow " + std::to_string(a) + " refers to a missing vertex");
        }
    }
}

Digraph Digraph::line(std::size_t vertexCount) {
    std::vector<Arrow> arrows;
    for (std::size_t v = 0; v + 1 < vertexCount; ++v) {
        arrows.push_back({v, v + 1});
    }
    return Digraph(vertexCount, std::move(arrows));
}

Gesture makeGesture(Digraph digraph, std::vector<Point> vertexPoints, std::vector<SampledPath> arrowPaths) {
    if (vertexPoints.size() != digraph.vertexCount()) {
        throw DomainError("gesture has " + std::to_string(vertexPoints.size()) + " vertex points for " +
                          std::to_string(digraph.vertexCount()) + " vertices");
    }
    if (arrowPaths.size() != digraph.arrows().size()) {
        throw DomainError("gesture has " + std::to_string(arrowPaths.size()) + " paths for " +
                          std::to_string(digraph.arrows().size()) + " arrows");
    }
    const std::size_t dim = vertexPoints.front().size();
    if (dim == 0) {
        throw DomainError("gesture points need dimension at least 1");
    }
    for (std::size_t v = 0; v < vertexPoints.size(); ++v) {
        if (vertexPoints[v].size() != dim) {
            throw DomainError("vertex " + std::to_string(v) + " differs in dimension");
        }
    }
    for (std::size_t a = 0; a < arrowPaths.size(); ++a) {
        const auto& path = arrowPaths[a];
        const auto& arrow = digraph.arrows()[a];
        if (path.dimension() != dim) {
            throw DomainError("path of arrow " + std::to_string(a) + " differs in dimension");
        }
        if (distance(path.front(), vertexPoints[arrow.source]) > kEndpointTolerance) {
            throw EndpointError("arrow " + std::to_string(a) + ": path starts at " + describe(path.front()) +
                                ", source vertex " + std::to_string(arrow.source) + " is at " +
                                describe(vertexPoints[arrow.source]));
        }
        if (distance(path.back(), vertexPoints[arrow.target]) > kEndpointTolerance) {
            throw EndpointError("arrow " + std::to_string(a) + ": path ends at " + describe(path.back()) +
                                ", target vertex " + std::to_string(arrow.target) + " is at " +
                                describe(vertexPoints[arrow.target]));
        }
    }
    return Gesture(std::move(digraph), std::move(vertexPoints), std::move(arrowPaths));
}

SampledPath mapPath(const PointMap& f, const SampledPath& path) {
    std::vector<double> coords;
    std::size_t dim = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const Point image = f(path.point(i));
        if (i == 0) {
            dim = image.size();
            coords.reserve(dim * path.size());
        } else if (image.size() != dim) {
            throw DomainError("mapPath: image of sample " + std::to_string(i) + " changes dimension");
        }
        coords.insert(coords.end(), image.begin(), image.end());
    }
    return SampledPath(dim, std::move(coords));
}

Gesture mapGesture(const PointMap& f, const Gesture& g) {
    std::vector<Point> vertices;
    vertices.reserve(g.vertexPoints().size());
    for (std::size_t v = 0; v < g.vertexPoints().size(); ++v) {
        try {
            vertices.push_back(f(g.vertexPoints()[v]));
        } catch (const std::exception& e) {
            throw Error("mapGesture: map failed at vertex " + std::to_string(v) + ": " + e.what());
        }
    }
    std::vector<SampledPath> paths;
    paths.reserve(g.arrowPaths().size());
    for (std::size_t a = 0; a < g.arrowPaths().size(); ++a) {
        const auto& path = g.arrowPaths()[a];
        std::size_t sample = 0;
        const PointMap located = [&](std::span<const double> p) {
            Point image = f(p);
            ++sample;
            return image;
        };
        try {
            paths.push_back(mapPath(located, path));
        } catch (const std::exception& e) {
            throw Error("mapGesture: map failed at arrow " + std::to_string(a) + " sample " +
                        std::to_string(sample) + ": " + e.what());
        }
    }
    return makeGesture(g.digraph(), std::move(vertices), std::move(paths));
}

Gesture adsrGesture(const AdsrParams& p, std::size_t samplesPerSegment) {
    for (double level : {p.attackLevel, p.sustainLevel}) {
        if (!(level >= 0.0 && level <= 1.0)) {
            throw DomainError("ADSR levels must lie in [0, 1]");
        }
    }
    for (double duration : {p.attackSec, p.decaySec, p.sustainSec, p.releaseSec}) {
        if (!(duration > 0.0) || !std::isfinite(duration)) {
            throw DomainError("ADSR durations must be positive so the vertex times increase");
        }
    }
    if (samplesPerSegment < 2) {
        throw DomainError("ADSR segments need at least 2 samples");
    }
    const double t1 = p.attackSec;
    const double t2 = t1 + p.decaySec;
    const double t3 = t2 + p.sustainSec;
    const double t4 = t3 + p.releaseSec;
    std::vector<Point> vertices{
        {0.0, 0.0}, {t1, p.attackLevel}, {t2, p.sustainLevel}, {t3, p.sustainLevel}, {t4, 0.0}};

    std::vector<SampledPath> paths;
    for (std::size_t a = 0; a + 1 < vertices.size(); ++a) {
        const Point& from = vertices[a];
        const Point& to = vertices[a + 1];
        std::vector<double> coords;
        coords.reserve(2 * samplesPerSegment);
        for (std::size_t i = 0; i < samplesPerSegment; ++i) {
            if (i + 1 == samplesPerSegment) {
                coords.insert(coords.end(), to.begin(), to.end());
                break;
            }
            const double s = static_cast<double>(i) / static_cast<double>(samplesPerSegment - 1);
            for (std::size_t d = 0; d < 2; ++d) {
                coords.push_back(from[d] + s * (to[d] - from[d]));
            }
        }
        paths.emplace_back(2, std::move(coords));
    }
    Digraph digraph = Digraph::line(vertices.size());
    return makeGesture(std::move(digraph), std::move(vertices), std::move(paths));
}

std::string serializeGesture(const Gesture& g) {
    std::string out = "digraph " + std::to_string(g.digraph().vertexCount()) + " " +
                      std::to_string(g.digraph().arrows().size()) + "\n";
    for (const auto& arrow : g.digraph().arrows()) {
        out += "a " + std::to_string(arrow.source) + " " + std::to_string(arrow.target) + "\n";
    }
    for (const auto& p : g.vertexPoints()) {
        out += "v ";
        appendPoint(out, p);
        out += "\n";
    }
    for (std::size_t a = 0; a < g.arrowPaths().size(); ++a) {
        const auto& path = g.arrowPaths()[a];
        out += "path " + std::to_string(a) + " " + std::to_string(path.size()) + "\n";
        for (std::size_t i = 0; i < path.size(); ++i) {
            appendPoint(out, path.point(i));
            out += "\n";
        }
    }
    return out;
}

namespace {

class LineReader {
public:
    explicit LineReader(std::string_view text) : text_(text) {}

    // Next non-blank, comment-stripped line split into tokens.
    std::vector<std::string_view> next(const char* expecting) {
        while (pos_ <= text_.size()) {
            const auto eol = std::min(text_.find('\n', pos_), text_.size());
            std::string_view line = text_.substr(pos_, eol - pos_);
            pos_ = eol + 1;
            ++lineNo_;
            if (const auto hash = line.find('#'); hash != std::string_view::npos) {
                line = line.substr(0, hash);
            }
            std::vector<std::string_view> tokens;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
                const std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
                if (i > start) tokens.push_back(line.substr(start, i - start));
            }
            if (!tokens.empty()) return tokens;
        }
        throw FormatError(std::string("unexpected end of input, expecting ") + expecting, lineNo_);
    }

    bool atEnd() {
        const std::size_t savedPos = pos_;
        const std::size_t savedLine = lineNo_;
        try {
            next("");
        } catch (const FormatError&) {
            return true;
        }
        pos_ = savedPos;
        lineNo_ = savedLine;
        return false;
    }

    std::size_t lineNo() const noexcept { return lineNo_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t lineNo_ = 0;
};

template <typename T>
T parseToken(std::string_view token, std::size_t lineNo) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError("bad number '" + std::string(token) + "'", lineNo);
    }
    return value;
}

Point parsePoint(std::span<const std::string_view> tokens, std::size_t lineNo) {
    Point p;
    p.reserve(tokens.size());
    for (auto t : tokens) p.push_back(parseToken<double>(t, lineNo));
    return p;
}

}  // namespace

Gesture parseGesture(std::string_view text) {
    LineReader reader(text);
    auto header = reader.next("'digraph V A'");
    if (header.size() != 3 || header[0] != "digraph") {
        throw FormatError("expected header 'digraph V A'", reader.lineNo());
    }
    const auto vertexCount = parseToken<std::size_t>(header[1], reader.lineNo());
    const auto arrowCount = parseToken<std::size_t>(header[2], reader.lineNo());

    std::vector<Arrow> arrows;
    for (std::size_t a = 0; a < arrowCount; ++a) {
        auto tokens = reader.next("an arrow line 'a SRC DST'");
        if (tokens.size() != 3 || tokens[0] != "a") {
            throw FormatError("expected arrow line 'a SRC DST'", reader.lineNo());
        }
        arrows.push_back({parseToken<std::size_t>(tokens[1], reader.lineNo()),
                          parseToken<std::size_t>(tokens[2], reader.lineNo())});
    }
    Digraph digraph(vertexCount, std::move(arrows));

    std::vector<Point> vertices;
    for (std::size_t v = 0; v < vertexCount; ++v) {
        auto tokens = reader.next("a vertex line 'v X1 .. Xd'");
        if (tokens.size() < 2 || tokens[0] != "v") {
            throw FormatError("expected vertex line 'v X1 .. Xd'", reader.lineNo());
        }
        vertices.push_back(parsePoint(std::span(tokens).subspan(1), reader.lineNo()));
    }

    std::vector<SampledPath> paths;
    for (std::size_t a = 0; a < arrowCount; ++a) {
        auto tokens = reader.next("a path block 'path ARROW S'");
        if (tokens.size() != 3 || tokens[0] != "path") {
            throw FormatError("expected path block header 'path ARROW S'", reader.lineNo());
        }
        if (parseToken<std::size_t>(tokens[1], reader.lineNo()) != a) {
            throw FormatError("path blocks must appear in arrow order; expected arrow " + std::to_string(a),
                              reader.lineNo());
        }
        const auto samples = parseToken<std::size_t>(tokens[2], reader.lineNo());
        std::vector<Point> points;
        for (std::size_t i = 0; i < samples; ++i) {
            auto row = reader.next("a path sample line");
            points.push_back(parsePoint(row, reader.lineNo()));
        }
        try {
            paths.push_back(SampledPath::fromPoints(points));
        } catch (const DomainError& e) {
            throw FormatError(std::string("path ") + std::to_string(a) + ": " + e.what(), reader.lineNo());
        }
    }
    if (!reader.atEnd()) {
        throw FormatError("trailing content after the last path block", reader.lineNo() + 1);
    }
    return makeGesture(std::move(digraph), std::move(vertices), std::move(paths));
}

}  // namespace timbrecolor::gesture
