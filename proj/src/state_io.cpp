#include "udtoda/state_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "udtoda/bbs.hpp"
#include "udtoda/path_transform.hpp"
#include "udtoda/toda.hpp"

namespace udtoda {

StateParseError::StateParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  if (trim(s).empty()) return parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct Field {
  std::string value;
  std::size_t line;
};

std::vector<Scalar> scalars(const Field& f, const std::string& key, char sep = ',') {
  std::vector<Scalar> out;
  for (const auto part : split(f.value, sep)) {
    try {
      out.push_back(Scalar::parse(part));
    } catch (const ScalarParseError& e) {
      throw StateParseError(f.line, "field " + key + ": " + e.what());
    }
  }
  return out;
}

std::int64_t integer(std::string_view text, std::size_t line, const std::string& key) {
  const Scalar s = [&] {
    try {
      return Scalar::parse(text);
    } catch (const ScalarParseError& e) {
      throw StateParseError(line, "field " + key + ": " + e.what());
    }
  }();
  if (!s.is_integer()) throw StateParseError(line, "field " + key + ": expected an integer site");
  return std::stoll(s.str());
}

std::string join(const std::vector<Scalar>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += v[i].str();
  }
  return out;
}

class FieldMap {
 public:
  explicit FieldMap(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto end = text.find('\n', start);
      const auto raw = text.substr(start, end == std::string_view::npos ? end : end - start);
      ++line_no;
      const auto line = trim(raw);
      if (!line.empty() && line.front() != '#') {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw StateParseError(line_no, "expected key=value");
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) throw StateParseError(line_no, "empty key");
        if (fields_.count(key)) throw StateParseError(line_no, "duplicate key '" + key + "'");
        fields_[key] = Field{std::string(trim(line.substr(eq + 1))), line_no};
      }
      if (end == std::string_view::npos) break;
      start = end + 1;
    }
    last_line_ = line_no;
  }

  const Field& require(const std::string& key) {
    const auto it = fields_.find(key);
    if (it == fields_.end()) throw StateParseError(last_line_, "missing key '" + key + "'");
    used_.push_back(key);
    return it->second;
  }

  const Field* optional(const std::string& key) {
    const auto it = fields_.find(key);
    if (it == fields_.end()) return nullptr;
    used_.push_back(key);
    return &it->second;
  }

  void reject_unused() const {
    for (const auto& [key, field] : fields_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw StateParseError(field.line, "unexpected key '" + key + "'");
      }
    }
  }

 private:
  std::map<std::string, Field> fields_;
  std::vector<std::string> used_;
  std::size_t last_line_ = 0;
};

// Splits `key=value` and checks the key.
std::string_view keyed(std::string_view cell, std::string_view key) {
  cell = trim(cell);
  const auto eq = cell.find('=');
  if (eq == std::string_view::npos || trim(cell.substr(0, eq)) != key) {
    throw StateParseError(0, "csv: expected '" + std::string(key) + "=...' but got '" +
                                 std::string(cell) + "'");
  }
  return trim(cell.substr(eq + 1));
}

std::vector<Scalar> csv_scalars(std::string_view cell, std::string_view key) {
  std::vector<Scalar> out;
  for (const auto part : split(keyed(cell, key), '|')) out.push_back(Scalar::parse(part));
  return out;
}

std::vector<std::string_view> csv_cells(std::string_view row, std::size_t expected) {
  auto cells = split(trim(row), ',');
  if (cells.size() != expected) {
    throw StateParseError(0, "csv: expected " + std::to_string(expected) + " cells, got " +
                                 std::to_string(cells.size()));
  }
  return cells;
}

std::size_t csv_step(std::string_view cell) {
  const Scalar s = Scalar::parse(cell);
  if (!s.is_integer() || s.sign() < 0) throw StateParseError(0, "csv: bad step column");
  return static_cast<std::size_t>(std::stoull(s.str()));
}

}  // namespace

// ---------------------------------------------------------------------------

AnyState parse_state(std::string_view text) {
  FieldMap f(text);
  const Field& type = f.require("type");
  if (type.value == "toda") {
    auto q = scalars(f.require("Q"), "Q");
    const Field* e_field = f.optional("E");
    auto e = e_field ? scalars(*e_field, "E") : std::vector<Scalar>{};
    f.reject_unused();
    return TodaState(std::move(q), std::move(e));
  }
  if (type.value == "periodic") {
    auto q = scalars(f.require("Q"), "Q");
    auto e = scalars(f.require("E"), "E");
    const Field* l_field = f.optional("L");
    f.reject_unused();
    if (!l_field) return PeriodicTodaState(std::move(q), std::move(e));
    auto l = scalars(*l_field, "L");
    if (l.size() != 1) throw StateParseError(l_field->line, "field L: expected one number");
    return PeriodicTodaState(std::move(q), std::move(e), l.front());
  }
  if (type.value == "bbs") {
    const Field& balls = f.require("balls");
    f.reject_unused();
    std::vector<std::int64_t> sites;
    for (const auto part : split(balls.value, ',')) sites.push_back(integer(part, balls.line, "balls"));
    return BbsState(std::move(sites));
  }
  if (type.value == "pl") {
    const Field& xf = f.require("x");
    const auto xs = scalars(xf, "x");
    const auto ys = scalars(f.require("y"), "y");
    const auto left = scalars(f.require("left"), "left");
    const auto right = scalars(f.require("right"), "right");
    f.reject_unused();
    if (xs.size() != ys.size()) throw StateParseError(xf.line, "fields x and y differ in length");
    if (left.size() != 1 || right.size() != 1) {
      throw StateParseError(xf.line, "fields left/right: expected one number each");
    }
    std::vector<Vertex> v;
    for (std::size_t i = 0; i < xs.size(); ++i) v.push_back({xs[i], ys[i]});
    return PLPath(std::move(v), left.front(), right.front());
  }
  throw StateParseError(type.line, "unknown type '" + type.value + "'");
}

AnyState load_state(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw StateParseError(0, "cannot open " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str());
}

std::string format_state(const TodaState& s) {
  return "type=toda\nQ=" + join(s.q(), ',') + "\nE=" + join(s.e(), ',') + "\n";
}

std::string format_state(const PeriodicTodaState& s) {
  return "type=periodic\nQ=" + join(s.q(), ',') + "\nE=" + join(s.e(), ',') +
         "\nL=" + s.circumference().str() + "\n";
}

std::string format_state(const BbsState& s) {
  std::string out = "type=bbs\nballs=";
  for (std::size_t i = 0; i < s.balls().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s.balls()[i]);
  }
  return out + "\n";
}

std::string format_state(const PLPath& p) {
  std::vector<Scalar> xs;
  std::vector<Scalar> ys;
  for (const auto& v : p.vertices()) {
    xs.push_back(v.x);
    ys.push_back(v.y);
  }
  return "type=pl\nx=" + join(xs, ',') + "\ny=" + join(ys, ',') + "\nleft=" +
         p.left_slope().str() + "\nright=" + p.right_slope().str() + "\n";
}

// ---------------------------------------------------------------------------

std::string csv_header(const TodaState&) { return "step,Q,E,mass"; }
std::string csv_header(const PeriodicTodaState&) { return "step,Q,E,mass"; }
std::string csv_header(const BbsState&) { return "step,balls,mass"; }

std::string csv_row(std::size_t step, const TodaState& s) {
  return std::to_string(step) + ",Q=" + join(s.q(), '|') + ",E=" + join(s.e(), '|') +
         ",mass=" + total_mass(s).str();
}

std::string csv_row(std::size_t step, const PeriodicTodaState& s) {
  return std::to_string(step) + ",Q=" + join(s.q(), '|') + ",E=" + join(s.e(), '|') +
         ",mass=" + total_mass(s).str();
}

std::string csv_row(std::size_t step, const BbsState& s) {
  std::string balls;
  for (std::size_t i = 0; i < s.balls().size(); ++i) {
    if (i > 0) balls += '|';
    balls += std::to_string(s.balls()[i]);
  }
  return std::to_string(step) + ",balls=" + balls + ",mass=" + std::to_string(s.count());
}

std::pair<std::size_t, TodaState> parse_toda_row(std::string_view row) {
  const auto cells = csv_cells(row, 4);
  return {csv_step(cells[0]), TodaState(csv_scalars(cells[1], "Q"), csv_scalars(cells[2], "E"))};
}

std::pair<std::size_t, PeriodicTodaState> parse_periodic_row(std::string_view row) {
  const auto cells = csv_cells(row, 4);
  return {csv_step(cells[0]),
          PeriodicTodaState(csv_scalars(cells[1], "Q"), csv_scalars(cells[2], "E"))};
}

std::pair<std::size_t, BbsState> parse_bbs_row(std::string_view row) {
  const auto cells = csv_cells(row, 3);
  std::vector<std::int64_t> sites;
  for (const auto part : split(keyed(cells[1], "balls"), '|')) sites.push_back(integer(part, 0, "balls"));
  return {csv_step(cells[0]), BbsState(std::move(sites))};
}

// ---------------------------------------------------------------------------

namespace {

using Polyline = std::vector<std::pair<Scalar, Scalar>>;

// Points of an alternating-slope path (given by a value function and its
// breakpoints) restricted to [lo, hi].
template <class Path>
Polyline sample(const Path& p, const IntervalList& breaks, const Scalar& lo, const Scalar& hi) {
  Polyline pts{{lo, p.value(lo)}};
  for (const auto& iv : breaks) {
    for (const Scalar* x : {&iv.a, &iv.b}) {
      if (*x > lo && *x < hi) pts.emplace_back(*x, p.value(*x));
    }
  }
  pts.emplace_back(hi, p.value(hi));
  return pts;
}

std::string draw(const std::vector<Polyline>& traces, const Scalar& lo, const Scalar& hi,
                 const std::string& title) {
  constexpr double kWidth = 800.0;
  constexpr double kBand = 60.0;
  constexpr double kMargin = 20.0;
  double span_y = 1e-9;
  for (const auto& t : traces) {
    double top = -1e300;
    double bottom = 1e300;
    for (const auto& [x, y] : t) {
      top = std::max(top, y.to_double());
      bottom = std::min(bottom, y.to_double());
    }
    span_y = std::max(span_y, top - bottom);
  }
  const double x0 = lo.to_double();
  const double span_x = std::max(1e-9, hi.to_double() - x0);
  const double sx = (kWidth - 2 * kMargin) / span_x;
  const double sy = (kBand * 0.8) / span_y;
  const double height = 2 * kMargin + kBand * static_cast<double>(traces.size());

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << kWidth << ' ' << height << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t k = 0; k < traces.size(); ++k) {
    // Each trace is centered vertically in its band.
    double top = -1e300;
    double bottom = 1e300;
    for (const auto& [x, y] : traces[k]) {
      top = std::max(top, y.to_double());
      bottom = std::min(bottom, y.to_double());
    }
    const double mid = 0.5 * (top + bottom);
    const double band_mid = kMargin + kBand * (static_cast<double>(k) + 0.5);
    os << "<polyline class=\"trace\" data-step=\"" << k
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < traces[k].size(); ++i) {
      const double px = kMargin + (traces[k][i].first.to_double() - x0) * sx;
      const double py = band_mid - (traces[k][i].second.to_double() - mid) * sy;
      if (i > 0) os << ' ';
      os << px << ',' << py;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_svg(const Trajectory<TodaState>& t) {
  std::vector<AlternatingPath> paths;
  Scalar hi(1);
  for (const auto& s : t.states) {
    paths.push_back(encode(s));
    hi = max(hi, paths.back().intervals().back().b);
  }
  const Scalar lo = -hi / Scalar(10);
  hi += hi / Scalar(10);
  std::vector<Polyline> traces;
  for (const auto& p : paths) traces.push_back(sample(p, p.intervals(), lo, hi));
  return draw(traces, lo, hi, "ultra-discrete Toda lattice");
}

std::string render_svg(const Trajectory<PeriodicTodaState>& t) {
  std::vector<Polyline> traces;
  const Scalar lo;
  const Scalar& hi = t.initial().circumference();
  for (const auto& s : t.states) {
    const auto p = encode_periodic(s);
    traces.push_back(sample(p, p.intervals(), lo, hi));
  }
  return draw(traces, lo, hi, "periodic ultra-discrete Toda lattice");
}

std::string render_svg(const Trajectory<BbsState>& t) {
  std::int64_t first = 0;
  std::int64_t last = 1;
  bool any = false;
  for (const auto& s : t.states) {
    if (s.empty()) continue;
    first = any ? std::min(first, s.balls().front()) : s.balls().front();
    last = any ? std::max(last, s.balls().back()) : s.balls().back();
    any = true;
  }
  const Scalar lo(first - 2);
  const Scalar hi(last + 2);
  std::vector<Polyline> traces;
  for (const auto& s : t.states) {
    const auto p = bbs_encode(s);
    traces.push_back(sample(p, p.intervals(), lo, hi));
  }
  return draw(traces, lo, hi, "box-ball system");
}

}  // namespace udtoda
