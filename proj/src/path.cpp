#include "loom/path.hpp"

#include <stdexcept>

#include "loom/errors.hpp"

namespace loom {

Path Path::constant(std::size_t size, Ambient ambient) {
  Path p;
  p.segs_.push_back({Weight::zero(size, ambient), Rational(1)});
  return p;
}

Path Path::linear(const Weight& lambda) {
  if (!lambda.is_integral())
    throw std::invalid_argument("linear path needs an integral weight, got " + lambda.key());
  return Path({{lambda, Rational(1)}});
}

Path::Path(std::vector<Segment> segments) {
  if (segments.empty()) throw std::invalid_argument("path needs at least one segment");
  const Ambient amb = segments.front().dir.ambient();
  const std::size_t n = segments.front().dir.size();
  Rational total = 0;
  for (const auto& s : segments) {
    if (s.dir.ambient() != amb)
      throw AmbientMismatch("path mixes classical and affine directions");
    if (s.dir.size() != n) throw std::invalid_argument("path directions of different rank");
    if (s.len <= 0) throw std::invalid_argument("segment duration must be positive");
    total += s.len;
  }
  if (total != 1)
    throw std::invalid_argument("segment durations sum to " + to_string(total) + ", not 1");

  Rational moving = 0;
  for (const auto& s : segments)
    if (!s.dir.is_zero()) moving += s.len;
  if (moving == 0) {
    segs_.push_back({Weight::zero(n, amb), Rational(1)});
    return;
  }
  for (auto& s : segments) {
    if (s.dir.is_zero()) continue;
    Segment t{s.dir * moving, s.len / moving};
    if (!segs_.empty() && segs_.back().dir == t.dir)
      segs_.back().len += t.len;
    else
      segs_.push_back(std::move(t));
  }
  if (!endpoint().is_integral())
    throw std::invalid_argument("path endpoint " + endpoint().key() + " is not integral");
}

Weight Path::endpoint() const {
  Weight w = Weight::zero(weight_size(), ambient());
  for (const auto& s : segs_) w += s.dir * s.len;
  return w;
}

std::vector<Rational> Path::breakpoints() const {
  std::vector<Rational> t{Rational(0)};
  for (const auto& s : segs_) t.push_back(t.back() + s.len);
  return t;
}

std::vector<Weight> Path::turning_points() const {
  std::vector<Weight> out{Weight::zero(weight_size(), ambient())};
  for (const auto& s : segs_) out.push_back(out.back() + s.dir * s.len);
  return out;
}

Weight Path::at(const Rational& tau) const {
  if (tau < 0 || tau > 1) throw std::out_of_range("path time outside [0, 1]");
  Weight w = Weight::zero(weight_size(), ambient());
  Rational t = 0;
  for (const auto& s : segs_) {
    if (tau <= t + s.len) return w + s.dir * (tau - t);
    w += s.dir * s.len;
    t += s.len;
  }
  return w;
}

std::string Path::key() const {
  std::string out;
  for (const auto& s : segs_) {
    if (!out.empty()) out += ';';
    out += s.dir.key();
    out += '*';
    out += to_string(s.len);
  }
  return out;
}

HeightProfile height_profile(const CartanData& cd, const Path& p, int i) {
  if (i < 0 || i >= cd.size()) throw std::out_of_range("node index out of range");
  HeightProfile h;
  h.times.push_back(0);
  h.values.push_back(0);
  h.max = 0;
  for (const auto& s : p.segments()) {
    h.times.push_back(h.times.back() + s.len);
    h.values.push_back(h.values.back() - s.len * s.dir[i]);
    if (h.values.back() > h.max) h.max = h.values.back();
  }
  return h;
}

namespace {

// Time in segment k (from times[k-1] to times[k]) where h crosses `level`
// strictly inside the segment, if any.
std::optional<Rational> interior_crossing(const HeightProfile& h, std::size_t k,
                                          const Rational& level) {
  const Rational& a = h.values[k - 1];
  const Rational& b = h.values[k];
  if ((a < level && b > level) || (a > level && b < level))
    return h.times[k - 1] + (level - a) / (b - a) * (h.times[k] - h.times[k - 1]);
  return std::nullopt;
}

// Splits the segment containing tau so that tau becomes a breakpoint.
std::vector<Segment> split_at(const std::vector<Segment>& segs, const Rational& tau) {
  std::vector<Segment> out;
  Rational t = 0;
  for (const auto& s : segs) {
    if (tau > t && tau < t + s.len) {
      out.push_back({s.dir, tau - t});
      out.push_back({s.dir, t + s.len - tau});
    } else {
      out.push_back(s);
    }
    t += s.len;
  }
  return out;
}

Path reflect_interval(const CartanData& cd, const Path& p, int i, const Rational& from,
                      const Rational& to) {
  auto segs = split_at(split_at(p.segments(), from), to);
  Rational t = 0;
  for (auto& s : segs) {
    if (t >= from && t + s.len <= to) s.dir = cd.reflect(i, s.dir);
    t += s.len;
  }
  return Path(std::move(segs));
}

}  // namespace

Extrema h_extrema(const CartanData& cd, const Path& p, int i) {
  const HeightProfile h = height_profile(cd, p, i);
  if (!is_integer(h.max))
    throw IntegralityViolation("maximum of h^" + std::to_string(i) + " is " +
                               to_string(h.max) + " on path " + p.key());
  Extrema ex;
  ex.epsilon = to_long(h.max);
  ex.phi = to_long(h.max - h.values.back());
  const std::size_t last = h.values.size() - 1;
  const Rational below = h.max - 1;

  if (h.max > 0) {
    std::size_t kp = 0;
    while (h.values[kp] != h.max) ++kp;
    ex.e_plus = h.times[kp];
    for (std::size_t k = kp; k >= 1 && !ex.e_minus; --k) {
      if (auto c = interior_crossing(h, k, below))
        ex.e_minus = *c;
      else if (h.values[k - 1] == below)
        ex.e_minus = h.times[k - 1];
    }
  }

  std::size_t kf = last;
  while (h.values[kf] != h.max) --kf;
  if (kf != last) {
    ex.f_plus = h.times[kf];
    for (std::size_t k = kf + 1; k <= last && !ex.f_minus; ++k) {
      if (auto c = interior_crossing(h, k, below))
        ex.f_minus = *c;
      else if (h.values[k] == below)
        ex.f_minus = h.times[k];
    }
  }
  return ex;
}

long epsilon(const CartanData& cd, const Path& p, int i) { return h_extrema(cd, p, i).epsilon; }

long phi(const CartanData& cd, const Path& p, int i) { return h_extrema(cd, p, i).phi; }

std::optional<Path> raise(const CartanData& cd, const Path& p, int i) {
  const Extrema ex = h_extrema(cd, p, i);
  if (!ex.e_plus) return std::nullopt;
  return reflect_interval(cd, p, i, *ex.e_minus, *ex.e_plus);
}

std::optional<Path> lower(const CartanData& cd, const Path& p, int i) {
  const Extrema ex = h_extrema(cd, p, i);
  if (!ex.f_plus) return std::nullopt;
  return reflect_interval(cd, p, i, *ex.f_plus, *ex.f_minus);
}

Path weyl_act(const CartanData& cd, const Path& p, int i) {
  const long n = to_long(cd.pairing(i, p.endpoint()));
  Path out = p;
  for (long k = 0; k < (n >= 0 ? n : -n); ++k) {
    auto next = n >= 0 ? lower(cd, out, i) : raise(cd, out, i);
    if (!next) throw std::logic_error("string too short for Weyl action on " + p.key());
    out = std::move(*next);
  }
  return out;
}

Path concat(const std::vector<Path>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat needs at least one path");
  const Rational k(static_cast<long>(parts.size()));
  std::vector<Segment> segs;
  for (const auto& p : parts) {
    if (p.ambient() != parts.front().ambient())
      throw AmbientMismatch("concat of paths in different ambients");
    for (const auto& s : p.segments()) segs.push_back({s.dir * k, s.len / k});
  }
  return Path(std::move(segs));
}

Path stretch(const Path& p, long n) {
  if (n <= 0) throw std::invalid_argument("stretch factor must be positive");
  std::vector<Segment> segs;
  for (const auto& s : p.segments()) segs.push_back({s.dir * Rational(n), s.len});
  return Path(std::move(segs));
}

Path project(const Path& p) {
  if (p.ambient() != Ambient::Affine) throw AmbientMismatch("Ξ needs an affine path");
  std::vector<Segment> segs;
  for (const auto& s : p.segments()) segs.push_back({s.dir.classical(), s.len});
  return Path(std::move(segs));
}

std::vector<Weight> segment_uniform(const Path& p, long n) {
  if (n <= 0) throw std::invalid_argument("grid size must be positive");
  const Rational grid(n);
  for (const auto& t : p.breakpoints())
    if (!is_integer(t * grid))
      throw GridViolation("breakpoint " + to_string(t) + " of " + p.key() +
                          " is not a multiple of 1/" + std::to_string(n));
  std::vector<Weight> out;
  out.reserve(n);
  for (const auto& s : p.segments()) {
    const long cells = to_long(s.len * grid);
    for (long c = 0; c < cells; ++c) out.push_back(s.dir);
  }
  return out;
}

Path from_uniform(const std::vector<Weight>& directions) {
  if (directions.empty()) throw std::invalid_argument("need at least one direction");
  const Rational len = ratio(1, static_cast<long>(directions.size()));
  std::vector<Segment> segs;
  for (const auto& d : directions) segs.push_back({d, len});
  return Path(std::move(segs));
}

}  // namespace loom
