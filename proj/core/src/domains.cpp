#include "hs/domains.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>

#include "hs/errors.hpp"

namespace hs {

namespace {

// distance to boundary allows a hair of slack for round-off at the boundary
constexpr double kMembershipSlack = 1e-12;

[[noreturn]] void outside(const Domain& d) {
  throw MembershipError("point outside domain " + d.describe());
}

}  // namespace

Domain Domain::half_space(int dim) {
  Domain d;
  d.kind = DomainKind::half_space;
  d.dim = dim;
  return d;
}

Domain Domain::ball(Point center, double radius) {
  if (!(radius > 0)) throw DomainError("ball: radius must be > 0");
  Domain d;
  d.kind = DomainKind::ball;
  d.dim = static_cast<int>(center.size());
  d.center = std::move(center);
  d.radius = radius;
  return d;
}

Domain Domain::annulus(Point center, double r_in, double r_out) {
  if (!(r_in > 0) || !(r_out > r_in))
    throw DomainError("annulus: need 0 < r_in < r_out");
  Domain d;
  d.kind = DomainKind::annulus;
  d.dim = static_cast<int>(center.size());
  d.center = std::move(center);
  d.r_in = r_in;
  d.r_out = r_out;
  return d;
}

Domain Domain::punctured_ball(Point center, double radius) {
  Domain d = ball(std::move(center), radius);
  d.kind = DomainKind::punctured_ball;
  return d;
}

Domain Domain::exterior_ball(Point center, double radius) {
  Domain d = ball(std::move(center), radius);
  d.kind = DomainKind::exterior_ball;
  return d;
}

Domain Domain::cone(int dim, double aperture, double height) {
  if (!(aperture > 0) || !(height > 0))
    throw DomainError("cone: aperture and height must be > 0");
  Domain d;
  d.kind = DomainKind::cone;
  d.dim = dim;
  d.aperture = aperture;
  d.height = height;
  return d;
}

Domain Domain::punctured_space(int dim) {
  Domain d;
  d.kind = DomainKind::punctured_space;
  d.dim = dim;
  return d;
}

bool Domain::bounded() const {
  switch (kind) {
    case DomainKind::ball:
    case DomainKind::annulus:
    case DomainKind::punctured_ball:
    case DomainKind::cone:
      return true;
    default:
      return false;
  }
}

bool Domain::contains(std::span<const double> x) const {
  switch (kind) {
    case DomainKind::half_space:
      return x.back() >= -kMembershipSlack;
    case DomainKind::ball:
    case DomainKind::punctured_ball:
      return dist(x, center) <= radius + kMembershipSlack;
    case DomainKind::annulus: {
      double r = dist(x, center);
      return r >= r_in - kMembershipSlack && r <= r_out + kMembershipSlack;
    }
    case DomainKind::exterior_ball:
      return dist(x, center) >= radius - kMembershipSlack;
    case DomainKind::cone: {
      double t = x.back();
      return t >= -kMembershipSlack && t <= height + kMembershipSlack &&
             ynorm(x) <= aperture * t + kMembershipSlack;
    }
    case DomainKind::punctured_space:
      return true;
  }
  return false;
}

double Domain::distance(std::span<const double> x) const {
  if (!contains(x)) outside(*this);
  switch (kind) {
    case DomainKind::half_space:
      return std::max(0.0, x.back());
    case DomainKind::ball:
      return std::max(0.0, radius - dist(x, center));
    case DomainKind::annulus: {
      double r = dist(x, center);
      return std::max(0.0, std::min(r - r_in, r_out - r));
    }
    case DomainKind::punctured_ball: {
      double r = dist(x, center);
      return std::max(0.0, std::min(r, radius - r));
    }
    case DomainKind::exterior_ball:
      return std::max(0.0, dist(x, center) - radius);
    case DomainKind::cone: {
      // boundary = lateral surface {|y| = At} plus the top disk {t = h};
      // the projection onto the lateral line never leaves the segment for
      // interior points, so both candidate distances are exact.
      double t = x.back();
      double s = ynorm(x);
      double lateral = (aperture * t - s) / std::sqrt(1.0 + aperture * aperture);
      return std::max(0.0, std::min(lateral, height - t));
    }
    case DomainKind::punctured_space:
      return norm(x);
  }
  return 0.0;
}

std::string Domain::describe() const {
  std::ostringstream os;
  auto c = [&]() {
    os << "center=(";
    for (size_t i = 0; i < center.size(); ++i)
      os << (i ? "," : "") << center[i];
    os << ")";
  };
  switch (kind) {
    case DomainKind::half_space:
      os << "halfspace(dim=" << dim << ")";
      break;
    case DomainKind::ball:
      os << "ball(";
      c();
      os << ", radius=" << radius << ")";
      break;
    case DomainKind::annulus:
      os << "annulus(";
      c();
      os << ", rin=" << r_in << ", rout=" << r_out << ")";
      break;
    case DomainKind::punctured_ball:
      os << "punctured-ball(";
      c();
      os << ", radius=" << radius << ")";
      break;
    case DomainKind::exterior_ball:
      os << "exterior-ball(";
      c();
      os << ", radius=" << radius << ")";
      break;
    case DomainKind::cone:
      os << "cone(aperture=" << aperture << ", height=" << height << ")";
      break;
    case DomainKind::punctured_space:
      os << "punctured-space(dim=" << dim << ")";
      break;
  }
  return os.str();
}

namespace {

Point parse_center(const std::string& v, int dim) {
  Point c(static_cast<size_t>(dim), 0.0);
  if (v.find(':') == std::string::npos) {
    double s = std::stod(v);
    if (s != 0.0) c.back() = s;  // scalar shorthand: offset along e_{n+1}
    return c;
  }
  std::istringstream is(v);
  std::string tok;
  size_t i = 0;
  while (std::getline(is, tok, ':')) {
    if (i >= c.size()) throw DomainError("domain center has too many coordinates");
    c[i++] = std::stod(tok);
  }
  if (i != c.size()) throw DomainError("domain center has too few coordinates");
  return c;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

std::pair<double, double> punctured_bounds(double mu_omega,
                                           double mu_star_punctured) {
  if (mu_omega < 0 || mu_star_punctured < 0)
    throw DomainError("punctured_bounds: inputs must be >= 0");
  double upper = std::min(mu_omega, mu_star_punctured);
  double sum = mu_omega + mu_star_punctured;
  double lower = sum > 0 ? mu_omega * mu_star_punctured / sum : 0.0;
  return {lower, upper};
}

Domain parse_domain(const std::string& text, int dim) {
  std::string s = strip(text);
  std::string name = s;
  std::map<std::string, std::string> kv;
  size_t paren = s.find('(');
  if (paren != std::string::npos) {
    if (s.back() != ')') throw DomainError("domain syntax: missing ')'");
    name = strip(s.substr(0, paren));
    std::string args = s.substr(paren + 1, s.size() - paren - 2);
    std::istringstream is(args);
    std::string item;
    while (std::getline(is, item, ',')) {
      item = strip(item);
      if (item.empty()) continue;
      size_t eq = item.find('=');
      if (eq == std::string::npos)
        throw DomainError("domain syntax: expected key=value, got '" + item + "'");
      kv[strip(item.substr(0, eq))] = strip(item.substr(eq + 1));
    }
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  std::replace(name.begin(), name.end(), '_', '-');

  auto get = [&](const std::string& key, double dflt,
                 bool required = false) -> double {
    auto it = kv.find(key);
    if (it == kv.end()) {
      if (required) throw DomainError("domain syntax: missing '" + key + "'");
      return dflt;
    }
    return std::stod(it->second);
  };
  Point center = kv.count("center") ? parse_center(kv.at("center"), dim)
                                    : zeros(dim);

  if (name == "halfspace" || name == "half-space")
    return Domain::half_space(dim);
  if (name == "ball") return Domain::ball(center, get("radius", 1.0));
  if (name == "annulus")
    return Domain::annulus(center, get("rin", 0, true), get("rout", 0, true));
  if (name == "punctured-ball")
    return Domain::punctured_ball(center, get("radius", 1.0));
  if (name == "exterior-ball")
    return Domain::exterior_ball(center, get("radius", 1.0));
  if (name == "cone")
    return Domain::cone(dim, get("aperture", 1.0), get("height", 1.0));
  if (name == "punctured-space") return Domain::punctured_space(dim);
  throw DomainError("unknown domain '" + name + "'");
}

}  // namespace hs
