#include "ivpp/io.hpp"

namespace ivpp {

nlohmann::json to_json(const ExtendedComplex& z) {
  if (z.is_infinite()) return "inf";
  const Complex v = z.value();
  if (v.imag() == 0.0) return v.real();
  return {{"re", v.real()}, {"im", v.imag()}};
}

nlohmann::json to_json(const PointD& p) {
  auto out = nlohmann::json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}

nlohmann::json to_json(const OrbitTrace& trace) {
  nlohmann::json j;
  auto points = nlohmann::json::array();
  for (const auto& p : trace.points) points.push_back(to_json(p));
  j["points"] = std::move(points);
  j["closed"] = trace.closed;
  j["minimal_period"] = trace.minimal_period ? nlohmann::json(*trace.minimal_period) : nlohmann::json(nullptr);
  j["indeterminate_step"] =
      trace.indeterminate_step ? nlohmann::json(*trace.indeterminate_step) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const ComponentDecomposition& d) {
  nlohmann::json j;
  j["period"] = d.period;
  j["branch"] = d.branch;
  j["convention"] = to_string(d.convention);
  auto bounds = nlohmann::json::array();
  const bool left = d.convention == Convention::LeftClosed;
  if (left) bounds.push_back("-inf");
  for (double b : d.boundaries) bounds.push_back(b);
  if (!left) bounds.push_back("inf");
  j["boundaries"] = std::move(bounds);
  j["sigma"] = d.sigma;
  j["tiles"] = d.tiles;
  if (d.level) j["r"] = *d.level;
  return j;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace ivpp
