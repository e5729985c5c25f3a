#include "tsrmb/trips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "tsrmb/rng.hpp"

namespace tsrmb {

namespace {

constexpr std::int64_t kDaySeconds = 86400;
constexpr double kEarthRadiusM = 6371000.0;

std::int64_t days_from_civil(int y, int m, int d) {
  // Howard Hinnant's civil-from-days inverse; proleptic Gregorian, UTC.
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool in_window(std::int64_t t, std::int64_t begin, std::int64_t end) {
  return t >= begin && t < end;
}

}  // namespace

std::int64_t parse_civil_utc(const std::string& text) {
  int y, mo, d, h, mi, s;
  if (std::sscanf(text.c_str(), "%d-%d-%d %d:%d:%d", &y, &mo, &d, &h, &mi, &s) != 6)
    fail("ParseError", "bad timestamp '" + text + "'");
  return days_from_civil(y, mo, d) * kDaySeconds + h * 3600 + mi * 60 + s;
}

double haversine_m(double lat1, double lon1, double lat2, double lon2) {
  const double rad = M_PI / 180.0;
  double dlat = (lat2 - lat1) * rad, dlon = (lon2 - lon1) * rad;
  double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
             std::cos(lat1 * rad) * std::cos(lat2 * rad) * std::sin(dlon / 2) * std::sin(dlon / 2);
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(a)));
}

std::vector<TripRecord> parse_trip_csv(const std::string& path, const BoundingBox& bbox) {
  std::ifstream in(path);
  if (!in) fail("IoError", "cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) fail("ParseError", path + ": empty file");
  auto header = split_csv_line(line);
  std::map<std::string, int> col;
  for (size_t i = 0; i < header.size(); ++i) col[trimmed(header[i])] = static_cast<int>(i);
  for (const char* need : {"taxi_id", "time", "lon", "lat", "occupied"})
    if (!col.count(need))
      fail("ParseError", path + ": missing column '" + std::string(need) + "'");

  std::vector<TripRecord> out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    auto fields = split_csv_line(line);
    auto field = [&](const char* name) -> const std::string& {
      int idx = col.at(name);
      if (idx >= static_cast<int>(fields.size()))
        fail("ParseError", path + ":" + std::to_string(line_no) + ": too few columns");
      return fields[idx];
    };
    TripRecord rec;
    rec.taxi_id = trimmed(field("taxi_id"));
    try {
      rec.timestamp = parse_civil_utc(trimmed(field("time")));
      rec.lon = std::stod(field("lon"));
      rec.lat = std::stod(field("lat"));
      rec.occupied = std::stoi(field("occupied"));
    } catch (const Error&) {
      fail("ParseError", path + ":" + std::to_string(line_no) + ": bad timestamp");
    } catch (const std::exception&) {
      fail("ParseError", path + ":" + std::to_string(line_no) + ": bad numeric field");
    }
    if (rec.occupied != 0 && rec.occupied != 1)
      fail("ParseError", path + ":" + std::to_string(line_no) + ": occupied must be 0 or 1");
    if (!bbox.contains(rec.lon, rec.lat)) continue;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Pickup> extract_pickups(const std::vector<TripRecord>& records) {
  std::map<std::string, std::vector<const TripRecord*>> by_taxi;
  for (const auto& r : records) by_taxi[r.taxi_id].push_back(&r);
  std::vector<Pickup> pickups;
  for (auto& [taxi, recs] : by_taxi) {
    std::stable_sort(recs.begin(), recs.end(),
                     [](const TripRecord* a, const TripRecord* b) {
                       return a->timestamp < b->timestamp;
                     });
    for (size_t i = 1; i < recs.size(); ++i)
      if (recs[i - 1]->occupied == 0 && recs[i]->occupied == 1)
        pickups.push_back({taxi, recs[i]->timestamp, recs[i]->lon, recs[i]->lat});
  }
  std::sort(pickups.begin(), pickups.end(), [](const Pickup& a, const Pickup& b) {
    return std::tie(a.timestamp, a.taxi_id) < std::tie(b.timestamp, b.taxi_id);
  });
  return pickups;
}

IngestResult ingest_trips_csv(const std::string& path, const WindowSpec& window,
                              const BoundingBox& bbox, std::uint64_t seed) {
  if (!(window.driver_multiplier > 1.0))
    fail("BadParameter", "driver multiplier must exceed 1");
  if (window.scenario_day_offsets.empty())
    fail("BadParameter", "need at least one scenario day offset");
  std::vector<TripRecord> records = parse_trip_csv(path, bbox);
  std::vector<Pickup> pickups = extract_pickups(records);

  std::map<std::string, std::vector<const TripRecord*>> by_taxi;
  for (const auto& r : records) by_taxi[r.taxi_id].push_back(&r);
  for (auto& [taxi, recs] : by_taxi)
    std::stable_sort(recs.begin(), recs.end(), [](const TripRecord* a, const TripRecord* b) {
      return a->timestamp < b->timestamp;
    });

  auto pickups_in = [&](std::int64_t begin, std::int64_t end) {
    std::vector<const Pickup*> out;
    for (const auto& p : pickups)
      if (in_window(p.timestamp, begin, end)) out.push_back(&p);
    return out;
  };

  const std::int64_t t0 = window.t0;
  auto first_stage = pickups_in(t0, t0 + 60);
  if (first_stage.empty()) fail("EmptyWindow", "no first-stage pickups in [t0, t0+60)");

  std::vector<std::vector<const Pickup*>> scenario_pickups;
  for (int offset : window.scenario_day_offsets) {
    std::int64_t begin = t0 + 60 - static_cast<std::int64_t>(offset) * kDaySeconds;
    auto got = pickups_in(begin, begin + 60);
    if (got.empty())
      fail("EmptyWindow", "no pickups in the scenario window " + std::to_string(offset) +
                              " days back");
    scenario_pickups.push_back(std::move(got));
  }
  auto realized_pickups = pickups_in(t0 + 60, t0 + 120);
  if (realized_pickups.empty()) fail("EmptyWindow", "no pickups in the realized window");

  // Drivers: taxis with records in the lookback, none of them occupied,
  // placed at their most recent record at or before t0.
  struct Candidate {
    std::string taxi_id;
    double lon, lat;
  };
  std::vector<Candidate> idle;
  for (auto& [taxi, recs] : by_taxi) {
    const TripRecord* last = nullptr;
    bool seen = false, busy = false;
    for (const TripRecord* r : recs) {
      if (r->timestamp > t0) break;
      if (r->timestamp >= t0 - window.driver_lookback) {
        seen = true;
        if (r->occupied != 0) busy = true;
      }
      last = r;
    }
    if (seen && !busy && last) idle.push_back({taxi, last->lon, last->lat});
  }
  if (idle.empty()) fail("EmptyWindow", "no idle taxis in the lookback window");

  const int m = static_cast<int>(first_stage.size());
  const int want_drivers = static_cast<int>(
      std::ceil(window.driver_multiplier * static_cast<double>(m)));
  std::vector<Candidate> drivers;
  if (static_cast<int>(idle.size()) <= want_drivers) {
    drivers = idle;
  } else {
    Rng rng(seed);
    for (int idx : rng.sample_without_replacement(static_cast<int>(idle.size()), want_drivers))
      drivers.push_back(idle[idx]);
  }

  // Assemble: R1 pickups, then scenario riders per offset, then realized.
  MetricInstance inst;
  inst.n_r1 = m;
  std::vector<std::pair<double, double>> coords;  // (lat, lon) per vertex
  for (const Pickup* p : first_stage) coords.emplace_back(p->lat, p->lon);

  std::vector<std::vector<int>> sets;
  IngestResult result;
  auto add_riders = [&](const std::vector<const Pickup*>& ps, const std::string& tag) {
    std::vector<int> ids;
    for (const Pickup* p : ps) {
      int id = static_cast<int>(inst.r2_labels.size());
      inst.r2_labels.push_back(tag + "/" + p->taxi_id + "@" + std::to_string(p->timestamp));
      coords.emplace_back(p->lat, p->lon);
      ids.push_back(id);
    }
    return ids;
  };
  for (size_t i = 0; i < scenario_pickups.size(); ++i)
    sets.push_back(add_riders(scenario_pickups[i],
                              "s" + std::to_string(window.scenario_day_offsets[i])));
  result.realized = add_riders(realized_pickups, "realized");

  inst.n_d = static_cast<int>(drivers.size());
  for (const auto& d : drivers) coords.emplace_back(d.lat, d.lon);

  const int nv = inst.n_vertices();
  inst.dist = DistanceMatrix(nv, 0.0);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      inst.dist.set_sym(i, j, haversine_m(coords[i].first, coords[i].second, coords[j].first,
                                          coords[j].second));
  inst.scenarios = ScenarioSet::explicit_sets(std::move(sets));
  result.instance = std::move(inst);
  return result;
}

}  // namespace tsrmb
