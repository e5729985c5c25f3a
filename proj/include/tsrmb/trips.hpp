#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsrmb/model.hpp"

namespace tsrmb {

// One GPS record of the trip log (speed/direction are parsed and dropped).
struct TripRecord {
  std::string taxi_id;
  std::int64_t timestamp = 0;  // seconds since epoch, UTC
  double lon = 0.0;
  double lat = 0.0;
  int occupied = 0;
};

struct BoundingBox {
  double lon_min, lon_max, lat_min, lat_max;

  bool contains(double lon, double lat) const {
    return lon >= lon_min && lon <= lon_max && lat >= lat_min && lat <= lat_max;
  }
};

// One benchmark window: first stage [t0, t0+60s), second stage
// [t0+60s, t0+120s), prediction scenarios from the same second-stage minute
// on earlier days, drivers from taxis idle over the lookback.
struct WindowSpec {
  std::int64_t t0 = 0;
  std::vector<int> scenario_day_offsets{7, 14};
  std::int64_t driver_lookback = 300;
  double driver_multiplier = 2.5;
};

// Ingested instance: explicit scenarios are the offset-day predictions, in
// offset order; the realized same-day scenario is kept aside for
// out-of-sample evaluation.
struct IngestResult {
  MetricInstance instance;
  std::vector<int> realized;  // R2 indices of the realized scenario S*
};

// "YYYY-MM-DD HH:MM:SS" -> seconds since epoch (UTC, no locale).
std::int64_t parse_civil_utc(const std::string& text);

// Great-circle distance in meters.
double haversine_m(double lat1, double lon1, double lat2, double lon2);

// Streams the CSV (header taxi_id,time,lon,lat,speed,direction,occupied;
// unknown extra columns ignored), keeps records inside the bounding box.
// Throws Error("ParseError") with the offending line number.
std::vector<TripRecord> parse_trip_csv(const std::string& path, const BoundingBox& bbox);

// A pickup: an occupied 0 -> 1 transition in a taxi's time-ordered records,
// located at the taxi's position at that instant.
struct Pickup {
  std::string taxi_id;
  std::int64_t timestamp = 0;
  double lon = 0.0;
  double lat = 0.0;
};

std::vector<Pickup> extract_pickups(const std::vector<TripRecord>& records);

// Builds a TSRMB instance for one window. Pickups are 0->1 transitions of the
// occupied flag; drivers are taxis with no occupied record during the
// lookback, placed at their most recent record at or before t0, sampled down
// to ceil(multiplier * |R1|) with the given seed.
// Throws Error("EmptyWindow") when the first stage or any scenario is empty.
IngestResult ingest_trips_csv(const std::string& path, const WindowSpec& window,
                              const BoundingBox& bbox, std::uint64_t seed);

}  // namespace tsrmb
