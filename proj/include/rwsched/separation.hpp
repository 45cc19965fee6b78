// Separation model: wake-turbulence separation matrices, cross-task
// separations, the unified minimum-separation lookup, and validation of the
// structural properties the solvers rely on.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rwsched {

// All durations and times are integer seconds; exact arithmetic throughout.
using Duration = std::int64_t;

// Sentinel for an unbounded latest-time window.
inline constexpr Duration kNoDeadline = INT64_C(1) << 60;

enum class Task : std::uint8_t { Landing, Takeoff };

enum class Layout : std::uint8_t { Single, DualClose };

struct ModelNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Immutable after construction; safe to share across threads.
struct SeparationModel {
  int eta = 0;          // number of aircraft classes, 1..eta
  Duration t0_base = 0; // base separation unit
  Duration delta = 0;   // small slack used by near-diagonal entries
  int rho1 = 0;         // first special class index
  int rho2 = 0;         // second special class index
  std::vector<std::vector<Duration>> T; // landing/landing, [lead-1][trail-1]
  std::vector<std::vector<Duration>> D; // takeoff/takeoff
  Duration td = 0; // single runway, landing leading / takeoff trailing
  Duration dt = 0; // single runway, takeoff leading / landing trailing
  Duration pd = 0; // dual runways, landing leading / takeoff trailing
  Duration dp = 0; // dual runways, takeoff leading / landing trailing

  Duration t(int lead, int trail) const { return T[lead - 1][trail - 1]; }
  Duration d(int lead, int trail) const { return D[lead - 1][trail - 1]; }
};

// Known keys: "heathrow-recat-single", "heathrow-recat-dual".
// Throws ModelNotFound for anything else.
SeparationModel builtin_model(const std::string& name);

// The single source of truth for the pairwise minimum separation between a
// leading and a trailing operation.
Duration min_separation(const SeparationModel& model, int lead_class,
                        Task lead_task, int trail_class, Task trail_task,
                        Layout layout);

struct CheckRow {
  std::string assumption; // e.g. "landing-1"
  std::string subclause;  // e.g. "(2)"
  bool pass = true;
  std::vector<int> witness; // class indices of the first failing tuple
  std::string detail;       // human-readable explanation of a failure
};

struct ValidationReport {
  std::vector<CheckRow> checks;

  bool all_pass() const;
  const CheckRow* find(const std::string& assumption,
                       const std::string& subclause) const;
};

// Every subclause is reported exactly once; failures are rows, not errors.
ValidationReport validate_landing_table(const SeparationModel& model);
ValidationReport validate_takeoff_table(const SeparationModel& model);
ValidationReport validate_cross(const SeparationModel& model, Layout layout);

// Text format: header "eta t0 delta rho1 rho2", eta rows for T, eta rows for
// D, then one line "td dt pd dp". Whitespace-separated integer seconds;
// bit-exact round trip between reader and writer.
SeparationModel read_separation_model(std::istream& in);
void write_separation_model(const SeparationModel& model, std::ostream& out);
SeparationModel load_separation_model(const std::string& path_or_builtin);

} // namespace rwsched
