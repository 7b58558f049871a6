#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "sextic/infotheory.hpp"
#include "sextic/phasespace.hpp"

namespace sextic {

/// Shortest round-trip decimal representation of a double.
std::string format_shortest(double value);

/// Fixed significant-digit representation (CSV columns).
std::string format_sig(double value, int digits);

/// Minimal streaming JSON writer with deterministic member order.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& begin_array(const std::string& key_name);
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(bool v);
  JsonWriter& field(const std::string& name, double v) { return key(name).value(v); }
  JsonWriter& field(const std::string& name, int v) { return key(name).value(v); }
  JsonWriter& field(const std::string& name, const std::string& v) { return key(name).value(v); }
  JsonWriter& field(const std::string& name, bool v) { return key(name).value(v); }

 private:
  void pre_value();
  std::ostream& os_;
  bool first_ = true;
  bool pending_value_ = false;
};

struct GridMeta {
  double lambda = 0.0;
  int quantum_number = 0;
  std::optional<double> negativity;  // Wigner grids only
};

/// CSV with header `x,p,value`, row-major in x, 17 significant digits.
void write_grid_csv(std::ostream& os, const PhaseGrid& grid);

/// JSON variant carrying the grid-spec metadata block and a normalization
/// audit next to the flat row-major value array.
void write_grid_json(std::ostream& os, const PhaseGrid& grid, const GridMeta& meta);

/// CSV with header `<axis>,value`.
void write_marginal_csv(std::ostream& os, const MarginalDensity& density);

/// Entropy sweep row: lambda,n,kind,Re_S2d,Im_S2d,Sx,Sp,St,Re_I at 12
/// significant digits.
void write_entropy_header(std::ostream& os);
void write_entropy_row(std::ostream& os, const EntropyReport& report);

/// CRJ row: lambda,n,space,pair,value.
void write_crj_header(std::ostream& os);
void write_crj_row(std::ostream& os, double lambda, int n, Axis axis,
                   const std::string& pair, double value);

}  // namespace sextic
