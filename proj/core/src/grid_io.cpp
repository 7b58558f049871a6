#include "sextic/grid_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sextic {

std::string format_shortest(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_sig(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

void JsonWriter::pre_value() {
  if (pending_value_) {
    pending_value_ = false;
    return;
  }
  if (!first_) os_ << ',';
  first_ = false;
}

JsonWriter& JsonWriter::begin_object() {
  pre_value();
  os_ << '{';
  first_ = true;
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  os_ << '}';
  first_ = false;
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  pre_value();
  os_ << '[';
  first_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array(const std::string& key_name) {
  key(key_name);
  return begin_array();
}

JsonWriter& JsonWriter::end_array() {
  os_ << ']';
  first_ = false;
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  if (!first_) os_ << ',';
  first_ = false;
  os_ << '"' << name << "\":";
  pending_value_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  pre_value();
  if (std::isfinite(v)) {
    os_ << format_shortest(v);
  } else {
    os_ << "null";
  }
  return *this;
}

JsonWriter& JsonWriter::value(int v) {
  pre_value();
  os_ << v;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  pre_value();
  os_ << '"' << v << '"';
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  pre_value();
  os_ << (v ? "true" : "false");
  return *this;
}

void write_grid_csv(std::ostream& os, const PhaseGrid& grid) {
  os << "x,p,value\n";
  for (int i = 0; i < grid.nx(); ++i)
    for (int j = 0; j < grid.np(); ++j)
      os << format_sig(grid.x_node(i), 17) << ',' << format_sig(grid.p_node(j), 17) << ','
         << format_sig(grid.at(i, j), 17) << '\n';
}

void write_grid_json(std::ostream& os, const PhaseGrid& grid, const GridMeta& meta) {
  JsonWriter w(os);
  w.begin_object();
  w.field("kind", to_string(grid.kind()));
  w.field("lambda", meta.lambda);
  w.field("n", meta.quantum_number);
  w.key("x_nodes").begin_object();
  w.field("count", grid.nx()).field("min", grid.spec().x_min).field("max", grid.spec().x_max);
  w.end_object();
  w.key("p_nodes").begin_object();
  w.field("count", grid.np()).field("min", grid.spec().p_min).field("max", grid.spec().p_max);
  w.end_object();
  w.field("cell_area", grid.cell_area());
  w.field("integral", grid.integral());
  w.field("min_value", grid.min_value());
  w.field("max_value", grid.max_value());
  if (meta.negativity) w.field("negativity_volume", *meta.negativity);
  w.begin_array("values");
  for (int i = 0; i < grid.nx(); ++i)
    for (int j = 0; j < grid.np(); ++j) w.value(grid.at(i, j));
  w.end_array();
  w.end_object();
  os << '\n';
}

void write_marginal_csv(std::ostream& os, const MarginalDensity& density) {
  os << (density.axis == Axis::position ? "x" : "p") << ",value\n";
  for (std::size_t i = 0; i < density.nodes.size(); ++i)
    os << format_sig(density.nodes[i], 17) << ',' << format_sig(density.values[i], 17) << '\n';
}

void write_entropy_header(std::ostream& os) {
  os << "lambda,n,kind,Re_S2d,Im_S2d,Sx,Sp,St,Re_I\n";
}

void write_entropy_row(std::ostream& os, const EntropyReport& report) {
  os << format_sig(report.lambda, 12) << ',' << report.quantum_number << ','
     << to_string(report.kind) << ',' << format_sig(report.s2d.real(), 12) << ','
     << format_sig(report.s2d.imag(), 12) << ',' << format_sig(report.sx, 12) << ','
     << format_sig(report.sp, 12) << ',' << format_sig(report.st, 12) << ','
     << format_sig(report.mutual_information.real(), 12) << '\n';
}

void write_crj_header(std::ostream& os) { os << "lambda,n,space,pair,value\n"; }

void write_crj_row(std::ostream& os, double lambda, int n, Axis axis,
                   const std::string& pair, double value) {
  os << format_sig(lambda, 12) << ',' << n << ',' << to_string(axis) << ',' << pair << ','
     << format_sig(value, 12) << '\n';
}

}  // namespace sextic
