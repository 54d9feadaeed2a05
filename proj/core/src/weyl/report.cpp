#include "weylbrane/weyl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace weylbrane {

std::vector<double> EquationTerms::residual() const {
  std::vector<double> r(geometric.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = geometric[i] - source[i];
  return r;
}

double EquationTerms::reduced_residual() const {
  if (geometric.size() == 1) return geometric[0] - source[0];
  return max_abs_residual();
}

double EquationTerms::max_abs_residual() const {
  double m = 0.0;
  for (double r : residual()) m = std::max(m, std::abs(r));
  return m;
}

double EquationTerms::max_abs_source() const {
  double m = 0.0;
  for (double s : source) m = std::max(m, std::abs(s));
  return m;
}

void ResidualReport::add(std::string_view id, std::span<const double> point, double residual) {
  auto it = std::find_if(equations_.begin(), equations_.end(),
                         [&](const Equation& e) { return e.id == id; });
  if (it == equations_.end()) {
    equations_.push_back({std::string(id), 0.0, {}});
    it = std::prev(equations_.end());
  }
  it->rows.push_back({std::vector<double>(point.begin(), point.end()), residual});
  it->max_abs = std::max(it->max_abs, std::abs(residual));
  if (std::isnan(residual)) it->max_abs = residual;
}

void ResidualReport::add(const EquationTerms& terms, std::span<const double> point) {
  add(terms.id, point, terms.reduced_residual());
}

void ResidualReport::merge(const ResidualReport& other) {
  if (coordinate_names_.empty()) coordinate_names_ = other.coordinate_names_;
  for (const auto& eq : other.equations_)
    for (const auto& row : eq.rows) add(eq.id, row.point, row.residual);
}

const ResidualReport::Equation* ResidualReport::find(std::string_view id) const {
  auto it = std::find_if(equations_.begin(), equations_.end(),
                         [&](const Equation& e) { return e.id == id; });
  return it == equations_.end() ? nullptr : &*it;
}

const ResidualReport::Equation& ResidualReport::at(std::string_view id) const {
  const Equation* e = find(id);
  if (!e) throw std::out_of_range("no residuals recorded for " + std::string(id));
  return *e;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void ResidualReport::write_csv(std::ostream& out) const {
  std::size_t ncoord = coordinate_names_.size();
  if (ncoord == 0) {
    for (const auto& eq : equations_)
      for (const auto& row : eq.rows) ncoord = std::max(ncoord, row.point.size());
  }
  out << "equation_id";
  for (std::size_t i = 0; i < ncoord; ++i) {
    out << ',' << (i < coordinate_names_.size() ? coordinate_names_[i] : "x" + std::to_string(i));
  }
  out << ",residual\n";
  for (const auto& eq : equations_) {
    for (const auto& row : eq.rows) {
      out << eq.id;
      for (std::size_t i = 0; i < ncoord; ++i) {
        out << ',' << (i < row.point.size() ? format_real(row.point[i]) : "");
      }
      out << ',' << format_real(row.residual) << '\n';
    }
  }
}

std::string ResidualReport::summary(double tolerance) const {
  std::string s;
  std::size_t width = 0;
  for (const auto& eq : equations_) width = std::max(width, eq.id.size());
  for (const auto& eq : equations_) {
    char line[160];
    std::snprintf(line, sizeof(line), "  %-*s  max|residual| = %-24s  %s\n",
                  static_cast<int>(width), eq.id.c_str(), format_real(eq.max_abs).c_str(),
                  eq.max_abs <= tolerance ? "holds" : "does not hold");
    s += line;
  }
  return s;
}

ResidualReport to_report(const std::vector<EquationTerms>& terms,
                         std::span<const double> point) {
  ResidualReport r;
  for (const auto& t : terms) r.add(t, point);
  return r;
}

}  // namespace weylbrane
