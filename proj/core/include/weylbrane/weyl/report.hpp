#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace weylbrane {

/// Both sides of one field equation at one point, written as
/// `geometric = source`. Tensor equations are flattened row-major.
struct EquationTerms {
  std::string id;
  std::vector<double> geometric;
  std::vector<double> source;

  /// geometric - source, componentwise.
  std::vector<double> residual() const;
  /// Signed residual for scalar equations, max-abs over components otherwise.
  double reduced_residual() const;
  double max_abs_residual() const;
  double max_abs_source() const;
};

/// Per-equation residual tables over a grid of points.
class ResidualReport {
 public:
  struct Row {
    std::vector<double> point;
    double residual;
  };
  struct Equation {
    std::string id;
    double max_abs = 0.0;
    std::vector<Row> rows;
  };

  ResidualReport() = default;
  explicit ResidualReport(std::vector<std::string> coordinate_names)
      : coordinate_names_(std::move(coordinate_names)) {}

  void add(std::string_view id, std::span<const double> point, double residual);
  void add(const EquationTerms& terms, std::span<const double> point);
  /// Appends all rows of `other`; equations keep first-seen order.
  void merge(const ResidualReport& other);

  const std::vector<Equation>& equations() const { return equations_; }
  const Equation* find(std::string_view id) const;
  const Equation& at(std::string_view id) const;
  double max_abs(std::string_view id) const { return at(id).max_abs; }
  bool contains(std::string_view id) const { return find(id) != nullptr; }

  const std::vector<std::string>& coordinate_names() const { return coordinate_names_; }
  void set_coordinate_names(std::vector<std::string> names) {
    coordinate_names_ = std::move(names);
  }

  /// CSV: equation_id,<coordinates...>,residual; 17 significant digits.
  void write_csv(std::ostream& out) const;
  /// One line per equation with its max-abs residual and whether it holds
  /// to `tolerance`.
  std::string summary(double tolerance) const;

 private:
  std::vector<std::string> coordinate_names_;
  std::vector<Equation> equations_;
};

ResidualReport to_report(const std::vector<EquationTerms>& terms, std::span<const double> point);

/// Shortest round-trip-safe decimal with 17 significant digits, independent
/// of the global locale.
std::string format_real(double x);

}  // namespace weylbrane
