#include "weylbrane/geometry/fields.hpp"

namespace weylbrane {

MetricField MetricField::flat(std::vector<int> signature) {
  const int n = static_cast<int>(signature.size());
  std::vector<double> diag(signature.begin(), signature.end());
  return MetricField(n, std::move(signature), [diag](auto y) {
    using S = typename decltype(y)::value_type;
    Matrix<S> g(static_cast<int>(diag.size()));
    for (int i = 0; i < g.dim(); ++i) g(i, i) = S(diag[static_cast<std::size_t>(i)]);
    return g;
  });
}

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](auto y) {
    using S = typename decltype(y)::value_type;
    return S(c);
  });
}

ScalarField ScalarField::linear(int index, double c, double offset) {
  return ScalarField([=](auto y) {
    using S = std::remove_const_t<typename decltype(y)::element_type>;
    return c * y[static_cast<std::size_t>(index)] + S(offset);
  });
}

}  // namespace weylbrane
