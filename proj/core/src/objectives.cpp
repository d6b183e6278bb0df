#include "itso/objectives.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace itso {
namespace {

double elliptic_fn(std::span<const double> x) {
  const std::size_t n = x.size();
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // c = 10^3 * {0, 1/(n-1), ..., 1}; the first coefficient is zero.
    const double c =
        n > 1 ? 1000.0 * static_cast<double>(j) / static_cast<double>(n - 1) : 0.0;
    const double d = x[j] + 1.5;
    sum += c * d * d;
  }
  return sum;
}

double cigar_fn(std::span<const double> x) {
  double sum = x[0] * x[0];
  for (std::size_t j = 1; j < x.size(); ++j) {
    sum += std::abs(x[j]);
  }
  return sum;
}

double cigtab_fn(std::span<const double> x) {
  const std::size_t n = x.size();
  double sum = x[0] * x[0];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    sum += std::abs(x[j]);
  }
  sum += x[n - 1] * x[n - 1];
  return sum;
}

double griewank_fn(std::span<const double> x) {
  double quad = 0.0;
  double prod = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    quad += x[j] * x[j];
    prod *= std::cos(x[j] / std::sqrt(static_cast<double>(j + 1)));
  }
  return 1.0 + quad / 4000.0 - prod;
}

double quartic_fn(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - 2.0;
    sum += static_cast<double>(j + 1) * d * d * d * d;
  }
  return sum;
}

double schwefel_fn(std::span<const double> x) {
  double sum = 0.0;
  double inner = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    inner += x[j] - 9.0;
    sum += inner * inner;
  }
  return sum;
}

double rastrigin_fn(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double quad = 0.0;
  double waves = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double s = x[j] + 0.7;
    quad += s * s;
    // The squared shift sits inside the cosine.
    waves += std::cos(2.0 * std::numbers::pi * s * s);
  }
  return 10.0 * n + quad - 10.0 * waves;
}

double sphere_fn(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    const double d = xi - 1.3;
    sum += d * d;
  }
  return sum;
}

double ellipsoid_fn(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    const double d = xi - std::numbers::sqrt2;
    sum += d * d;
  }
  return sum;
}

double alpine_fn(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    sum += std::abs(xi * std::sin(xi) + 0.1 * xi);
  }
  return sum;
}

double x_j_fn(std::span<const double> x) {
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double d = x[j] - static_cast<double>(j + 1) - 2.1;
    sum += d * d;
  }
  return sum;
}

double x_5_fn(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    const double d = xi - 5.0;
    sum += d * d;
  }
  return sum - 5.0;
}

double sin_x_fn(std::span<const double> x) {
  double sum = 0.0;
  for (double xi : x) {
    const double s = xi + 0.7;
    sum += std::sin(s) + s * s / 100.0;
  }
  return sum;
}

struct CatalogRow {
  std::string_view name;
  ObjectiveSpec::Evaluator evaluator;
};

// Catalog order is fixed and CLI-visible.
constexpr CatalogRow kCatalog[] = {
    {"elliptic", elliptic_fn}, {"cigar", cigar_fn},       {"cigtab", cigtab_fn},
    {"griewank", griewank_fn}, {"quartic", quartic_fn},   {"schwefel", schwefel_fn},
    {"rastrigin", rastrigin_fn}, {"sphere", sphere_fn},   {"ellipsoid", ellipsoid_fn},
    {"alpine", alpine_fn},     {"x_j", x_j_fn},           {"x_5", x_5_fn},
    {"sin_x", sin_x_fn},
};

constexpr std::string_view kNames[] = {
    "elliptic", "cigar",  "cigtab",    "griewank", "quartic", "schwefel", "rastrigin",
    "sphere",   "ellipsoid", "alpine", "x_j",      "x_5",     "sin_x",
};

std::optional<KnownMinimum> known_minimum_for(std::string_view name, std::size_t n) {
  auto constant_point = [n](double v, double value) {
    return KnownMinimum{std::vector<double>(n, v), value};
  };
  if (name == "elliptic") return constant_point(-1.5, 0.0);
  if (name == "cigar") return constant_point(0.0, 0.0);
  if (name == "cigtab") return constant_point(0.0, 0.0);
  if (name == "griewank") return constant_point(0.0, 0.0);
  if (name == "quartic") return constant_point(2.0, 0.0);
  if (name == "schwefel") return constant_point(9.0, 0.0);
  if (name == "rastrigin") return constant_point(-0.7, 0.0);
  if (name == "sphere") return constant_point(1.3, 0.0);
  if (name == "ellipsoid") return constant_point(std::numbers::sqrt2, 0.0);
  if (name == "alpine") return constant_point(0.0, 0.0);
  if (name == "x_j") {
    KnownMinimum minimum;
    minimum.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      minimum.point[j] = static_cast<double>(j + 1) + 2.1;
    }
    minimum.value = 0.0;
    return minimum;
  }
  if (name == "x_5") return constant_point(5.0, -5.0);
  return std::nullopt;  // sin_x: transcendental minimizer
}

}  // namespace

ObjectiveSpec::ObjectiveSpec(std::string name, std::size_t dimension, std::vector<double> lower,
                             std::vector<double> upper, std::optional<KnownMinimum> minimum,
                             Evaluator evaluator)
    : name_(std::move(name)),
      dimension_(dimension),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      minimum_(std::move(minimum)),
      evaluator_(evaluator) {}

double ObjectiveSpec::evaluate(std::span<const double> x) const {
  if (x.size() != dimension_) {
    std::ostringstream msg;
    msg << "dimension mismatch for objective \"" << name_ << "\": expected " << dimension_
        << ", got " << x.size();
    throw std::invalid_argument(msg.str());
  }
  return evaluator_(x);
}

std::span<const std::string_view> objective_names() { return kNames; }

ObjectiveSpec make_objective(std::string_view name, std::size_t dimension) {
  if (dimension == 0) {
    throw std::invalid_argument("objective dimension must be positive");
  }
  for (const CatalogRow& row : kCatalog) {
    if (row.name != name) {
      continue;
    }
    // Default box [-15, 15]; x_j widens the upper limit so the optimum at
    // j + 2.1 stays interior for every dimension.
    std::vector<double> lower(dimension, -15.0);
    std::vector<double> upper(dimension,
                              name == "x_j" ? static_cast<double>(dimension) + 15.0 : 15.0);
    return ObjectiveSpec(std::string(name), dimension, std::move(lower), std::move(upper),
                         known_minimum_for(name, dimension), row.evaluator);
  }
  std::ostringstream msg;
  msg << "unknown objective \"" << name << "\"; valid names:";
  for (std::string_view known : kNames) {
    msg << " " << known;
  }
  throw std::invalid_argument(msg.str());
}

std::vector<ObjectiveSpec> list_objectives(std::size_t dimension) {
  std::vector<ObjectiveSpec> specs;
  specs.reserve(std::size(kCatalog));
  for (const CatalogRow& row : kCatalog) {
    specs.push_back(make_objective(row.name, dimension));
  }
  return specs;
}

}  // namespace itso
