#include "tilinglab/absorbing/config.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tilinglab {

std::string to_string(TemplateMode mode) {
  switch (mode) {
    case TemplateMode::complete_bipartite: return "complete-bipartite";
    case TemplateMode::banded: return "banded";
    case TemplateMode::random_regular: return "random-regular";
    case TemplateMode::automatic: return "automatic";
  }
  return "?";
}

TemplateMode template_mode_from_string(const std::string& name) {
  if (name == "complete-bipartite") return TemplateMode::complete_bipartite;
  if (name == "banded") return TemplateMode::banded;
  if (name == "random-regular") return TemplateMode::random_regular;
  if (name == "automatic") return TemplateMode::automatic;
  throw std::invalid_argument("unknown template mode '" + name + "'");
}

std::size_t template_surplus(std::size_t m, double beta) {
  return static_cast<std::size_t>(std::ceil(beta * static_cast<double>(m) - 1e-9));
}

AbsorberConfig AbsorberConfig::paper_defaults(double gamma, std::size_t h, std::size_t t) {
  AbsorberConfig c;
  c.gamma = gamma;
  c.h = h;
  c.t = t;
  c.q = gamma / (500.0 * static_cast<double>(h * t));
  c.beta = std::pow(c.q, static_cast<double>(h - 1)) * gamma / 4.0;
  c.xi = c.beta / static_cast<double>(h - 1);
  c.overrides = false;
  c.template_mode = TemplateMode::automatic;
  return c;
}

AbsorberConfig AbsorberConfig::desk(double gamma, std::size_t h, std::size_t t, double q, double beta) {
  AbsorberConfig c;
  c.gamma = gamma;
  c.h = h;
  c.t = t;
  c.q = q;
  c.beta = beta;
  c.xi = beta / static_cast<double>(h - 1);
  c.overrides = true;
  c.template_mode = TemplateMode::banded;
  c.direct_copy_families = true;
  c.copies_per_vertex = 2;
  return c;
}

void AbsorberConfig::validate() const {
  auto open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (h < 2) throw std::invalid_argument("absorber config: h must be >= 2");
  if (t < 1) throw std::invalid_argument("absorber config: t must be >= 1");
  if (!open_unit(gamma) || !open_unit(q) || !open_unit(beta) || !open_unit(xi)) {
    throw std::invalid_argument("absorber config: gamma, q, beta and xi must lie in (0, 1)");
  }
  const double expected_xi = beta / static_cast<double>(h - 1);
  if (std::abs(xi - expected_xi) > 1e-12 * std::max(1.0, expected_xi)) {
    throw std::invalid_argument("absorber config: xi must equal beta / (h - 1)");
  }
  if (!overrides) {
    const auto d = paper_defaults(gamma, h, t);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(b), 1e-300); };
    if (!close(q, d.q) || !close(beta, d.beta)) {
      throw std::invalid_argument("absorber config: q and beta differ from the default bindings "
                                  "but overrides is not set");
    }
  }
}

std::size_t banded_structure_size(std::size_t m, std::size_t surplus, std::size_t h, std::size_t t) {
  const std::size_t edges = m * (surplus + 3);
  return (m + surplus) + 2 * m + 3 * m * (h - 1) + h * t * edges;
}

bool surplus_admits_remainder(std::size_t surplus, std::size_t h) {
  if (h < 2) return false;
  return (h - surplus % h) % h <= surplus / (h - 1);
}

AbsorberConfig desk_config(std::size_t n, std::size_t h, std::size_t t) {
  const double beta = 0.75;
  const double room = 0.95 * static_cast<double>(n);
  std::size_t m = 1;
  std::size_t surplus = 0;
  for (std::size_t scale : {2, 1}) {
    for (std::size_t k = 1; static_cast<double>(banded_structure_size(scale, k, h, t)) <= room; ++k) {
      if (surplus_admits_remainder(k, h)) surplus = k;
    }
    if (surplus) {
      m = scale;
      break;
    }
  }
  // Nothing fits: keep the nominal surplus and let the build report it.
  if (!surplus) surplus = template_surplus(m, beta);
  const std::size_t x_size = m + surplus;
  // Expected |X| a little above the trimmed size; |X| <= 2nq leaves room.
  const double q = std::min(0.5, (static_cast<double>(x_size) + 2.0) / static_cast<double>(std::max<std::size_t>(n, 1)));
  AbsorberConfig c = AbsorberConfig::desk(0.2, h, t, q, beta);
  c.max_template_scale = m;
  c.x_surplus = surplus;
  return c;
}

}  // namespace tilinglab
