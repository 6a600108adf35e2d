#include <algorithm>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace lcert {

SchemeConfig fit_config(SchemeConfig cfg, const Instance& inst) {
  if (!cfg.id_bits) {
    Identifier top = 0;
    if (inst.ids) top = *std::max_element(inst.ids->begin(), inst.ids->end());
    cfg.id_bits = std::max<std::size_t>(1, bits_for(top));
  }
  if (!cfg.dist_bits) cfg.dist_bits = bits_for(diameter(inst.graph));
  return cfg;
}

SchemePtr make_scheme(const SchemeConfig& cfg) {
  const auto need = [&](const std::optional<std::size_t>& width, const char* field) {
    if (!width) throw std::invalid_argument(cfg.name + " scheme needs " + field + "; call fit_config first");
    return *width;
  };
  if (cfg.name == "classic") return detail::make_classic(need(cfg.id_bits, "id_bits"), need(cfg.dist_bits, "dist_bits"));
  if (cfg.name == "truncated") return detail::make_truncated_classic(cfg.truncate_bits);
  if (cfg.name == "constant") return detail::make_constant(cfg.constant_bits);
  if (cfg.name == "tree") return detail::make_tree();
  if (cfg.name == "chordal") return detail::make_chordal();
  if (cfg.name == "grid") return detail::make_grid();
  if (cfg.name == "dense") return detail::make_dense(cfg.id_bit_length, cfg.retry_limit, cfg.seed);
  if (cfg.name == "smallid") return detail::make_smallid(cfg.c_id, need(cfg.dist_bits, "dist_bits"), cfg.counting);
  throw std::invalid_argument("unknown scheme '" + cfg.name + "'");
}

std::vector<std::string> scheme_names() {
  return {"classic", "tree", "chordal", "grid", "dense", "smallid", "constant", "truncated"};
}

}  // namespace lcert
