#include "lcert/lowerbound.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace lcert {

FamilyParams FamilyParams::resolved() const {
  FamilyParams out = *this;
  if (out.k == 0) out.k = 2 * r + 2;
  if (out.l == 0) out.l = 2 * r + 2;
  return out;
}

IdPartition make_partition(std::size_t n, std::uint64_t seed, std::size_t min_a, std::size_t min_b) {
  if (n < 2) throw std::invalid_argument("partition needs n >= 2");
  IdPartition p;
  p.n = n;
  p.n_a = std::max(n / 2, min_a);
  p.n_b = std::max(n - n / 2, min_b);
  p.universe = std::max<Identifier>(n * n, n * (p.n_a + p.n_b));
  std::vector<Identifier> pool(p.universe);
  std::iota(pool.begin(), pool.end(), Identifier{1});
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  auto take = [&, next = std::size_t{0}](std::size_t count) mutable {
    std::vector<Identifier> out(pool.begin() + next, pool.begin() + next + count);
    next += count;
    std::sort(out.begin(), out.end());
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) p.a.push_back(take(p.n_a));
  for (std::size_t i = 0; i < n; ++i) p.b.push_back(take(p.n_b));
  return p;
}

IdPartition make_partition(const FamilyParams& params) {
  const FamilyParams f = params.resolved();
  return make_partition(f.n, f.seed, f.k + 1, f.l + 1);
}

LBInstance family_member(const IdPartition& part, std::size_t i, std::size_t j, const FamilyParams& params) {
  const FamilyParams f = params.resolved();
  return gen_lb_instance(part.a.at(i), part.b.at(j), f.r, f.k, f.l);
}

std::vector<LBInstance> build_family(const IdPartition& part, const FamilyParams& params) {
  std::vector<LBInstance> out;
  out.reserve(part.n * part.n);
  for (std::size_t i = 0; i < part.n; ++i) {
    for (std::size_t j = 0; j < part.n; ++j) out.push_back(family_member(part, i, j, params));
  }
  return out;
}

SchemeConfig fit_config_to_family(SchemeConfig cfg, const IdPartition& part, const FamilyParams& params) {
  if (!cfg.id_bits) cfg.id_bits = bits_for(part.universe);
  // Every member has the same shape, hence the same diameter.
  return fit_config(std::move(cfg), family_member(part, 0, 0, params).instance);
}

std::size_t WindowColor::bits() const {
  std::size_t out = 0;
  for (const auto& [cert, label] : entries) out += cert.size() + 1;
  return out;
}

WindowColor window_color(const LBInstance& g, const Assignment& certs) {
  const std::size_t w = 2 * g.radius + 1;
  WindowColor out;
  out.entries.reserve(2 * w);
  for (std::size_t t = w; t-- > 0;) {
    const Vertex v = g.a_path[t];
    out.entries.emplace_back(certs[v], g.instance.selected[v]);
  }
  for (std::size_t t = 0; t < w; ++t) {
    const Vertex v = g.b_path[t];
    out.entries.emplace_back(certs[v], g.instance.selected[v]);
  }
  return out;
}

WindowColor window_color(const Scheme& scheme, const LBInstance& g) {
  return window_color(g, scheme.prove(g.instance));
}

std::size_t ColorTable::distinct() const {
  std::vector<std::uint8_t> seen(palette.size(), 0);
  std::size_t out = 0;
  for (auto c : cells) {
    if (c >= seen.size()) seen.resize(c + 1, 0);
    if (!seen[c]) {
      seen[c] = 1;
      ++out;
    }
  }
  return out;
}

std::size_t ColorTable::largest_class() const {
  std::unordered_map<std::uint32_t, std::size_t> count;
  std::size_t best = 0;
  for (auto c : cells) best = std::max(best, ++count[c]);
  return best;
}

namespace {

ColorTable intern(std::size_t n, std::vector<WindowColor> colors) {
  ColorTable t;
  t.rows = n;
  t.cols = n;
  t.cells.resize(colors.size());
  std::map<WindowColor, std::uint32_t> index;
  for (std::size_t c = 0; c < colors.size(); ++c) {
    auto [it, fresh] = index.try_emplace(colors[c], static_cast<std::uint32_t>(t.palette.size()));
    if (fresh) t.palette.push_back(std::move(colors[c]));
    t.cells[c] = it->second;
  }
  return t;
}

}  // namespace

ColorTable build_color_table(const Scheme& scheme, const IdPartition& part, const FamilyParams& params) {
  const std::size_t n = part.n;
  std::vector<WindowColor> colors(n * n);
  const auto total = static_cast<std::int64_t>(n * n);
  // Exceptions may not cross the OpenMP region; the first is rethrown after.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < total; ++c) {
    try {
      colors[c] = window_color(scheme, family_member(part, c / n, c % n, params));
    } catch (...) {
#pragma omp critical(lcert_color_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return intern(n, std::move(colors));
}

namespace serial {

ColorTable build_color_table(const Scheme& scheme, const IdPartition& part, const FamilyParams& params) {
  std::vector<WindowColor> colors;
  colors.reserve(part.n * part.n);
  for (std::size_t i = 0; i < part.n; ++i) {
    for (std::size_t j = 0; j < part.n; ++j) colors.push_back(window_color(scheme, family_member(part, i, j, params)));
  }
  return intern(part.n, std::move(colors));
}

}  // namespace serial

std::optional<std::array<std::size_t, 4>> find_monochromatic_c4(const ColorTable& t) {
  // (colour, j, j') -> first row holding that colour at both columns.
  std::unordered_map<std::uint64_t, std::size_t> first_row;
  const auto key = [&](std::uint32_t colour, std::size_t j, std::size_t jp) {
    return (static_cast<std::uint64_t>(colour) * t.cols + j) * t.cols + jp;
  };
  for (std::size_t i = 0; i < t.rows; ++i) {
    std::unordered_map<std::uint32_t, std::vector<std::size_t>> by_colour;
    for (std::size_t j = 0; j < t.cols; ++j) by_colour[t.at(i, j)].push_back(j);
    std::optional<std::array<std::size_t, 4>> best;
    for (const auto& [colour, cols] : by_colour) {
      for (std::size_t x = 0; x < cols.size(); ++x) {
        for (std::size_t y = x + 1; y < cols.size(); ++y) {
          auto [it, fresh] = first_row.try_emplace(key(colour, cols[x], cols[y]), i);
          if (fresh) continue;
          const std::array<std::size_t, 4> hit{it->second, cols[x], i, cols[y]};
          if (!best || hit < *best) best = hit;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

FoolingReport fooling_demo(const Scheme& scheme, const FamilyParams& params) {
  FoolingReport report;
  report.params = params.resolved();
  const FamilyParams& f = report.params;
  if (f.r < scheme.radius()) {
    throw std::invalid_argument("family radius " + std::to_string(f.r) + " is below the verifier radius " +
                                std::to_string(scheme.radius()));
  }
  report.partition = make_partition(f);
  const IdPartition& part = report.partition;
  report.family_diameter = diameter(family_member(part, 0, 0, f).instance.graph);

  const ColorTable table = build_color_table(scheme, part, f);
  for (const auto& c : table.palette) report.color_bits = std::max(report.color_bits, c.bits());
  report.distinct_colors = table.distinct();
  report.largest_class = table.largest_class();
  report.c4 = find_monochromatic_c4(table);
  if (!report.c4) return report;

  const auto [i, j, ip, jp] = *report.c4;
  const LBInstance x = family_member(part, i, j, f);
  const LBInstance y = family_member(part, ip, jp, f);
  report.spliced = connect_pair(x, y);
  const Instance& spliced = report.spliced->instance;
  const std::size_t offset = report.spliced->offset;

  const Assignment px = scheme.prove(x.instance);
  const Assignment py = scheme.prove(y.instance);
  report.spliced_certs = px;
  report.spliced_certs.insert(report.spliced_certs.end(), py.begin(), py.end());
  report.verdict = run_verifier(scheme, spliced, report.spliced_certs);

  // Window consistency: every ball of the spliced instance must reappear,
  // certificates and identifiers included, in one of the four yes-instances
  // at the same position.
  const std::array<LBInstance, 4> sources{x, y, family_member(part, i, jp, f), family_member(part, ip, j, f)};
  std::array<Assignment, 4> source_certs{px, py, scheme.prove(sources[2].instance),
                                         scheme.prove(sources[3].instance)};
  const std::size_t radius = f.r;
  for (Vertex v = 0; v < spliced.size(); ++v) {
    const View here = ball(spliced, v, radius, report.spliced_certs);
    const Vertex local = v < offset ? v : static_cast<Vertex>(v - offset);
    bool matched = false;
    for (std::size_t s = 0; s < sources.size() && !matched; ++s) {
      matched = views_isomorphic(here, ball(sources[s].instance, local, radius, source_certs[s]));
    }
    ++report.window_checked;
    if (!matched) ++report.window_mismatches;
  }
  return report;
}

}  // namespace lcert
