#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tpsurf/basepoint.hpp"
#include "tpsurf/format.hpp"
#include "tpsurf/random.hpp"
#include "tpsurf/surface.hpp"

namespace tpsurf::cli {

using json = nlohmann::ordered_json;

/// Contents of an input file:
///
///   bidegree: 2 2
///   p0: t^2*u^2 + s^2*u*v
///   ...
///   p3: s^2*u^2
///   seed: 7        (optional)
///   box: 6 3       (optional)
///
/// `#` starts a comment.
struct SurfaceInput {
  int a = 0;
  int b = 0;
  std::array<std::string, 4> p;
  std::optional<std::uint64_t> seed;
  std::optional<BiDeg> box;

  // where each value starts, for located errors
  int bidegree_line = 0;
  std::array<int, 4> p_line{};
  std::array<int, 4> p_column{};
};

struct Limits {
  std::size_t max_strand_columns = 1600;  // 4*dim R_mu for any strand formed
  std::size_t max_det_size = 24;
};

struct Options {
  std::optional<std::uint64_t> seed;  // overrides the input file
  std::optional<BiDeg> box;           // overrides the input file
  bool fast_det = false;
  bool allow_basepoints = false;
  int trials = 8;
  Limits limits;
};

struct Outcome {
  json report;
  int exit_code = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<long long> parse_ints(std::string_view s, std::size_t count, int line, int col) {
  std::istringstream is{std::string(s)};
  std::vector<long long> out;
  long long x;
  while (is >> x) out.push_back(x);
  if (!is.eof() || out.size() != count)
    throw ParseError(line, col, "expected " + std::to_string(count) + " integer(s)");
  return out;
}

}  // namespace detail

inline SurfaceInput parse_input(std::string_view text) {
  SurfaceInput in;
  bool have_bideg = false;
  std::array<bool, 4> have_p{};
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (detail::trim(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, 1, "expected 'key: value'");
    const std::string key(detail::trim(line.substr(0, colon)));
    const std::string_view value = line.substr(colon + 1);
    const int vcol = static_cast<int>(colon) + 2;
    if (key == "bidegree") {
      if (have_bideg) throw ParseError(line_no, 1, "duplicate bidegree");
      const auto v = detail::parse_ints(value, 2, line_no, vcol);
      if (v[0] < 1 || v[1] < 1 || v[0] > 64 || v[1] > 64)
        throw ParseError(line_no, vcol, "bidegree entries must lie in 1..64");
      in.a = static_cast<int>(v[0]);
      in.b = static_cast<int>(v[1]);
      in.bidegree_line = line_no;
      have_bideg = true;
    } else if (key.size() == 2 && key[0] == 'p' && key[1] >= '0' && key[1] <= '3') {
      const auto i = static_cast<std::size_t>(key[1] - '0');
      if (have_p[i]) throw ParseError(line_no, 1, "duplicate " + key);
      const std::string_view body = detail::trim(value);
      in.p[i] = std::string(body);
      in.p_line[i] = line_no;
      // parser columns are offsets into the trimmed value
      in.p_column[i] = static_cast<int>(body.data() - line.data());
      have_p[i] = true;
    } else if (key == "seed") {
      const auto v = detail::parse_ints(value, 1, line_no, vcol);
      if (v[0] < 0) throw ParseError(line_no, vcol, "seed must be nonnegative");
      in.seed = static_cast<std::uint64_t>(v[0]);
    } else if (key == "box") {
      const auto v = detail::parse_ints(value, 2, line_no, vcol);
      if (v[0] < 0 || v[1] < 0) throw ParseError(line_no, vcol, "box entries must be nonnegative");
      in.box = BiDeg{static_cast<int>(v[0]), static_cast<int>(v[1])};
    } else {
      throw ParseError(line_no, 1, "unknown key '" + key + "'");
    }
  }
  if (!have_bideg) throw ParseError(line_no, 1, "missing bidegree");
  for (std::size_t i = 0; i < 4; ++i)
    if (!have_p[i]) throw ParseError(line_no, 1, "missing p" + std::to_string(i));
  return in;
}

/// Parses the four forms; every failure is reported as a located ParseError.
inline TPSurface to_surface(const SurfaceInput& in) {
  const BiDeg d{in.a, in.b};
  std::array<BiPoly, 4> p;
  for (std::size_t i = 0; i < 4; ++i) {
    p[i] = parse_bipoly(in.p[i], std::nullopt, in.p_line[i], in.p_column[i]);
    if (p[i].is_zero()) p[i] = BiPoly(d);
    if (p[i].deg() != d)
      throw ParseError(in.p_line[i], in.p_column[i] + 1,
                       "p" + std::to_string(i) + " has bidegree " + p[i].deg().str() + ", expected " + d.str());
  }
  try {
    return TPSurface(in.a, in.b, std::move(p));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DependentGenerators)
      throw ParseError(in.bidegree_line, 1, "generators not independent");
    throw;
  }
}

inline std::string format_input(int a, int b, const std::array<BiPoly, 4>& p, std::optional<std::uint64_t> seed,
                                const std::string& comment = {}) {
  std::string out;
  if (!comment.empty()) out += "# " + comment + "\n";
  out += "bidegree: " + std::to_string(a) + " " + std::to_string(b) + "\n";
  if (seed) out += "seed: " + std::to_string(*seed) + "\n";
  for (std::size_t i = 0; i < 4; ++i) out += "p" + std::to_string(i) + ": " + to_string(p[i]) + "\n";
  return out;
}

inline int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::DependentGenerators:
      return 2;
    case ErrorCode::Basepoints:
    case ErrorCode::MultipleLinearSyzygies:
    case ErrorCode::SingularStrand:
    case ErrorCode::DegreeAnomaly:
    case ErrorCode::NotSquare:
    case ErrorCode::DegenerateLinearSyzygy:
    case ErrorCode::DegreeTooLow:
      return 3;
    case ErrorCode::WorkLimit:
      return 4;
    default:
      return 1;
  }
}

namespace detail {

inline json to_json(BiDeg d) { return json::array({d.m, d.n}); }

inline json to_json(const SyzygyVector& g) {
  json out = json::array();
  for (const auto& gi : g.g) out.push_back(to_string(gi));
  return out;
}

inline json to_json(const MatQ& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    out.push_back(row);
  }
  return out;
}

inline json error_json(const Error& e) {
  json out;
  out["code"] = std::string(error_code_name(e.code()));
  out["message"] = e.what();
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    out["line"] = pe->line();
    out["column"] = pe->column();
  }
  return out;
}

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline std::size_t strand_columns(BiDeg mu) { return 4 * mu.dim(); }

inline void require_columns(std::size_t cols, const Limits& lim, const std::string& what) {
  if (cols > lim.max_strand_columns)
    fail(ErrorCode::WorkLimit, what + " needs " + std::to_string(cols) + " columns, above the limit of " +
                                   std::to_string(lim.max_strand_columns) + " (raise --max-strand)");
}

inline void check_analyze_limits(const TPSurface& s, const Limits& lim) {
  require_columns(strand_columns({3 * s.a(), 3 * s.b()}), lim, "basepoint check");
  const auto size = static_cast<std::size_t>(2 * s.a() * s.b());
  if (size > lim.max_det_size)
    fail(ErrorCode::WorkLimit, "determinant of size " + std::to_string(size) + " is above the limit of " +
                                   std::to_string(lim.max_det_size) + " (raise --max-det)");
}

inline BiDeg default_box(const TPSurface& s) { return {3 * s.a(), 3 * s.b()}; }

inline json betti_json(const TPSurface& s, BiDeg box) {
  json out;
  out["box"] = to_json(box);
  json gens = json::array(), shifts = json::array();
  const auto degs = min_syz_generators(s, box);
  for (BiDeg d : degs) {
    gens.push_back(to_json(d));
    shifts.push_back(json::array({-(d.m + s.a()), -(d.n + s.b())}));
  }
  out["count"] = degs.size();
  out["generators"] = gens;
  out["shifts"] = shifts;
  return out;
}

}  // namespace detail

inline Outcome cmd_analyze(const SurfaceInput& in, const Options& opt = {}) {
  Outcome out;
  json& r = out.report;
  r["command"] = "analyze";
  r["input"] = {{"bidegree", json::array({in.a, in.b})}, {"p", json(in.p)}};
  for (const char* key : {"basepoints", "linear_syzygy", "normalized", "special_pair", "nu_strand", "implicit",
                          "singular_line", "p22_class", "syzygy_generators", "error"})
    r[key] = nullptr;
  json timings;
  detail::Stopwatch clock;

  try {
    const TPSurface s = to_surface(in);
    detail::check_analyze_limits(s, opt.limits);
    const std::optional<BiDeg> box = opt.box ? opt.box : in.box;
    if (box) detail::require_columns(detail::strand_columns(*box), opt.limits, "syzygy box");
    timings["parse_ms"] = clock.lap_ms();

    BasepointOptions bpo;
    bpo.seed = opt.seed.value_or(in.seed.value_or(1));
    bpo.trials = opt.trials;
    const BasepointResult bp = basepoint_check(s, bpo);
    json bj;
    bj["status"] = to_string(bp.status);
    bj["free"] = bp.free;
    bj["certificate"] = bp.certificate;
    bj["certifying_degree"] = bp.certifying_degree ? detail::to_json(*bp.certifying_degree) : json(nullptr);
    if (bp.witness)
      bj["witness"] = {{"prime", bp.witness->prime},
                       {"st", json::array({bp.witness->st[0], bp.witness->st[1]})},
                       {"uv", json::array({bp.witness->uv[0], bp.witness->uv[1]})}};
    else
      bj["witness"] = nullptr;
    bj["log"] = bp.log;
    r["basepoints"] = bj;
    timings["basepoints_ms"] = clock.lap_ms();
    if (!bp.free && !opt.allow_basepoints)
      fail(ErrorCode::Basepoints, "U is not certified basepoint free (" + bp.certificate +
                                      "); pass --allow-basepoints to continue");

    std::optional<LinearSyzygy> lin;
    try {
      lin = detect_linear_syzygy(s);
    } catch (const MultipleLinearSyzygiesError& e) {
      json lj;
      lj["count"] = e.uv_strand.size() + e.st_strand.size();
      lj["uv_strand"] = json::array();
      lj["st_strand"] = json::array();
      for (const auto& g : e.uv_strand) lj["uv_strand"].push_back(detail::to_json(g));
      for (const auto& g : e.st_strand) lj["st_strand"].push_back(detail::to_json(g));
      r["linear_syzygy"] = lj;
      throw;
    }
    if (lin)
      r["linear_syzygy"] = {{"bidegree", detail::to_json(lin->vector.mu)},
                            {"orientation", to_string(lin->orientation)},
                            {"vector", detail::to_json(lin->vector)}};
    timings["linear_syzygy_ms"] = clock.lap_ms();

    ImplicitOptions io;
    io.fast_det = opt.fast_det;
    const ImplicitResult res = implicitize(s, io);
    timings["implicitize_ms"] = clock.lap_ms();

    const bool st = res.orientation == Orientation::ST;
    auto unswap = [st](const BiPoly& f) { return st ? f.swapped() : f; };
    auto unswap_syz = [st](const SyzygyVector& g) { return st ? g.swapped() : g; };
    if (res.normalized) {
      const NormalizedSurface& N = *res.normalized;
      json nj;
      nj["p"] = to_string(unswap(N.p));
      json gens = json::array();
      for (const auto& g : N.generators()) gens.push_back(to_string(unswap(g)));
      nj["generators"] = gens;
      nj["completing"] = json::array({N.completing[0], N.completing[1]});
      nj["basis_change"] = detail::to_json(N.basis_change);
      r["normalized"] = nj;
      const auto& syz = *res.syzygies;
      r["special_pair"] = {{"S1", detail::to_json(unswap_syz(syz[1]))}, {"S2", detail::to_json(unswap_syz(syz[2]))}};
    }
    r["nu_strand"] = {{"nu", detail::to_json(res.nu)},
                      {"rows", res.rows},
                      {"cols", res.cols},
                      {"path", res.used_linear_syzygy ? "linear_syzygy" : "generic"}};
    r["implicit"] = {{"equation", to_string(res.F)},
                     {"degree", res.F.deg()},
                     {"k", res.k},
                     {"det_degree", res.det.deg()}};

    if (res.det_normalized) {
      const MatQ& C = res.normalized->basis_change;
      std::array<Rational, 4> r0, r1;
      for (std::size_t i = 0; i < 4; ++i) {
        r0[i] = C(0, i);
        r1[i] = C(1, i);
      }
      const int frame_a = st ? s.b() : s.a();
      const XPoly Fn = squarefree_part(*res.det_normalized);
      r["singular_line"] = {
          {"line", json::array({to_string(XPoly::linear(r0)), to_string(XPoly::linear(r1))})},
          {"multiplicity_det", line_multiplicity(*res.det_normalized, {0, 1})},
          {"multiplicity_F", line_multiplicity(Fn, {0, 1})},
          {"bound", 2 * s.a() * s.b() - 2 * frame_a}};
      if (s.a() == 2 && s.b() == 2) r["p22_class"] = to_string(classify_p22(res.normalized->p));
    }
    timings["report_ms"] = clock.lap_ms();

    if (box) {
      r["syzygy_generators"] = detail::betti_json(s, *box);
      timings["betti_ms"] = clock.lap_ms();
    }
  } catch (const Error& e) {
    r["error"] = detail::error_json(e);
    out.exit_code = exit_code(e.code());
  }
  r["timings"] = timings;
  return out;
}

inline Outcome cmd_betti(const SurfaceInput& in, const Options& opt = {}) {
  Outcome out;
  json& r = out.report;
  r["command"] = "betti";
  r["input"] = {{"bidegree", json::array({in.a, in.b})}, {"p", json(in.p)}};
  r["syzygy_generators"] = nullptr;
  r["error"] = nullptr;
  json timings;
  detail::Stopwatch clock;
  try {
    const TPSurface s = to_surface(in);
    const BiDeg box = opt.box ? *opt.box : in.box ? *in.box : detail::default_box(s);
    detail::require_columns(detail::strand_columns(box), opt.limits, "syzygy box");
    r["syzygy_generators"] = detail::betti_json(s, box);
    timings["betti_ms"] = clock.lap_ms();
  } catch (const Error& e) {
    r["error"] = detail::error_json(e);
    out.exit_code = exit_code(e.code());
  }
  r["timings"] = timings;
  return out;
}

enum class RandomMode { WithLinearSyzygy, Dense };

/// A random input file; the same (a, b, mode, seed) always gives the same text.
inline std::string cmd_random(int a, int b, RandomMode mode, std::uint64_t seed) {
  if (a < 1 || b < 1) fail(ErrorCode::DegreeTooLow, "random needs a,b >= 1");
  std::mt19937_64 rng(seed);
  const BiDeg d{a, b};
  for (;;) {
    std::array<BiPoly, 4> p;
    if (mode == RandomMode::WithLinearSyzygy) {
      const BiPoly q = random_form(BiDeg{a, b - 1}, rng);
      p = {q * BiPoly::u(), q * BiPoly::v(), random_form(d, rng), random_form(d, rng)};
    } else {
      for (auto& f : p) f = random_form(d, rng);
    }
    try {
      TPSurface check(a, b, p);
    } catch (const Error&) {
      continue;
    }
    const std::string what = mode == RandomMode::WithLinearSyzygy ? "with-linear-syzygy" : "dense";
    return format_input(a, b, p, seed, "random " + what + " surface");
  }
}

inline Outcome cmd_verify(const SurfaceInput& in, std::string_view F_text) {
  Outcome out;
  json& r = out.report;
  r["command"] = "verify";
  r["input"] = {{"bidegree", json::array({in.a, in.b})}, {"p", json(in.p)}};
  r["F"] = std::string(F_text);
  r["vanishes"] = nullptr;
  r["degree"] = nullptr;
  r["divides_2ab"] = nullptr;
  r["error"] = nullptr;
  try {
    const TPSurface s = to_surface(in);
    const XPoly F = parse_xpoly(F_text, 1, 0);
    const BiPoly comp = substitute(F, s.p());
    r["vanishes"] = comp.is_zero();
    r["degree"] = F.deg();
    r["divides_2ab"] = F.deg() > 0 && (2 * s.a() * s.b()) % F.deg() == 0;
  } catch (const Error& e) {
    r["error"] = detail::error_json(e);
    out.exit_code = exit_code(e.code());
  }
  return out;
}

namespace detail {

inline void render(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    os << pad << it.key() << ':';
    if (v.is_object()) {
      os << '\n';
      render(os, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_string() && v.size() > 2) {
      os << '\n';
      for (const auto& e : v) os << pad << "  - " << e.get<std::string>() << '\n';
    } else if (v.is_string()) {
      os << ' ' << v.get<std::string>() << '\n';
    } else {
      os << ' ' << v.dump() << '\n';
    }
  }
}

}  // namespace detail

/// Indented key/value rendering of a report, for terminals.
inline std::string render_text(const json& report) {
  std::ostringstream os;
  detail::render(os, report, 0);
  return os.str();
}

}  // namespace tpsurf::cli
