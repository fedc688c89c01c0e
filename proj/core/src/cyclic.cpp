#include "prym/cyclic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "prym/linalg.hpp"

namespace prym {

int CyclicCurveConfig::g() const {
  int s = 0;
  for (int di : d) s += di;
  return s;
}

void CyclicCurveConfig::validate() const {
  if (d.empty()) throw std::invalid_argument("configuration needs at least one component");
  for (int di : d)
    if (di < 1) throw std::invalid_argument("component degrees must be positive");
}

void GluingData::validate(int n) const {
  if ((int)lambda.size() != n)
    throw std::invalid_argument("gluing needs one scalar per node");
  for (const auto& l : lambda)
    if (l == 0) throw std::invalid_argument("gluing scalars must be nonzero");
}

namespace {
int mod_step(int from, int to, int n) {
  int s = (to - from) % n;
  return s < 0 ? s + n : s;
}
void check_index(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("component index out of range");
}
}  // namespace

bool cyclic_less(int i, int j, int k, int n, bool left_strict, bool right_strict) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_index(i, n);
  check_index(j, n);
  check_index(k, n);
  int s1 = mod_step(i, j, n), s2 = mod_step(j, k, n);
  if (left_strict && s1 == 0) return false;
  if (right_strict && s2 == 0) return false;
  return s1 + s2 <= n;
}

bool cyclic_chain4(int i, int j, int k, int l, int n, bool s1s, bool s2s, bool s3s) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  check_index(i, n);
  check_index(j, n);
  check_index(k, n);
  check_index(l, n);
  int s1 = mod_step(i, j, n), s2 = mod_step(j, k, n), s3 = mod_step(k, l, n);
  if (s1s && s1 == 0) return false;
  if (s2s && s2 == 0) return false;
  if (s3s && s3 == 0) return false;
  return s1 + s2 + s3 <= n;
}

bool shape_valid(const CyclicCurveConfig& cfg, const LineBundleShape& shape) {
  cfg.validate();
  if ((int)shape.comps.size() != cfg.n()) return false;
  for (int i = 0; i < cfg.n(); ++i) {
    const auto& c = shape.comps[i];
    if (c.k < 0 || c.a0 < 0 || c.a0 > 1 || c.ainf < 0 || c.ainf > 1) return false;
    if (c.present && 2 * c.k + c.a0 + c.ainf > cfg.d[i]) return false;
  }
  return true;
}

namespace {

// Sparse description of one node condition: entry = sign * lambda_{node}
// on the previous component's top coefficient, entry = -1 on the current
// component's constant coefficient (each suppressed by a base point).
struct RowEntry {
  int col;
  int sign;
  int lambda;  // node index (0-based) when the entry carries lambda, else -1
};

struct System {
  int nvars = 0;
  std::vector<std::vector<RowEntry>> rows;
};

System build_system(const CyclicCurveConfig& cfg, const LineBundleShape& shape) {
  cfg.validate();
  const int n = cfg.n();
  if ((int)shape.comps.size() != n)
    throw std::invalid_argument("shape has wrong number of components");
  System sys;
  std::vector<int> offset(n, -1);
  for (int i = 0; i < n; ++i) {
    if (!shape.comps[i].present) continue;
    if (shape.comps[i].k < 0) throw std::invalid_argument("negative k");
    offset[i] = sys.nvars;
    sys.nvars += shape.comps[i].k + 1;
  }
  for (int node = 0; node < n; ++node) {
    int prev = (node + n - 1) % n, cur = node;
    std::vector<RowEntry> row;
    const auto& pc = shape.comps[prev];
    if (pc.present && pc.ainf == 0)
      row.push_back({offset[prev] + pc.k, +1, node});  // lambda * top coeff
    const auto& cc = shape.comps[cur];
    if (cc.present && cc.a0 == 0) row.push_back({offset[cur], -1, -1});
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

template <class F>
int rank_rational_or(std::vector<std::vector<F>>& m);
template <>
int rank_rational_or<Rational>(std::vector<std::vector<Rational>>& m) {
  return rank_rational(m);
}
template <>
int rank_rational_or<RatFn>(std::vector<std::vector<RatFn>>& m) {
  return rank_ratfn(m);
}

template <class F, class Const, class Lambda>
int kernel_dim(const System& sys, Const make_const, Lambda make_lambda) {
  std::vector<std::vector<F>> m(sys.rows.size(),
                                std::vector<F>(sys.nvars, make_const(Rational(0))));
  if (sys.nvars == 0) return 0;
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    for (const auto& e : sys.rows[r]) {
      F v = (e.lambda >= 0) ? make_lambda(e.lambda) : make_const(Rational(1));
      if (e.sign < 0) v = make_const(Rational(0)) - v;
      m[r][e.col] = m[r][e.col] + v;
    }
  int rk = rank_rational_or<F>(m);
  return sys.nvars - rk;
}

}  // namespace

int h0_exact(const CyclicCurveConfig& cfg, const LineBundleShape& shape,
             const GluingData& glue) {
  glue.validate(cfg.n());
  System sys = build_system(cfg, shape);
  return kernel_dim<Rational>(
      sys, [](const Rational& c) { return c; },
      [&](int i) { return glue.lambda[i]; });
}

int h0_generic(const CyclicCurveConfig& cfg, const LineBundleShape& shape) {
  System sys = build_system(cfg, shape);
  const int n = cfg.n();
  return kernel_dim<RatFn>(
      sys, [n](const Rational& c) { return RatFn::constant(n, c); },
      [n](int i) { return RatFn::variable(n, i); });
}

H0Decomposition h0_decompose(const CyclicCurveConfig& cfg,
                             const LineBundleShape& shape) {
  cfg.validate();
  const int n = cfg.n();
  if ((int)shape.comps.size() != n)
    throw std::invalid_argument("shape has wrong number of components");
  H0Decomposition dec;
  dec.base.resize(n, 0);
  dec.marks.resize(n);
  std::vector<bool> deleted(n), unmarked(n), can_start(n), can_end(n);
  for (int i = 0; i < n; ++i) {
    const auto& c = shape.comps[i];
    if (!c.present) {
      deleted[i] = true;
      dec.marks[i] = "deleted";
      continue;
    }
    dec.base[i] = std::max(0, c.k + c.a0 + c.ainf - 1);
    if (c.a0 == 1 && c.ainf == 1) {
      // full section space already counted in base; the component supports
      // nothing crossing its nodes
      deleted[i] = true;
      dec.marks[i] = "deleted";
      continue;
    }
    can_start[i] = (c.ainf == 0) && (c.a0 == 1 || c.k > 0);
    can_end[i] = (c.a0 == 0) && (c.ainf == 1 || c.k > 0);
    unmarked[i] = !can_start[i] && !can_end[i];
    if (can_start[i] && can_end[i])
      dec.marks[i] = "0inf";
    else if (can_start[i])
      dec.marks[i] = "0";
    else if (can_end[i])
      dec.marks[i] = "inf";
  }
  // Forward walks from each start mark: interiors must be unmarked; the walk
  // ends at the first marked vertex, producing a section iff it can end.
  for (int i = 0; i < n; ++i) {
    if (!can_start[i]) continue;
    for (int t = 1; t < n; ++t) {
      int v = (i + t) % n;
      if (deleted[v]) break;
      if (unmarked[v]) continue;
      if (can_end[v]) dec.segments.emplace_back(i + 1, v + 1);
      break;
    }
  }
  // Full wrap: a single doubly-marked vertex with everything else unmarked
  // supports one section running once around the cycle for every gluing.
  for (int i = 0; i < n; ++i) {
    if (!(can_start[i] && can_end[i])) continue;
    bool ok = true;
    for (int v = 0; v < n; ++v)
      if (v != i && !unmarked[v]) ok = false;
    if (ok) dec.segments.emplace_back(i + 1, i + 1);
  }
  dec.cycle_configuration = true;
  for (int i = 0; i < n; ++i) {
    const auto& c = shape.comps[i];
    if (!c.present || c.k != 0 || c.a0 != 0 || c.ainf != 0)
      dec.cycle_configuration = false;
  }
  return dec;
}

int h0_combinatorial(const CyclicCurveConfig& cfg, const LineBundleShape& shape,
                     bool special_cycle) {
  H0Decomposition dec = h0_decompose(cfg, shape);
  int h = 0;
  for (int b : dec.base) h += b;
  h += (int)dec.segments.size();
  if (special_cycle && dec.cycle_configuration) h += 1;
  return h;
}

int stratum_dim(const CyclicCurveConfig& cfg, const LineBundleShape& shape,
                bool needs_special_gluing) {
  cfg.validate();
  if ((int)shape.comps.size() != cfg.n())
    throw std::invalid_argument("shape has wrong number of components");
  int dim = 0;
  for (int i = 0; i < cfg.n(); ++i) {
    const auto& c = shape.comps[i];
    if (!c.present) continue;
    int free_deg = cfg.d[i] - 2 * c.k - c.a0 - c.ainf;
    if (free_deg < 0)
      throw std::invalid_argument("inconsistent shape: negative free degree");
    dim += free_deg;
  }
  return dim + (needs_special_gluing ? 0 : 1);
}

std::vector<LineBundleShape> enumerate_shapes(const CyclicCurveConfig& cfg) {
  cfg.validate();
  std::vector<std::vector<ComponentShape>> options(cfg.n());
  for (int i = 0; i < cfg.n(); ++i) {
    options[i].push_back({false, 0, 0, 0});
    for (int k = 0; 2 * k <= cfg.d[i]; ++k)
      for (int a0 = 0; a0 <= 1; ++a0)
        for (int ainf = 0; ainf <= 1; ++ainf)
          if (2 * k + a0 + ainf <= cfg.d[i]) options[i].push_back({true, k, a0, ainf});
  }
  std::vector<LineBundleShape> all;
  LineBundleShape cur;
  cur.comps.resize(cfg.n());
  auto rec = [&](auto&& self, int i) -> void {
    if (i == cfg.n()) {
      all.push_back(cur);
      return;
    }
    for (const auto& opt : options[i]) {
      cur.comps[i] = opt;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return all;
}

int martens_max_dim(const CyclicCurveConfig& cfg, int r) {
  cfg.validate();
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  int best = -1;
  for (const auto& shape : enumerate_shapes(cfg)) {
    H0Decomposition dec = h0_decompose(cfg, shape);
    int hg = h0_generic(cfg, shape);
    if (hg >= r + 1) {
      best = std::max(best, stratum_dim(cfg, shape, false));
    } else if (dec.cycle_configuration && hg + 1 >= r + 1) {
      best = std::max(best, stratum_dim(cfg, shape, true));
    }
  }
  return best;
}

namespace {
bool residual_ok(const CyclicCurveConfig& cfg, const std::vector<int>& use_e,
                 const std::vector<int>& use_2e) {
  std::vector<int> rem = cfg.d;
  for (int i : use_e) rem[i - 1] -= 1;
  for (int i : use_2e) rem[i - 1] -= 2;
  for (int v : rem)
    if (v < 0) return false;
  return true;
}
}  // namespace

std::vector<StratumDescriptor> sing_strata(const CyclicCurveConfig& cfg) {
  cfg.validate();
  const int n = cfg.n(), g = cfg.g();
  std::vector<StratumDescriptor> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (residual_ok(cfg, {}, {i, j}))
        out.push_back({"A", {i, j}, 0, g - 4, false});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (!residual_ok(cfg, {i, k}, {j})) continue;
        if (cyclic_less(i, j, k, n, false, false))
          out.push_back({"B", {i, j, k}, 0, g - 4, false});
        if (cyclic_less(i, j, k, n, true, true))
          out.push_back({"B'", {i, j, k}, 0, g - 4, true});
      }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (!residual_ok(cfg, {i, j, k, l}, {})) continue;
          // repeated 0- or inf-points fold into delta and belong to A/B
          if (i != k && j != l && cyclic_chain4(i, j, k, l, n, false, true, false))
            out.push_back({"C", {i, j, k, l}, 0, g - 4, false});
          if (cyclic_chain4(i, j, k, l, n, true, false, true))
            out.push_back({"C'", {i, j, k, l}, 0, g - 4, true});
        }
  return out;
}

std::vector<StratumDescriptor> sing_k_strata(int g, CaseTag c, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (g < 2) throw std::invalid_argument("g must be at least 2");
  std::vector<StratumDescriptor> out;
  if (c == CaseTag::DG) {
    if (g - 2 * k >= 0) {
      out.push_back({"A_k", {1}, k, g - 2 * k, false});
      out.push_back({"B_k", {1, 1}, k, g - 2 * k, false});
    }
  } else {
    if (g - 2 * k - 1 >= 0) {
      out.push_back({"A_k", {2}, k, g - 2 * k, false});
      out.push_back({"B_k", {2, 2}, k, g - 2 * k, false});
    }
    if (g - 2 * k >= 0) {
      out.push_back({"B_k", {1, 2}, k, g - 2 * k, false});
      out.push_back({"B_k", {2, 1}, k, g - 2 * k, false});
    }
  }
  return out;
}

namespace {
[[noreturn]] void parse_fail(const std::string& text, std::size_t pos,
                             const std::string& expected) {
  throw std::invalid_argument("shape text error at position " +
                              std::to_string(pos) + ": expected " + expected +
                              " in '" + text + "'");
}

std::vector<std::string> split_trim(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, sep)) {
    std::size_t b = cur.find_first_not_of(" \t");
    std::size_t e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return parts;
}

int parse_int_field(const std::string& whole, const std::string& field,
                    const std::string& key) {
  auto kv = split_trim(field, '=');
  if (kv.size() != 2 || kv[0] != key)
    parse_fail(whole, whole.find(field), "'" + key + "=<int>'");
  try {
    std::size_t used = 0;
    int v = std::stoi(kv[1], &used);
    if (used != kv[1].size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    parse_fail(whole, whole.find(field), "integer value for '" + key + "'");
  }
}
}  // namespace

std::pair<CyclicCurveConfig, LineBundleShape> parse_shape_text(const std::string& s) {
  auto sections = split_trim(s, ';');
  if (sections.size() < 2) parse_fail(s, 0, "'n=...; d=...; comp1: ...'");
  int n = parse_int_field(s, sections[0], "n");
  if (n < 1) parse_fail(s, 0, "positive n");
  auto dkv = split_trim(sections[1], '=');
  if (dkv.size() != 2 || dkv[0] != "d") parse_fail(s, s.find(sections[1]), "'d=<list>'");
  CyclicCurveConfig cfg;
  for (const auto& tok : split_trim(dkv[1], ',')) {
    try {
      cfg.d.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      parse_fail(s, s.find(tok), "integer degree");
    }
  }
  if ((int)cfg.d.size() != n) parse_fail(s, s.find(sections[1]), "n degrees");
  cfg.validate();
  if ((int)sections.size() != 2 + n) parse_fail(s, s.size(), "one section per component");
  LineBundleShape shape;
  shape.comps.resize(n);
  for (int i = 0; i < n; ++i) {
    const std::string& sec = sections[2 + i];
    std::string head = "comp" + std::to_string(i + 1) + ":";
    if (sec.rfind(head, 0) != 0) parse_fail(s, s.find(sec), "'" + head + "'");
    std::string body = sec.substr(head.size());
    std::size_t b = body.find_first_not_of(" \t");
    body = (b == std::string::npos) ? "" : body.substr(b);
    if (body == "absent") {
      shape.comps[i] = {false, 0, 0, 0};
      continue;
    }
    auto fields = split_trim(body, ',');
    if (fields.size() != 3) parse_fail(s, s.find(sec), "'k=..,a0=..,ainf=..'");
    shape.comps[i].present = true;
    shape.comps[i].k = parse_int_field(s, fields[0], "k");
    shape.comps[i].a0 = parse_int_field(s, fields[1], "a0");
    shape.comps[i].ainf = parse_int_field(s, fields[2], "ainf");
    if (shape.comps[i].k < 0 || shape.comps[i].a0 < 0 || shape.comps[i].a0 > 1 ||
        shape.comps[i].ainf < 0 || shape.comps[i].ainf > 1)
      parse_fail(s, s.find(sec), "k >= 0 and a0, ainf in {0,1}");
  }
  return {cfg, shape};
}

std::string format_shape_text(const CyclicCurveConfig& cfg,
                              const LineBundleShape& shape) {
  cfg.validate();
  if ((int)shape.comps.size() != cfg.n())
    throw std::invalid_argument("shape has wrong number of components");
  std::ostringstream os;
  os << "n=" << cfg.n() << "; d=";
  for (int i = 0; i < cfg.n(); ++i) os << (i ? "," : "") << cfg.d[i];
  for (int i = 0; i < cfg.n(); ++i) {
    os << "; comp" << (i + 1) << ": ";
    const auto& c = shape.comps[i];
    if (!c.present)
      os << "absent";
    else
      os << "k=" << c.k << ",a0=" << c.a0 << ",ainf=" << c.ainf;
  }
  return os.str();
}

}  // namespace prym
