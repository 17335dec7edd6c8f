// gpack command line: parameter tables, certification runs and small calculators.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gpack/catalog.hpp"
#include "gpack/clifford.hpp"
#include "gpack/code.hpp"
#include "gpack/error.hpp"
#include "gpack/partition.hpp"
#include "json.hpp"

using namespace gpack;
using nlohmann::json;

namespace {

struct Global {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::size_t cap = kDefaultEnumerationCap;
  bool json = false;
  bool csv = false;
  std::string out;
};

std::string frac_or_float(double x, double tol) {
  if (auto r = recover_rational(x, 10000, tol)) return r->to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  auto dash = s.find('-');
  try {
    if (dash == std::string::npos) {
      auto v = std::stoul(s);
      return {v, v};
    }
    return {std::stoul(s.substr(0, dash)), std::stoul(s.substr(dash + 1))};
  } catch (const std::exception&) {
    throw ParseError("bad range '" + s + "'");
  }
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad " + what + " '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad " + what + " '" + s + "'");
  return v;
}

PermGroup resolve_group(const std::string& spec, const Global& g) {
  if (spec.size() > 1 && (spec[0] == 'S' || spec[0] == 'A') && std::isdigit(static_cast<unsigned char>(spec[1]))) {
    auto n = parse_count(spec.substr(1), "degree");
    return spec[0] == 'S' ? make_symmetric(n, g.cap) : make_alternating(n, g.cap);
  }
  for (const char* fam : {"PGL2:", "PSL2:"}) {
    if (spec.rfind(fam, 0) == 0) {
      auto q = parse_count(spec.substr(5), "field size");
      return spec[1] == 'G' ? make_pgl2(q, g.cap) : make_psl2(q, g.cap);
    }
  }
  std::filesystem::path p = spec.rfind("file:", 0) == 0 ? spec.substr(5) : spec;
  if (!std::filesystem::exists(p)) p = data_dir() / spec;
  if (!std::filesystem::exists(p)) p = data_dir() / (spec + ".gens");
  if (!std::filesystem::exists(p)) throw InvalidArgument("unknown group '" + spec + "'");
  return load_group(p, g.cap);
}

PermGroup resolve_subgroup(const PermGroup& g, const std::string& spec) {
  if (spec == "borel") return stabilizer(g, g.degree() - 1).renamed("B");
  if (spec.rfind("stab", 0) == 0) {
    auto k = parse_count(spec.substr(4), "point");
    if (k < 1 || k > g.degree()) throw InvalidArgument("point " + spec.substr(4) + " out of range");
    return stabilizer(g, k - 1).renamed("Stab(" + std::to_string(k) + ")");
  }
  throw InvalidArgument("subgroup spec must be stab<k> or borel");
}

RepPtr resolve_rep(const std::string& spec, const PermGroup& g, const CharacterTable& gt, const PermGroup& h,
                   const CharacterTable& ht, std::uint64_t seed) {
  if (spec.rfind("young:", 0) == 0) {
    auto lambda = Partition::parse(spec.substr(6));
    if (lambda.size() != g.degree()) throw InvalidArgument("partition size differs from the group degree");
    return young_orthogonal_rep(lambda);
  }
  if (spec == "perm") return tensor_power(g, 1);
  if (spec.rfind("perm^", 0) == 0) return tensor_power(g, static_cast<unsigned>(parse_count(spec.substr(5), "power")));
  std::optional<std::size_t> index;
  if (spec.rfind("irrep:", 0) == 0) index = parse_count(spec.substr(6), "character index");
  if (spec.rfind("deg:", 0) == 0) {
    index = gt.find_degree(parse_count(spec.substr(4), "degree"));
    if (!index) throw InvalidArgument("no irreducible of degree " + spec.substr(4));
  }
  if (!index) throw InvalidArgument("rep spec must be young:<partition>, perm, perm^k, irrep:<i> or deg:<d>");
  if (*index >= gt.size()) throw InvalidArgument("character index out of range");
  auto rep = realize_irrep(g, gt, h, ht, *index, seed);
  if (!rep) throw InvalidArgument("irreducible " + std::to_string(*index) + " has no carrier within budget");
  return rep;
}

class Output {
public:
  explicit Output(const Global& g) : g_(g) {}
  std::ostream& os() { return buf_; }
  void flush() {
    if (g_.out.empty()) {
      std::cout << buf_.str();
      return;
    }
    std::ofstream f(g_.out);
    if (!f) throw InvalidArgument("cannot write " + g_.out);
    f << buf_.str();
  }

private:
  const Global& g_;
  std::ostringstream buf_;
};

std::string expected_line(const CellComparison& c) {
  std::ostringstream os;
  os << "  N=" << c.expected.N << " n=" << c.expected.n << " m=" << c.expected.m << " expected " << c.expected.dc2
     << " simplex " << c.formula << " : ";
  if (c.agrees) os << "agrees";
  else if (!c.realized) os << "not realized";
  else os << "DIFFERS" << (c.match && c.match->measured ? " (built " + c.match->measured->to_string() + ")" : "");
  return os.str();
}

json comparison_json(const CellComparison& c) {
  return {{"N", c.expected.N},
          {"n", c.expected.n},
          {"m", c.expected.m},
          {"expected", c.expected.dc2.to_string()},
          {"simplex", c.formula.to_string()},
          {"realized", c.realized},
          {"agrees", c.agrees}};
}

void emit_entries(Output& out, const Global& g, const std::vector<CatalogEntry>& entries, const CatalogOptions& o) {
  if (g.json) out.os() << entries_to_json(entries, o) << '\n';
  else if (g.csv) out.os() << entries_to_csv(entries);
  else out.os() << entries_to_text(entries);
}

bool any_failed(const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries)
    if (e.status == CellStatus::failed) return true;
  return false;
}

int cmd_table_sn(const Global& g, const std::string& range, const std::string& chars, bool predict_only) {
  auto [lo, hi] = parse_range(range);
  if (lo < 4 || hi < lo || hi > 20) throw InvalidArgument("N range must lie in 4..20");
  if (!predict_only && hi > 8) throw InvalidArgument("full verification needs N <= 8; use --predict-only");
  CatalogOptions o;
  o.seed = g.seed;
  o.tol = g.tol;
  o.chars = chars;
  Output out(g);
  std::vector<CatalogEntry> all;
  std::vector<CellComparison> cmp;
  for (std::size_t N = lo; N <= hi; ++N) {
    std::vector<CatalogEntry> entries;
    if (predict_only) entries = predict_symmetric(N, chars);
    else
      for (auto src : {symmetric_source(N, g.seed), alternating_source(N, g.seed)}) {
        auto e = sweep(src, o);
        entries.insert(entries.end(), e.begin(), e.end());
      }
    if (N <= 8) {
      auto c = compare_cells(expected_symmetric(N), entries);
      cmp.insert(cmp.end(), c.begin(), c.end());
    }
    all.insert(all.end(), entries.begin(), entries.end());
  }
  sort_entries(all);
  bool ok = !any_failed(all);
  for (const auto& c : cmp) ok = ok && (predict_only ? c.formula == c.expected.dc2 : c.agrees);
  if (g.json) {
    auto j = json::parse(entries_to_json(all, o));
    j["expected"] = json::array();
    for (const auto& c : cmp) j["expected"].push_back(comparison_json(c));
    j["certified"] = ok;
    out.os() << j.dump(2) << '\n';
  } else {
    emit_entries(out, g, all, o);
    if (!g.csv) {
      out.os() << "reference cells:\n";
      for (const auto& c : cmp) out.os() << expected_line(c) << '\n';
      out.os() << (ok ? "certified" : "NOT certified") << '\n';
    }
  }
  out.flush();
  return ok ? 0 : 1;
}

std::string angle_string(const std::vector<double>& a, double tol) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + frac_or_float(std::abs(a[i]) < 1e-12 ? 0.0 : a[i], tol);
  return s + ")";
}

int cmd_table_pgl(const Global& g, const std::vector<std::size_t>& qs, const std::string& chars) {
  CatalogOptions o;
  o.seed = g.seed;
  o.tol = g.tol;
  o.chars = chars;
  Output out(g);
  bool ok = true;
  json jall = json::array();
  for (auto q : qs) {
    auto r = projective_report(static_cast<long long>(q), o);
    bool qok = !any_failed(r.entries);
    json jq;
    jq["q"] = q;
    jq["columns"] = json::array();
    if (!g.json) {
      out.os() << "q = " << q << "  (N = " << q + 1 << ")\n";
      emit_entries(out, g, r.entries, o);
    }
    for (const auto& c : r.columns) {
      bool cok = !c.realized || (c.dc2_ok && c.dtilde_ok);
      qok = qok && cok;
      json jc{{"column", c.column.column},   {"n", c.column.n},         {"m", c.column.m},
              {"dc2", c.column.dc2.to_string()}, {"realizations", c.entries.size()}, {"dc2_ok", c.dc2_ok},
              {"dtilde_ok", c.dtilde_ok}};
      if (c.column.dtilde) jc["dtilde_squared"] = c.column.dtilde->to_string();
      jq["columns"].push_back(jc);
      if (!g.json && !g.csv) {
        out.os() << "  column " << c.column.column << ": n=" << c.column.n << " m=" << c.column.m << " dc2=" << c.column.dc2;
        if (c.column.dtilde) out.os() << " dtilde^2=" << *c.column.dtilde;
        if (!c.realized) out.os() << "  no irreducible of this shape\n";
        else
          out.os() << "  " << c.entries.size() << " realization(s), dc2 " << (c.dc2_ok ? "ok" : "MISMATCH")
                   << (c.column.dtilde ? (c.dtilde_ok ? ", dtilde ok" : ", dtilde MISMATCH") : "") << '\n';
      }
    }
    jq["angle_sets"] = r.column8_angles;
    if (r.expected_angles) {
      jq["expected_angles"] = *r.expected_angles;
      jq["angles_ok"] = r.angles_ok;
      qok = qok && r.angles_ok;
    }
    if (!g.json && !g.csv) {
      for (const auto& a : r.column8_angles) out.os() << "  sin^2 set (n=q-1): " << angle_string(a, g.tol) << '\n';
      if (r.expected_angles)
        out.os() << "  reference set " << angle_string(*r.expected_angles, g.tol) << ": "
                 << (r.angles_ok ? "reproduced" : "NOT reproduced") << '\n';
    }
    jq["certified"] = qok;
    jall.push_back(jq);
    ok = ok && qok;
  }
  if (g.json) out.os() << json{{"seed", g.seed}, {"tolerance", g.tol}, {"reports", jall}}.dump(2) << '\n';
  else if (!g.csv) out.os() << (ok ? "certified" : "NOT certified") << '\n';
  out.flush();
  return ok ? 0 : 1;
}

std::vector<std::vector<std::size_t>> hook_lengths(const Partition& lambda) {
  auto conj = lambda.conjugate();
  std::vector<std::vector<std::size_t>> h(lambda.rows());
  for (std::size_t i = 0; i < lambda.rows(); ++i)
    for (std::size_t j = 0; j < lambda.parts[i]; ++j) h[i].push_back(lambda.parts[i] - j + conj.parts[j] - i - 1);
  return h;
}

int cmd_hook(const Global& g, const std::string& text, bool diagram) {
  auto lambda = Partition::parse(text);
  Output out(g);
  auto dim = hook_dimension(lambda);
  json j{{"partition", lambda.to_string()}, {"N", lambda.size()}, {"dimension", dim}};
  j["branching"] = json::array();
  for (const auto& mu : branching(lambda))
    j["branching"].push_back({{"partition", mu.to_string()}, {"dimension", hook_dimension(mu)}});
  if (diagram) j["hooks"] = hook_lengths(lambda);
  if (g.json) out.os() << j.dump(2) << '\n';
  else {
    out.os() << lambda.to_string() << " of S" << lambda.size() << ": dimension " << dim << '\n';
    if (diagram)
      for (const auto& row : hook_lengths(lambda)) {
        for (auto x : row) out.os() << ' ' << x;
        out.os() << '\n';
      }
    for (const auto& b : j["branching"])
      out.os() << "  " << b["partition"].get<std::string>() << " / " << b["dimension"].get<std::uint64_t>() << '\n';
  }
  out.flush();
  return 0;
}

int cmd_verify(const Global& gl, const std::string& group, bool derived, const std::string& hspec,
               const std::string& repspec, const std::string& chars, std::size_t samples) {
  auto g = resolve_group(group, gl);
  if (derived) g = derived_subgroup(g).renamed(g.name() + "'");
  auto h = resolve_subgroup(g, hspec);
  if (!is_two_transitive(g, h)) throw InvalidArgument("G does not act 2-transitively on G/H");
  auto gt = compute_table(g, gl.seed);
  auto ht = compute_table(h, gl.seed);
  auto rep = resolve_rep(repspec, g, gt, h, ht, gl.seed);
  auto chi = character_of(*rep, g, *gt.classes);
  double resid = 0;
  auto mult = decompose(gt, chi, &resid);
  std::optional<std::size_t> gi;
  std::size_t total = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    total += mult[i];
    if (mult[i]) gi = i;
  }
  if (total != 1) throw InvalidArgument("representation is not irreducible over G");
  auto dec = restrict_and_decompose(gt[*gi], g, gt, h, ht);
  std::vector<std::size_t> hdeg;
  for (std::size_t j = 0; j < ht.size(); ++j) hdeg.push_back(ht.degree(j));
  auto subsets = select_subsets(dec.multiplicities, hdeg, chars);
  if (subsets.empty()) throw InvalidArgument("restriction to H is irreducible; no proper isotypic subspace");

  Output out(gl);
  bool ok = true;
  json reports = json::array();
  for (const auto& s : subsets) {
    IsotypicSpec spec;
    spec.g = &g;
    spec.h = &h;
    spec.rep = rep;
    spec.h_table = &ht;
    spec.chars = s;
    spec.g_table = &gt;
    spec.g_char = *gi;
    auto code = build_isotypic_code(spec);
    auto sr = verify_simplex(code);
    auto census = spa_census(code);
    auto pred = predict_params(code.params.n, code.params.m, code.params.N);
    auto measured = recover_rational(code.params.dc2_min, 10000, gl.tol);
    bool fonda_ok = true;
    json fonda = json::array();
    if (h.order() <= 5000) {
      auto cosets = coset_transversal(g, h);
      for (std::size_t k = 1; k < cosets.size() && k <= samples; ++k) {
        auto f = verify_fonda2(g, h, *rep, gt, gt[*gi], ht, s, cosets.reps[k]);
        fonda_ok = fonda_ok && f.relative_residual <= gl.tol;
        fonda.push_back({{"direct", f.direct}, {"double_sum", f.double_sum}, {"relative_residual", f.relative_residual}});
      }
    }
    bool cert = sr.attained && sr.equidistant && census.size() == 1 && fonda_ok && measured && *measured == pred.dc2;
    ok = ok && cert;
    json r = json::parse(code_to_json(code));
    r["simplex"] = {{"bound", pred.dc2.to_string()},
                    {"relative_gap", sr.relative_gap},
                    {"attained", sr.attained},
                    {"equidistant", sr.equidistant},
                    {"equality_possible", sr.equality_possible}};
    r["angle_sets"] = census.size();
    r["double_sum_checks"] = fonda;
    r["certified"] = cert;
    reports.push_back(r);
    if (gl.csv) {
      if (reports.size() == 1) out.os() << code_csv_header() << '\n';
      out.os() << code_csv_row(code) << '\n';
    } else if (!gl.json) {
      out.os() << g.name() << " / " << h.name() << ", " << rep->provenance << ", chars {";
      for (std::size_t i = 0; i < s.size(); ++i) out.os() << (i ? "," : "") << s[i];
      out.os() << "}\n  [n,m,N] = [" << code.params.n << "," << code.params.m << "," << code.params.N << "]\n"
               << "  dc2 min " << frac_or_float(code.params.dc2_min, gl.tol) << ", max "
               << frac_or_float(code.params.dc2_max, gl.tol) << ", simplex bound " << pred.dc2 << ", gap "
               << sr.relative_gap << '\n'
               << "  equidistant " << (sr.equidistant ? "yes" : "no") << ", angle sets " << census.size();
      if (!census.empty()) out.os() << " " << angle_string(census.front().first.sin2, gl.tol);
      out.os() << '\n';
      for (const auto& f : fonda)
        out.os() << "  double sum " << f["double_sum"].get<double>() << " vs direct " << f["direct"].get<double>()
                 << '\n';
      if (h.order() > 5000) out.os() << "  double sum check skipped (|H| > 5000)\n";
      out.os() << "  " << (cert ? "certified" : "NOT certified") << '\n';
    }
  }
  if (gl.json)
    out.os() << json{{"seed", gl.seed}, {"tolerance", gl.tol}, {"codes", reports}, {"certified", ok}}.dump(2) << '\n';
  out.flush();
  return ok ? 0 : 1;
}

int cmd_clifford(const Global& gl, unsigned i, unsigned r) {
  if (i < 1 || i > 5) throw InvalidArgument("i must lie in 1..5");
  if (r < 1 || r > i) throw InvalidArgument("r must lie in 1..i");
  auto code = build_clifford_orthoplex(i, r);
  const auto& p = code.params;
  std::map<std::string, std::size_t> multiset;
  for (std::size_t a = 0; a < code.elements.size(); ++a)
    for (std::size_t b = a + 1; b < code.elements.size(); ++b)
      ++multiset[frac_or_float(chordal_sq_trace(code.elements[a], code.elements[b]), gl.tol)];
  auto subgroups = clifford_subgroups(i, r).size();
  auto ob = orthoplex_bound(p.n, p.m, p.N);
  Output out(gl);
  json j{{"i", i},
         {"r", r},
         {"n", p.n},
         {"m", p.m},
         {"N", p.N},
         {"subgroups", subgroups},
         {"distances", multiset},
         {"orthoplex_bound", ob.value.to_string()},
         {"orthoplex_applicable", ob.flag},
         {"orthoplex_attained", p.meets_orthoplex},
         {"optimality_claim", r == 1}};
  if (gl.json) out.os() << j.dump(2) << '\n';
  else {
    out.os() << "Clifford code i=" << i << " r=" << r << ": N = " << p.N << " (" << subgroups << " subgroups), n = " << p.n
             << ", m = " << p.m << '\n';
    for (const auto& [d, c] : multiset) out.os() << "  dc2 " << d << " x " << c << '\n';
    out.os() << "  orthoplex bound " << ob.value << ", applicable (N > n(n+1)/2 = " << p.n * (p.n + 1) / 2
             << "): " << (ob.flag ? "yes" : "no") << ", attained: " << (p.meets_orthoplex ? "yes" : "no") << '\n';
    if (r != 1) out.os() << "  no optimality claim for r > 1\n";
  }
  out.flush();
  return 0;
}

int cmd_predict(const Global& gl, long long n, long long m, long long N, long long t) {
  if (n < 2 || m < 1 || m >= n || N < 2 || t < 1) throw InvalidArgument("need n >= 2, 1 <= m < n, N >= 2, t >= 1");
  auto p = predict_params(n, m, N);
  auto ob = orthoplex_bound(n, m, N);
  Output out(gl);
  json j{{"n", n}, {"m", m}, {"N", N}, {"simplex", p.dc2.to_string()}, {"equality_possible", p.equality_possible},
         {"orthoplex", ob.value.to_string()}, {"orthoplex_applicable", ob.flag}};
  if (t > 1) j["union"] = {{"t", t}, {"N", t * N}, {"dc2", union_formula(n, m, t * N).to_string()}};
  if (gl.json) out.os() << j.dump(2) << '\n';
  else {
    out.os() << "[n,m,N] = [" << n << "," << m << "," << N << "]: simplex dc2 = " << p.dc2 << " ~ " << p.dc2.to_double()
             << (p.equality_possible ? "" : " (equality impossible: N > n(n+1)/2)") << '\n'
             << "orthoplex bound " << ob.value << (ob.flag ? " (applicable)" : " (not applicable)") << '\n';
    if (t > 1) out.os() << "union of " << t << " orbits, N = " << t * N << ": dc2 = " << union_formula(n, m, t * N) << '\n';
  }
  out.flush();
  return 0;
}

int cmd_selftest(const Global& gl) {
  Output out(gl);
  bool all = true;
  auto line = [&](const std::string& name, bool ok) {
    out.os() << (ok ? "PASS " : "FAIL ") << name << '\n';
    all = all && ok;
  };
  {
    auto src = symmetric_source(4, gl.seed);
    CatalogOptions o;
    o.seed = gl.seed;
    auto e = sweep(src, o);
    bool ok = !e.empty();
    for (const auto& x : e) ok = ok && x.status == CellStatus::verified && x.measured && *x.measured == Rational(8, 9);
    line("S4 tetrahedral code dc2 = 8/9", ok);
  }
  line("dim [6,4,2] = 2673", hook_dimension(Partition({6, 4, 2})) == 2673);
  line("predict (2673,990,12) = 680", predict_params(2673, 990, 12).dc2 == Rational(680));
  {
    auto t = compute_table(make_symmetric(5), gl.seed);
    line("S5 table orthogonality <= 1e-9", t.orthogonality_residual() <= 1e-9);
  }
  {
    auto c = build_clifford_orthoplex(2, 1);
    line("Clifford i=2 attains the orthoplex bound", c.params.N == 18 && c.params.meets_orthoplex);
  }
  out.os() << (all ? "all passed" : "failures") << '\n';
  out.flush();
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmannian packings from 2-transitive group actions"};
  app.require_subcommand(1);
  Global gl;
  app.add_option("--seed", gl.seed, "random seed")->capture_default_str();
  app.add_option("--tol", gl.tol, "relative tolerance for certification")->capture_default_str();
  app.add_option("--cap", gl.cap, "largest group order to enumerate")->capture_default_str();
  app.add_flag("--json", gl.json, "JSON output");
  app.add_flag("--csv", gl.csv, "CSV output");
  app.add_option("--out", gl.out, "write output to this file");

  std::string range = "4-8", chars = "auto-all";
  bool predict_only = false;
  auto* sn = app.add_subcommand("table-sn", "symmetric and alternating group table");
  sn->add_option("--N", range, "N or a range such as 4-8")->capture_default_str();
  sn->add_option("--chars", chars, "auto-min, auto-all or index list")->capture_default_str();
  sn->add_flag("--predict-only", predict_only, "hook/branching prediction only");

  std::vector<std::size_t> qs{5, 7, 9, 11, 13};
  auto* pgl = app.add_subcommand("table-pgl", "PGL2(q) and PSL2(q) columns and angle sets");
  pgl->add_option("--q", qs, "odd prime powers")->delimiter(',');
  pgl->add_option("--chars", chars, "auto-min, auto-all or index list");

  std::string partition;
  bool diagram = false;
  auto* hook = app.add_subcommand("hook", "dimension of an S_N irreducible by the hook length formula");
  hook->add_option("partition", partition, "e.g. [6,4,2]")->required();
  hook->add_flag("--diagram", diagram, "print the hook length of every box");
  auto* branch = app.add_subcommand("branch", "restriction of an S_N irreducible to S_{N-1}");
  branch->add_option("partition", partition, "e.g. [6,4,2]")->required();

  std::string group, hspec = "stab1", repspec, vchars = "auto-min";
  bool derived = false;
  std::size_t samples = 3;
  auto* verify = app.add_subcommand("verify", "build an isotypic orbit code and certify it");
  verify->add_option("--group", group, "S<n>, A<n>, PGL2:<q>, PSL2:<q> or a generator file")->required();
  verify->add_flag("--derived", derived, "use the derived subgroup of the group");
  verify->add_option("--H", hspec, "stab<k> or borel")->capture_default_str();
  verify->add_option("--rep", repspec, "young:<partition>, perm, perm^k, irrep:<i> or deg:<d>")->required();
  verify->add_option("--chars", vchars, "auto-min, auto-all or index list")->capture_default_str();
  verify->add_option("--samples", samples, "double-sum checks per code")->capture_default_str();

  unsigned ci = 2, cr = 1;
  auto* cliff = app.add_subcommand("clifford", "orthoplex codes from the extraspecial 2-group");
  cliff->add_option("--i", ci, "number of qubits, 1..5")->capture_default_str();
  cliff->add_option("--r", cr, "number of commuting generators")->capture_default_str();

  long long pn = 0, pm = 0, pN = 0, pt = 1;
  auto* pred = app.add_subcommand("predict", "simplex, orthoplex and union values for [n,m,N]");
  pred->add_option("--n", pn)->required();
  pred->add_option("--m", pm)->required();
  pred->add_option("--N", pN)->required();
  pred->add_option("--union", pt, "number of orbits joined")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "quick consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*sn) return cmd_table_sn(gl, range, chars, predict_only);
    if (*pgl) return cmd_table_pgl(gl, qs, chars);
    if (*hook) return cmd_hook(gl, partition, diagram);
    if (*branch) return cmd_hook(gl, partition, false);
    if (*verify) return cmd_verify(gl, group, derived, hspec, repspec, vchars, samples);
    if (*cliff) return cmd_clifford(gl, ci, cr);
    if (*pred) return cmd_predict(gl, pn, pm, pN, pt);
    if (*self) return cmd_selftest(gl);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
