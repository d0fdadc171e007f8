#include "cmono/report.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "cmono/analysis.hpp"
#include "cmono/errors.hpp"
#include "cmono/sheeted.hpp"
#include "cmono/torsion.hpp"

namespace cmono {

namespace {

nlohmann::ordered_json matrix_json(const RationalMatrix& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size; ++j) row.push_back(format_rational(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string first_difference(const RationalMatrix& a, const RationalMatrix& b) {
  for (std::size_t i = 0; i < a.size; ++i)
    for (std::size_t j = 0; j < a.size; ++j)
      if (a.at(i, j) != b.at(i, j))
        return "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
               format_rational(a.at(i, j)) + " vs " + format_rational(b.at(i, j));
  return "";
}

class ReportBuilder {
 public:
  ReportBuilder(const Analysis& a, const ReportOptions& options) : a_(a), opt_(options) {}

  AnalysisReport build() {
    emit_config();
    emit_clusters();
    emit_index_tree();
    emit_plan();
    bool ok = emit_gram();
    ok = emit_monodromy() && ok;
    ok = emit_torsion() && ok;
    ok = emit_invariants() && ok;
    report_.json["verdict"] = ok ? "pass" : "fail";
    report_.exit_code = ok ? 0 : static_cast<int>(ErrorCode::Verdict);
    report_.json["exit_code"] = report_.exit_code;
    return std::move(report_);
  }

 private:
  // Runs a verdict stage; a Verdict-class failure is recorded instead of
  // propagating so the report still documents everything else.
  template <typename F>
  bool stage(const std::string& name, F&& f) {
    try {
      f();
      return true;
    } catch (const AnalysisError& e) {
      if (e.code() != ErrorCode::Verdict) throw;
      failures_.push_back(name + ": " + e.what());
      return false;
    }
  }

  void emit_config() {
    const BranchConfig& cfg = a_.config();
    nlohmann::ordered_json c;
    c["p"] = cfg.p;
    c["h"] = cfg.h;
    c["genus"] = cfg.genus();
    c["vp"] = format_rational(cfg.vp);
    c["tube_radius"] = format_rational(cfg.tube_radius());
    c["mode"] = a_.doc().mode == InputDocument::Mode::Laurent ? "laurent" : "matrix";
    c["exponents"] = cfg.exponents;
    report_.json["schema"] = "cmono-report-v1";
    report_.json["config"] = c;
    if (a_.doc().mode == InputDocument::Mode::Laurent) {
      nlohmann::ordered_json pts = nlohmann::ordered_json::array();
      for (const auto& r : a_.doc().roots) pts.push_back(format_laurent(r));
      report_.json["points"] = pts;
    }
  }

  void emit_clusters() {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (int id : a_.tree().non_singletons()) {
      const ClusterNode& node = a_.tree().node(id);
      nlohmann::ordered_json c;
      c["id"] = id;
      c["members"] = node.members;
      c["depth"] = node.depth.str();
      c["parent"] = node.parent;
      if (node.parent != -1) c["relative_depth"] = format_rational(a_.tree().relative_depth(id));
      c["even_partitionable"] = node.even_partitionable;
      c["ubereven"] = node.ubereven;
      list.push_back(c);
    }
    report_.json["clusters"] = list;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (long long i = 1; i <= a_.config().h; ++i) pairs.push_back(a_.frak().pair_cluster[i]);
    report_.json["pair_clusters"] = pairs;
  }

  void emit_index_tree() {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (long long i = 1; i <= a_.config().h; ++i)
      edges.push_back({a_.skeleton().index_parent(i), i});
    report_.json["index_tree"] = edges;
    nlohmann::ordered_json pts = nlohmann::ordered_json::array();
    for (long long i = 1; i <= a_.config().h; ++i) {
      nlohmann::ordered_json d;
      d["i"] = i;
      d["vbar"] = a_.skeleton().points(i).vbar.str();
      d["vhat"] = a_.skeleton().points(i).vhat.str();
      d["tilde_up"] = a_.skeleton().points(i).tilde_up.str();
      d["chain"] = a_.skeleton().ubereven_chain(i);
      pts.push_back(d);
    }
    report_.json["distinguished_points"] = pts;
  }

  void emit_plan() {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const TransvectionDatum& d : a_.engine().plan()) {
      nlohmann::ordered_json row;
      row["cluster"] = d.cluster;
      row["members"] = a_.tree().node(d.cluster).members;
      row["s_prime"] = d.s_prime;
      row["m"] = format_rational(d.m);
      row["support"] = d.support;
      row["ubereven"] = a_.tree().node(d.cluster).ubereven;
      list.push_back(row);
    }
    report_.json["plan"] = list;
  }

  bool emit_gram() {
    const GammaBasis& basis = a_.engine().gamma_basis();
    nlohmann::ordered_json g;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (long long k = 0; k < basis.size(); ++k) {
      auto [i, n] = basis.label(k);
      labels.push_back("gamma(" + std::to_string(i) + "," +
                       std::to_string(a_.skeleton().index_parent(i)) + "," + std::to_string(n) +
                       ")");
    }
    g["basis"] = labels;

    RationalMatrix formula = a_.engine().gram_matrix(GramMode::Formula);
    RationalMatrix trans = a_.engine().gram_matrix(GramMode::Transvections);
    g["formula"] = matrix_json(formula);
    g["transvections"] = matrix_json(trans);
    bool ok = stage("gram formula vs transvections", [&] {
      if (!(formula == trans))
        fail(ErrorCode::Verdict,
             "formula and transvection Gram matrices differ at " + first_difference(formula, trans));
    });
    if (opt_.run_oracle) {
      SheetedForest forest(a_.skeleton());
      RationalMatrix oracle = forest.gram_matrix(basis);
      g["oracle"] = matrix_json(oracle);
      ok = stage("gram oracle vs formula", [&] {
             if (!(oracle == formula))
               fail(ErrorCode::Verdict, "path-intersection oracle disagrees with the formula at " +
                                            first_difference(oracle, formula));
           }) &&
           ok;
    } else {
      g["oracle"] = nullptr;
    }
    g["agreement"] = ok;
    report_.json["gram"] = g;
    gram_ = formula;
    return ok;
  }

  bool emit_monodromy() {
    nlohmann::ordered_json m;
    InertiaEngine::MonodromyResult res;
    bool ok = stage("monodromy factored vs block",
                    [&] { res = a_.engine().monodromy_matrix(); });
    if (ok) {
      m["size"] = res.block.size;
      m["block"] = matrix_json(res.block);
      // Factored form: one factor t_{zeta^n w_s}^{m_s} per cluster and
      // residue n = 0..p-1, taken in plan order.
      nlohmann::ordered_json factored = nlohmann::ordered_json::array();
      for (const TransvectionDatum& d : a_.engine().plan())
        for (long long n = 0; n <= a_.config().p - 1; ++n) {
          nlohmann::ordered_json f;
          f["cluster"] = d.cluster;
          f["support"] = d.support;
          f["zeta_power"] = n;
          f["exponent"] = format_rational(d.m);
          factored.push_back(f);
        }
      m["factored"] = factored;
      m["factored_route_checked"] = res.factored_route_checked;
      if (opt_.ell) {
        const long long ell = *opt_.ell;
        const long long power = opt_.power.value_or(1);
        if (ell < 2 || power < 1) fail(ErrorCode::Parse, "bad reduction modulus");
        BigInt modulus = 1;
        for (long long k = 0; k < power; ++k) modulus *= ell;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        bool integral = true;
        for (std::size_t r = 0; r < res.block.size && integral; ++r) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (std::size_t c = 0; c < res.block.size; ++c) {
            const Rational& q = res.block.at(r, c);
            if (!is_integer(q)) {
              integral = false;
              break;
            }
            BigInt v = rat_num(q) % modulus;
            if (v < 0) v += modulus;
            row.push_back(v.str());
          }
          if (integral) rows.push_back(row);
        }
        nlohmann::ordered_json red;
        red["ell"] = ell;
        red["power"] = power;
        red["matrix"] = integral ? rows : nlohmann::ordered_json();
        if (!integral) red["note"] = "entries are not integral; no reduction displayed";
        m["reduction"] = red;
      }
    }
    report_.json["monodromy"] = m;
    return ok;
  }

  bool emit_torsion() {
    const BranchConfig& cfg = a_.config();
    TorsionCalculator torsion(a_.tree(), a_.frak(), a_.skeleton());
    nlohmann::ordered_json t;
    nlohmann::ordered_json sigmas = nlohmann::ordered_json::array();
    FpCharacter total(torsion.basis());
    for (long long i = 0; i <= cfg.h; ++i) {
      FpCharacter s = torsion.sigma_char(i);
      total += s;
      sigmas.push_back(s.coords());
    }
    t["sigma"] = sigmas;
    bool ok = stage("sigma characters sum to zero", [&] {
      if (!total.is_zero())
        fail(ErrorCode::Verdict, "sum of sigma_i over all indices is not the zero character");
    });

    nlohmann::ordered_json subtrees = nlohmann::ordered_json::array();
    nlohmann::ordered_json reductions = nlohmann::ordered_json::array();
    for (long long i = 1; i <= cfg.h; ++i) {
      const long long idx = i;
      ok = stage("index subtree " + std::to_string(i),
                 [&] { subtrees.push_back(torsion.subtree_indices(idx)); }) &&
           ok;
      ok = stage("weighted reduction " + std::to_string(i),
                 [&] { reductions.push_back(torsion.weighted_reduction(idx).coords()); }) &&
           ok;
    }
    t["subtree_indices"] = subtrees;
    t["weighted_reduction"] = reductions;
    t["identities_ok"] = ok;
    report_.json["torsion"] = t;
    return ok;
  }

  bool emit_invariants() {
    const BranchConfig& cfg = a_.config();
    const GammaBasis& basis = a_.engine().gamma_basis();
    nlohmann::ordered_json inv;
    bool ok = true;

    bool zeta_ok = stage("zeta shift order", [&] {
      for (long long i = 1; i <= cfg.h; ++i) {
        Character chi = character_v(basis, i);
        if (!(chi.zeta_shift(cfg.p) == chi))
          fail(ErrorCode::Verdict, "zeta shift does not have order p on v_" + std::to_string(i));
        for (long long n = 1; n < cfg.p; ++n)
          if (chi.zeta_shift(n) == chi)
            fail(ErrorCode::Verdict, "zeta shift order divides " + std::to_string(n));
      }
    });
    inv["zeta_shift_order_p"] = zeta_ok;
    ok = zeta_ok && ok;

    bool norm_ok = stage("norm relations", [&] {
      for (long long i = 1; i <= cfg.h; ++i) {
        Character sum(basis);
        for (long long n = 0; n <= cfg.p - 1; ++n) sum += character_zeta_v(basis, i, n);
        if (!sum.is_zero())
          fail(ErrorCode::Verdict, "orbit sum of v_" + std::to_string(i) + " does not vanish");
      }
    });
    inv["norm_relations"] = norm_ok;
    ok = norm_ok && ok;

    bool commute_ok = stage("factor commutation", [&] {
      std::vector<RationalMatrix> factors;
      for (const TransvectionDatum& d : a_.engine().plan())
        for (long long n = 0; n <= cfg.p - 1; ++n)
          factors.push_back(a_.engine().factor_matrix(d, n));
      for (std::size_t x = 0; x < factors.size(); ++x)
        for (std::size_t y = x + 1; y < factors.size(); ++y)
          if (!(factors[x].multiply(factors[y]) == factors[y].multiply(factors[x])))
            fail(ErrorCode::Verdict, "transvection factors do not commute");
    });
    inv["factors_commute"] = commute_ok;
    ok = commute_ok && ok;

    bool polarization_ok = stage("polarization", [&] {
      if (!gram_.is_symmetric()) fail(ErrorCode::Verdict, "Gram matrix is not symmetric");
      for (std::size_t k = 0; k < gram_.size; ++k)
        if (!(gram_.at(k, k) > 0)) fail(ErrorCode::Verdict, "Gram diagonal not strictly positive");
      for (const Rational& minor : gram_.leading_principal_minors())
        if (!(minor > 0)) fail(ErrorCode::Verdict, "non-positive leading principal minor");
    });
    inv["polarization"] = polarization_ok;
    ok = polarization_ok && ok;

    bool chain_ok = stage("bridge chain sums", [&] {
      std::map<int, Rational> m_of;
      for (const TransvectionDatum& d : a_.engine().plan()) m_of[d.cluster] = d.m;
      for (long long i = 1; i <= cfg.h; ++i) {
        const auto& chain = a_.skeleton().ubereven_chain(i);
        Rational total = 0;
        for (int id : chain) {
          auto it = m_of.find(id);
          if (it == m_of.end())
            fail(ErrorCode::Verdict, "chain cluster without a transvection exponent");
          total += it->second;
        }
        if (total != a_.skeleton().bridge_length(i))
          fail(ErrorCode::Verdict, "bridge length of index " + std::to_string(i) +
                                       " is not the sum of its chain exponents");
        Rational suffix = total;
        for (std::size_t s = 1; s < chain.size(); ++s) {
          suffix -= m_of[chain[s - 1]];
          const SkeletonPoint w = a_.geometry().point_of_cluster(a_.tree(), chain[s]);
          if (a_.geometry().delta(w, a_.skeleton().points(i).tilde_up) != suffix)
            fail(ErrorCode::Verdict, "partial chain sum mismatch at index " + std::to_string(i));
        }
      }
    });
    inv["chain_sums"] = chain_ok;
    ok = chain_ok && ok;

    bool rooted_ok = stage("index tree rooted", [&] {
      for (long long i = 1; i <= cfg.h; ++i) {
        long long steps = 0;
        for (long long j = i; j != 0; j = a_.skeleton().index_parent(j))
          if (++steps > cfg.h) fail(ErrorCode::Verdict, "index tree has a cycle");
      }
    });
    inv["index_tree_rooted"] = rooted_ok;
    ok = rooted_ok && ok;

    bool tube_ok = stage("tube maximality", [&] {
      for (long long i = 1; i <= cfg.h; ++i) {
        const auto& pts = a_.skeleton().points(i);
        SkeletonPoint mid = pts.vbar;
        mid.radius = (pts.vbar.radius + pts.vhat.radius) / 2;
        for (const SkeletonPoint& x : {pts.vbar, mid}) {
          PointOrder ord = a_.geometry().compare(pts.vhat, x);
          if (ord != PointOrder::Greater && ord != PointOrder::Equal)
            fail(ErrorCode::Verdict, "vhat is not maximal in its tube");
        }
      }
    });
    inv["tube_maximality"] = tube_ok;
    ok = tube_ok && ok;

    if (cfg.vp == 0) {
      bool spec_ok = stage("vp=0 specialization", [&] {
        for (const TransvectionDatum& d : a_.engine().plan()) {
          if (d.s_prime != a_.tree().node(d.cluster).parent)
            fail(ErrorCode::Verdict, "with vp=0, s' must be the parent cluster");
          if (d.m != a_.tree().relative_depth(d.cluster))
            fail(ErrorCode::Verdict, "with vp=0, m must be the relative depth");
        }
      });
      inv["vp_zero_specialization"] = spec_ok;
      ok = spec_ok && ok;
    } else {
      inv["vp_zero_specialization"] = nullptr;
    }

    if (!failures_.empty()) inv["failures"] = failures_;
    report_.json["invariants"] = inv;
    return ok;
  }

  const Analysis& a_;
  const ReportOptions& opt_;
  AnalysisReport report_;
  RationalMatrix gram_;
  std::vector<std::string> failures_;
};

}  // namespace

AnalysisReport run_report(const InputDocument& doc, const ReportOptions& options) {
  Analysis analysis(doc);
  ReportBuilder builder(analysis, options);
  return builder.build();
}

std::string AnalysisReport::to_text() const {
  std::ostringstream os;
  const auto& j = json;
  os << "p = " << j["config"]["p"] << ", h = " << j["config"]["h"]
     << ", genus = " << j["config"]["genus"] << ", vp = " << j["config"]["vp"].get<std::string>()
     << ", mode = " << j["config"]["mode"].get<std::string>() << "\n";
  if (j.contains("points"))
    for (std::size_t i = 0; i < j["points"].size(); ++i)
      os << "  point " << i << " (" << point_label(static_cast<long long>(i))
         << ") = " << j["points"][i].get<std::string>() << "\n";
  os << "clusters:\n";
  for (const auto& c : j["clusters"]) {
    os << "  #" << c["id"] << " members=[";
    for (std::size_t k = 0; k < c["members"].size(); ++k)
      os << (k ? "," : "") << c["members"][k];
    os << "] depth=" << c["depth"].get<std::string>();
    if (c["ubereven"].get<bool>()) os << " ubereven";
    os << "\n";
  }
  os << "index tree edges (parent -> child):";
  for (const auto& e : j["index_tree"]) os << "  " << e[0] << "->" << e[1];
  os << "\n";
  os << "transvection plan:\n";
  for (const auto& d : j["plan"]) {
    os << "  cluster #" << d["cluster"] << " m=" << d["m"].get<std::string>() << " support=[";
    for (std::size_t k = 0; k < d["support"].size(); ++k) os << (k ? "," : "") << d["support"][k];
    os << "] s'=#" << d["s_prime"] << "\n";
  }
  auto render = [&os](const char* name, const nlohmann::ordered_json& m) {
    os << name << ":\n";
    for (const auto& row : m) {
      os << "  [";
      for (std::size_t k = 0; k < row.size(); ++k)
        os << (k ? ", " : "") << row[k].get<std::string>();
      os << "]\n";
    }
  };
  render("gram (formula)", j["gram"]["formula"]);
  render("gram (transvections)", j["gram"]["transvections"]);
  if (!j["gram"]["oracle"].is_null()) render("gram (oracle)", j["gram"]["oracle"]);
  if (j["monodromy"].contains("block")) render("monodromy block", j["monodromy"]["block"]);
  os << "verdict: " << j["verdict"].get<std::string>() << "\n";
  return os.str();
}

std::string AnalysisReport::to_dot() const {
  std::ostringstream os;
  const auto& j = json;
  os << "digraph clusters {\n  node [shape=box];\n";
  for (const auto& c : j["clusters"]) {
    os << "  c" << c["id"] << " [label=\"{";
    for (std::size_t k = 0; k < c["members"].size(); ++k)
      os << (k ? "," : "") << c["members"][k];
    os << "} d=" << c["depth"].get<std::string>();
    if (c["ubereven"].get<bool>()) os << " ue";
    os << "\"];\n";
  }
  for (const auto& c : j["clusters"])
    if (c["parent"].get<int>() != -1)
      os << "  c" << c["parent"] << " -> c" << c["id"] << ";\n";
  os << "}\n\n";
  os << "digraph index_tree {\n";
  for (const auto& e : j["index_tree"]) os << "  i" << e[0] << " -> i" << e[1] << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cmono
