#include "equiloc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "equiloc/error.hpp"
#include "equiloc/hyperbolicity.hpp"
#include "equiloc/jet.hpp"
#include "equiloc/localization.hpp"
#include "equiloc/parse.hpp"
#include "equiloc/residue.hpp"
#include "equiloc/thom.hpp"

namespace equiloc::cli {

namespace {

using json = nlohmann::ordered_json;

struct Global {
  std::uint64_t seed = 1;
  std::string format = "text";
  int cap = ResidueOptions{}.cap;

  bool as_json() const { return format == "json"; }
  ResidueOptions residue() const {
    ResidueOptions o;
    o.cap = cap;
    return o;
  }
};

// Failure to read or decode an input file; reported like a parse error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational rational_of(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(ErrorKind::parse, "expected an integer or a rational string, got " + j.dump());
}

std::string str_of(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string())
    throw Error(ErrorKind::parse, std::string("missing string field '") + field + "'");
  return j[field].get<std::string>();
}

QTable load_q(const std::string& path) {
  QTable q = QTable::builtin();
  if (path.empty()) return q;
  const json j = read_json(path);
  if (!j.is_object()) throw Error(ErrorKind::parse, "Q file must map k to a polynomial string");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw Error(ErrorKind::parse, "Q entry for k=" + key + " must be a string");
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad key '" + key + "' in Q file");
    }
    q.add(k, parse_polynomial(value.get<std::string>()));
  }
  return q;
}

json terms_json(const Polynomial& p) {
  json a = json::array();
  for (const auto& t : p.terms())
    a.push_back({{"monomial", t.mono.is_one() ? std::string("1") : t.mono.to_string()},
                 {"coefficient", to_string(t.coef)}});
  return a;
}

JetCurve load_jet(const std::string& path, int n, int k) {
  const json j = read_json(path);
  const bool deriv = j.contains("derivatives");
  const json& rows = deriv ? j["derivatives"] : j.contains("v") ? j["v"] : j;
  if (!rows.is_array()) throw Error(ErrorKind::parse, "jet must be an array of rows or {\"v\": rows}");
  Matrix<Rational> m;
  for (const auto& row : rows) {
    if (!row.is_array()) throw Error(ErrorKind::parse, "jet rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_of(x));
    m.push_back(std::move(r));
  }
  if (int(m.size()) != k) throw Error(ErrorKind::invalid_argument, "jet has " + std::to_string(m.size()) + " rows, expected k=" + std::to_string(k));
  for (const auto& r : m)
    if (int(r.size()) != n) throw Error(ErrorKind::invalid_argument, "jet rows must have n=" + std::to_string(n) + " entries");
  if (deriv) return JetCurve::from_derivatives(m);
  JetCurve g;
  g.n = n;
  g.v = std::move(m);
  return g;
}

template <class T>
json matrix_json(const Matrix<T>& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) {
      if constexpr (std::is_same_v<T, Rational>)
        r.push_back(to_string(x));
      else
        r.push_back(x.to_string());
    }
    a.push_back(std::move(r));
  }
  return a;
}

template <class T>
void print_matrix(std::ostream& out, const Matrix<T>& m) {
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ", ";
      if constexpr (std::is_same_v<T, Rational>)
        out << to_string(row[c]);
      else
        out << row[c].to_string();
    }
    out << '\n';
  }
}

void emit(std::ostream& out, const Global& g, const json& j, const std::string& text) {
  if (g.as_json())
    out << j.dump(2) << '\n';
  else
    out << text << '\n';
}

void report(std::ostream& err, std::string_view kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"equiloc: exact equivariant localization and iterated residues", "equiloc"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--cap", g.cap, "largest series order per residue variable")->capture_default_str();

  std::function<void()> action;

  auto* res = app.add_subcommand("residue", "iterated residue of a JSON job");
  std::string job;
  res->add_option("--job", job, "job file")->required();
  res->callback([&] {
    action = [&] {
      const json j = read_json(job);
      ResidueForm form;
      form.numerator = LaurentSeries(parse_polynomial(str_of(j, "numerator")));
      if (!j.contains("denominators") || !j["denominators"].is_array())
        throw Error(ErrorKind::parse, "missing array field 'denominators'");
      for (const auto& d : j["denominators"]) {
        if (!d.is_string()) throw Error(ErrorKind::parse, "denominators must be strings");
        form.denominators.push_back(AffineForm::from_polynomial(parse_polynomial(d.get<std::string>())));
      }
      if (!j.contains("order") || !j["order"].is_array()) throw Error(ErrorKind::parse, "missing array field 'order'");
      for (const auto& v : j["order"]) {
        Var var;
        if (!v.is_string() || !parse_var(v.get<std::string>(), var) || !var.is_residue())
          throw Error(ErrorKind::parse, "order entries must be residue variables z<i>");
        form.ordering.push_back(var);
      }
      const auto r = iterated_residue(form, g.residue());
      emit(out, g, {{"residue", r.to_string()}}, r.to_string());
    };
  });

  auto* grass = app.add_subcommand("grass-integrate", "integral over Gr(k, n) by localization");
  int gn = 0, gk = 0;
  std::string cls;
  bool symbolic = false;
  grass->add_option("--n", gn)->required();
  grass->add_option("--k", gk)->required();
  grass->add_option("--class", cls, "polynomial in Chern roots e_i or Chern classes c_i")->required();
  grass->add_flag("--symbolic", symbolic, "keep weights symbolic");
  grass->callback([&] {
    action = [&] {
      const Polynomial p = parse_polynomial(cls);
      const std::string v = symbolic ? grass_integrate_symbolic(gn, gk, p).to_string()
                                     : to_string(grass_integrate(gn, gk, p, g.seed));
      emit(out, g, {{"n", gn}, {"k", gk}, {"class", p.to_string()}, {"value", v}}, v);
    };
  });

  auto* flag = app.add_subcommand("flag-check", "fixed-point sum against residue on random flags");
  int fn = 4, fd = 2, trials = 20;
  flag->add_option("--n", fn, "largest ambient dimension")->capture_default_str();
  flag->add_option("--d", fd, "largest flag length")->capture_default_str();
  flag->add_option("--trials", trials)->capture_default_str();
  flag->add_option("--seed", g.seed);
  flag->callback([&] {
    action = [&] {
      const auto rep = flag_check(fn, fd, trials, g.seed);
      json a = json::array();
      std::string text;
      for (const auto& t : rep.trials) {
        const std::string v = t.fixed_sums.empty() ? "" : to_string(t.fixed_sums[0]);
        a.push_back({{"n", t.n}, {"d", t.d}, {"q", t.q.to_string()}, {"value", v}, {"agree", t.agree}});
        text += "n=" + std::to_string(t.n) + " d=" + std::to_string(t.d) + " q=" + t.q.to_string() + " -> " + v +
                (t.agree ? "" : " MISMATCH") + "\n";
      }
      text += rep.all_agree() ? "all agree" : "disagreement";
      emit(out, g, {{"trials", a}, {"all_agree", rep.all_agree()}}, text);
    };
  });

  auto* thom = app.add_subcommand("thom", "Thom polynomial of A_k in relative codimension l");
  int tk = 1, tl = 0;
  std::string qfile;
  thom->add_option("--k", tk)->required();
  thom->add_option("--codim", tl)->required();
  thom->add_option("--q-file", qfile, "JSON object mapping k to Q_k");
  thom->callback([&] {
    action = [&] {
      const auto r = thom_polynomial(tk, tl, load_q(qfile), {g.residue(), true});
      emit(out, g,
           {{"k", tk}, {"codim", tl}, {"polynomial", r.polynomial.to_string()}, {"terms", terms_json(r.polynomial)}},
           r.polynomial.to_string());
    };
  });

  auto* scan = app.add_subcommand("thom-scan", "Thom polynomials for a range of k and l");
  int kmax = 3, lmax = 1;
  bool check_pos = false;
  scan->add_option("--kmax", kmax)->capture_default_str();
  scan->add_option("--lmax", lmax)->capture_default_str();
  scan->add_flag("--check-positivity", check_pos);
  scan->add_option("--q-file", qfile);
  scan->callback([&] {
    action = [&] {
      const QTable q = load_q(qfile);
      json a = json::array();
      std::string text;
      bool all_ok = true;
      for (int k = 1; k <= kmax; ++k)
        for (int l = 0; l <= lmax; ++l) {
          const auto r = thom_polynomial(k, l, q, {g.residue(), true});
          json e = {{"k", k}, {"codim", l}, {"polynomial", r.polynomial.to_string()}};
          text += "k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + r.polynomial.to_string();
          if (check_pos) {
            const bool ok = positivity_check(r).ok();
            all_ok = all_ok && ok;
            e["positive"] = ok;
            text += ok ? "  [positive]" : "  [NOT positive]";
          }
          text += "\n";
          a.push_back(std::move(e));
        }
      json j = {{"results", a}};
      if (check_pos) j["all_positive"] = all_ok;
      if (!text.empty()) text.pop_back();
      emit(out, g, j, text);
    };
  });

  auto* gg = app.add_subcommand("gg", "intersection polynomial for jet differentials of order n");
  int nn = 1;
  std::string delta, dval;
  gg->add_option("--n", nn)->required();
  gg->add_option("--delta", delta, "substitute a rational delta");
  gg->add_option("--d", dval, "substitute a degree d");
  gg->add_option("--q-file", qfile);
  gg->callback([&] {
    action = [&] {
      const auto r = gg_polynomial(nn, load_q(qfile), g.residue());
      std::map<Var, Rational> at;
      if (!delta.empty()) at[Var::delta()] = parse_rational(delta);
      if (!dval.empty()) at[Var::d()] = parse_rational(dval);
      const Polynomial p = evaluate(r.p, at);
      json j = {{"n", nn}, {"p", p.to_string()}, {"intersection", evaluate(r.intersection, at).to_string()},
                {"theta", to_string(r.theta)}, {"leading", evaluate(r.leading, at).to_string()}};
      if (!delta.empty() && dval.empty()) {
        const auto th = positivity_threshold(r, parse_rational(delta));
        j["d0"] = th.d0.get_str();
      }
      emit(out, g, j, p.to_string());
    };
  });

  auto* th = app.add_subcommand("theta", "constant Theta(n)");
  th->add_option("--n", nn)->required();
  th->add_option("--q-file", qfile);
  th->callback([&] {
    action = [&] {
      const std::string v = to_string(theta(nn, load_q(qfile), g.residue()));
      emit(out, g, {{"n", nn}, {"theta", v}}, v);
    };
  });

  auto* eu = app.add_subcommand("euler", "Euler characteristic of the jet differential bundle");
  eu->add_option("--n", nn)->required();
  eu->add_option("--d", dval, "degree of the hypersurface; symbolic if omitted");
  eu->add_option("--q-file", qfile);
  eu->callback([&] {
    action = [&] {
      std::optional<Rational> d;
      if (!dval.empty()) d = parse_rational(dval);
      const auto r = euler_characteristic(nn, load_q(qfile), d, g.residue());
      json j = {{"n", nn}, {"chi", r.chi.to_string()}};
      if (d) j["d"] = to_string(*d);
      emit(out, g, j, r.chi.to_string());
    };
  });

  int jn = 2, jk = 2;
  std::string jet;
  auto* rh = app.add_subcommand("rho", "rho matrix of a k-jet in C^n");
  rh->add_option("--n", jn)->required();
  rh->add_option("--k", jk)->required();
  rh->add_option("--jet", jet, "JSON jet; symbolic if omitted");
  rh->callback([&] {
    action = [&] {
      json j;
      std::ostringstream text;
      if (jet.empty()) {
        const auto m = rho_symbolic(jn, jk);
        j = matrix_json(m);
        print_matrix(text, m);
      } else {
        const auto m = rho(load_jet(jet, jn, jk));
        j = matrix_json(m);
        print_matrix(text, m);
      }
      std::string s = text.str();
      if (!s.empty()) s.pop_back();
      emit(out, g, {{"n", jn}, {"k", jk}, {"matrix", j}}, s);
    };
  });

  auto* mi = app.add_subcommand("minors", "k x k minors of rho, column subsets in lex order");
  mi->add_option("--n", jn)->required();
  mi->add_option("--k", jk)->required();
  mi->add_option("--jet", jet)->required();
  mi->callback([&] {
    action = [&] {
      const auto m = invariant_minors(load_jet(jet, jn, jk));
      json a = json::array();
      std::string text;
      for (const auto& x : m) {
        a.push_back(to_string(x));
        text += to_string(x) + "\n";
      }
      if (!text.empty()) text.pop_back();
      emit(out, g, {{"n", jn}, {"k", jk}, {"minors", a}}, text);
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report(err, "parse", e.what());
    return 2;
  }
  try {
    action();
    return 0;
  } catch (const InputError& e) {
    report(err, "input", e.what());
    return 2;
  } catch (const Error& e) {
    report(err, error_kind_name(e.kind()), e.what());
    return e.kind() == ErrorKind::parse ? 2 : 1;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return 1;
  }
}

}  // namespace equiloc::cli
