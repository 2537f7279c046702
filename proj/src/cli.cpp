#include "butson/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "butson/catalog.hpp"
#include "butson/equivalence.hpp"
#include "butson/errors.hpp"
#include "butson/fingerprint.hpp"
#include "butson/polynomial.hpp"
#include "butson/report.hpp"
#include "butson/spectrum.hpp"
#include "butson/textio.hpp"
#include "json.hpp"

namespace butson {

namespace {

using json = nlohmann::ordered_json;

constexpr std::string_view kCatalogPrefix = "catalog:";

struct Source {
  std::string name;
  ParsedMatrix matrix;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `-` is stdin, `catalog:NAME` is a catalog entry, an existing file is read,
// and a bare catalog name is accepted when no such file exists.
Source load(const std::string& spec, std::istream& in) {
  if (spec == "-") return {"-", parse_matrix(in)};
  if (spec.starts_with(kCatalogPrefix)) {
    const std::string name = spec.substr(kCatalogPrefix.size());
    return {name, get(name)};
  }
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream file(spec);
    if (!file) throw UsageError("cannot open " + spec);
    return {spec, parse_matrix(file)};
  }
  if (has(spec)) return {spec, get(spec)};
  throw UsageError("'" + spec + "' is neither a readable file nor a catalog matrix");
}

const ButsonMatrix& require_butson(const Source& s, const char* command) {
  if (const auto* b = std::get_if<ButsonMatrix>(&s.matrix)) return *b;
  throw UsageError(std::string(command) + " needs an exponent (BH) matrix");
}

json grid_json(const ButsonMatrix& b) {
  json rows = json::array();
  for (const auto& row : b.grid()) rows.push_back(row);
  return rows;
}

json header(const Source& s) {
  json doc;
  doc["name"] = s.name;
  if (const auto* b = std::get_if<ButsonMatrix>(&s.matrix)) {
    doc["q"] = b->order();
    doc["n"] = b->size();
  } else {
    doc["q"] = nullptr;
    doc["n"] = std::get<ComplexMatrix>(s.matrix).size();
  }
  return doc;
}

json coefficients_json(const std::vector<CycInt>& coeffs) {
  json e = json::array();
  for (const auto& c : coeffs) e.push_back(std::vector<std::int64_t>(c.coeffs().begin(), c.coeffs().end()));
  return e;
}

// Display value: rounded to 15 digits, with rounding-level noise shown as 0.
double shown(double v) { return std::abs(v) < 1e-14 ? 0.0 : round_to_15_digits(v); }

json spectrum_json(const Spectrum& s) {
  json values = json::array();
  for (const auto& ev : s.values) {
    json v;
    v["re"] = shown(ev.value.real());
    v["im"] = shown(ev.value.imag());
    v["mult"] = ev.multiplicity;
    values.push_back(std::move(v));
  }
  return values;
}

json witness_json(const Witness& w, int q) {
  json doc;
  doc["q"] = q;
  doc["row_perm"] = w.row_perm;
  doc["col_perm"] = w.col_perm;
  doc["left"] = w.left.exps;
  doc["right"] = w.right.exps;
  return doc;
}

std::string list(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Butson-type complex Hadamard matrices of order 6: invariants, equivalence, isolation"};
  app.require_subcommand(1);

  bool as_json = false;
  double tol = 0.0;
  std::string first;
  std::string second;
  std::string mode;
  std::string show_name;

  auto* catalog_cmd = app.add_subcommand("catalog", "List or print catalog matrices");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List catalog names");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Print a catalog matrix");
  show_cmd->add_option("name", show_name, "Catalog name")->required();
  show_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Check the Hadamard property");
  verify_cmd->add_option("matrix", first, "File, catalog name, catalog:NAME or -")->required();
  verify_cmd->add_option("--tol", tol, "Tolerance for complex (C) input")->default_val(1e-10);

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Exact characteristic polynomial, scaled convention");
  charpoly_cmd->add_option("matrix", first)->required();
  charpoly_cmd->add_flag("--json", as_json);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of H/sqrt(n) with multiplicities");
  spectrum_cmd->add_option("matrix", first)->required();
  spectrum_cmd->add_option("--tol", tol, "Residual tolerance")->default_val(1e-8);
  spectrum_cmd->add_flag("--json", as_json);

  auto* dephase_cmd = app.add_subcommand("dephase", "Standard form and the phases that undo it");
  dephase_cmd->add_option("matrix", first)->required();
  dephase_cmd->add_flag("--json", as_json);

  auto* defect_cmd = app.add_subcommand("defect", "Defect (isolation certificate)");
  defect_cmd->add_option("matrix", first)->required();
  defect_cmd->add_option("--tol", tol, "Relative singular value threshold")->default_val(1e-8);
  defect_cmd->add_flag("--json", as_json);

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide standard or unitary equivalence");
  equiv_cmd->add_option("mode", mode)->required()->check(CLI::IsMember({"standard", "unitary"}));
  equiv_cmd->add_option("first", first)->required();
  equiv_cmd->add_option("second", second)->required();
  equiv_cmd->add_flag("--json", as_json);

  auto* report_cmd = app.add_subcommand("report", "Evaluate every claim");
  report_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& e : catalog()) out << e.name << "\t" << e.matrix.order() << "\t" << e.description << '\n';
      return kExitOk;
    }
    if (show_cmd->parsed()) {
      const Source s{show_name, get(show_name)};
      const auto& b = require_butson(s, "catalog show");
      if (as_json) {
        json doc = header(s);
        doc["matrix"] = grid_json(b);
        print_json(out, doc);
      } else {
        out << format_matrix(b);
      }
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      const Source s = load(first, in);
      bool hadamard = false;
      if (const auto* b = std::get_if<ButsonMatrix>(&s.matrix)) {
        hadamard = is_hadamard_exact(*b);
      } else {
        hadamard = is_hadamard_numeric(std::get<ComplexMatrix>(s.matrix), tol);
      }
      out << "hadamard: " << (hadamard ? "true" : "false") << '\n';
      return hadamard ? kExitOk : kExitFalse;
    }
    if (charpoly_cmd->parsed()) {
      const Source s = load(first, in);
      const auto& b = require_butson(s, "charpoly");
      const ScaledPoly p = scale(charpoly_exact(b), b.size());
      if (as_json) {
        json doc = header(s);
        doc["charpoly"]["e"] = coefficients_json(p.e);
        print_json(out, doc);
      } else {
        out << "det(xI - H/sqrt(" << b.size() << ")) = sum_k e_k " << b.size() << "^(-(n-k)/2) x^k\n";
        for (int k = p.degree(); k >= 0; --k) out << "e_" << k << " = " << p.e[static_cast<std::size_t>(k)].str() << '\n';
      }
      return kExitOk;
    }
    if (spectrum_cmd->parsed()) {
      const Source s = load(first, in);
      const auto& b = require_butson(s, "spectrum");
      const Spectrum sp = spectrum_numeric(scale(charpoly_exact(b), b.size()), tol);
      if (as_json) {
        json doc = header(s);
        doc["spectrum"] = spectrum_json(sp);
        print_json(out, doc);
      } else {
        for (const auto& ev : sp.values) {
          out << format_double(shown(ev.value.real())) << ' ' << format_double(shown(ev.value.imag()))
              << " x" << ev.multiplicity << '\n';
        }
      }
      return kExitOk;
    }
    if (dephase_cmd->parsed()) {
      const Source s = load(first, in);
      const auto& b = require_butson(s, "dephase");
      const Dephased d = dephase(b);
      if (as_json) {
        json doc = header(s);
        doc["matrix"] = grid_json(d.matrix);
        doc["left"] = d.left.exps;
        doc["right"] = d.right.exps;
        print_json(out, doc);
      } else {
        out << format_matrix(d.matrix);
        out << "# left " << list(d.left.exps) << '\n';
        out << "# right " << list(d.right.exps) << '\n';
      }
      return kExitOk;
    }
    if (defect_cmd->parsed()) {
      const Source s = load(first, in);
      const auto& b = require_butson(s, "defect");
      if (!is_hadamard_exact(b)) {
        err << "defect: input is not a Hadamard matrix\n";
        return kExitFalse;
      }
      const int d = defect(b, tol);
      if (as_json) {
        json doc = header(s);
        doc["defect"] = d;
        print_json(out, doc);
      } else {
        out << "defect: " << d << '\n';
      }
      return kExitOk;
    }
    if (equiv_cmd->parsed()) {
      const Source a = load(first, in);
      const Source b = load(second, in);
      const auto& ma = require_butson(a, "equiv");
      const auto& mb = require_butson(b, "equiv");
      json result;
      result["mode"] = mode;
      bool equivalent = false;
      if (mode == "unitary") {
        equivalent = unitary_equivalent(ma, mb);
        result["equivalent"] = equivalent;
        result["witness"] = nullptr;
      } else {
        const EquivVerdict v = standard_equivalent(ma, mb);
        equivalent = v.equivalent;
        result["equivalent"] = equivalent;
        result["witness"] = v.witness ? witness_json(*v.witness, v.order) : json(nullptr);
      }
      if (as_json) {
        json doc;
        doc["name"] = {a.name, b.name};
        doc["q"] = common_order(ma.order(), mb.order());
        doc["n"] = ma.size();
        doc["equiv"] = result;
        print_json(out, doc);
      } else {
        out << mode << " equivalent: " << (equivalent ? "true" : "false") << '\n';
        if (result["witness"].is_object()) {
          const auto& w = result["witness"];
          out << "row_perm: " << list(w["row_perm"].get<std::vector<int>>()) << '\n';
          out << "col_perm: " << list(w["col_perm"].get<std::vector<int>>()) << '\n';
          out << "left: " << list(w["left"].get<std::vector<int>>()) << '\n';
          out << "right: " << list(w["right"].get<std::vector<int>>()) << '\n';
          out << "q: " << w["q"].get<int>() << '\n';
        }
      }
      return equivalent ? kExitOk : kExitFalse;
    }
    if (report_cmd->parsed()) {
      const auto claims = evaluate_claims();
      out << (as_json ? render_json(claims) : render_markdown(claims));
      return any_refuted(claims) ? kExitFalse : kExitOk;
    }
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const ArithmeticOverflow& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace butson
