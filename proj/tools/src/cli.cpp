#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "invqm/brooks.hpp"
#include "invqm/dimension.hpp"
#include "invqm/error.hpp"
#include "invqm/invariant_homs.hpp"
#include "invqm/magnus.hpp"
#include "invqm/presentation.hpp"
#include "invqm/quotient.hpp"
#include "invqm/transgression.hpp"

namespace invqm::cli {
namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- input

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw PreconditionError("cannot open file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(std::string const& text, std::string const& what) {
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const& e) {
    throw PreconditionError("malformed JSON in " + what + ": " + e.what());
  }
}

/// Inline JSON when the argument starts with '[', otherwise a file path.
Json json_argument(std::string const& arg, std::string const& what) {
  auto const first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '[') {
    return parse_json(arg, what);
  }
  return parse_json(read_file(arg), what + " '" + arg + "'");
}

Rat json_rat(Json const& v) {
  if (v.is_number_integer()) {
    return Rat(Int(v.dump()));
  }
  if (v.is_string()) {
    return parse_rat(v.get<std::string>());
  }
  throw PreconditionError("matrix entries must be integers or \"p/q\" strings, got " + v.dump());
}

MatQ json_matrix(Json const& j) {
  if (!j.is_array() || j.empty()) {
    throw PreconditionError("matrix must be a nonempty array of rows");
  }
  std::vector<std::vector<Rat>> rows;
  for (auto const& row : j) {
    if (!row.is_array()) {
      throw PreconditionError("matrix rows must be arrays");
    }
    auto& r = rows.emplace_back();
    for (auto const& v : row) {
      r.push_back(json_rat(v));
    }
    if (r.size() != rows.front().size()) {
      throw PreconditionError("matrix rows have different lengths");
    }
  }
  return MatQ::from_rows(rows);
}

MatZ integer_matrix_argument(std::string const& arg) {
  return to_integer(json_matrix(json_argument(arg, "matrix")));
}

VecZ json_int_vector(Json const& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) {
    throw PreconditionError("expected an integer vector of length " + std::to_string(n) + ", got "
                            + j.dump());
  }
  VecZ v;
  for (auto const& x : j) {
    Rat const r = json_rat(x);
    if (!is_integral(r)) {
      throw PreconditionError("expected integer entries, got " + j.dump());
    }
    v.push_back(r.get_num());
  }
  return v;
}

std::vector<std::string> split_names(std::string const& text) {
  std::vector<std::string> names;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, ',')) {
    auto const b = item.find_first_not_of(' ');
    auto const e = item.find_last_not_of(' ');
    if (b == std::string::npos) {
      throw PreconditionError("empty generator name in '" + text + "'");
    }
    names.push_back(item.substr(b, e - b + 1));
  }
  if (names.empty()) {
    throw PreconditionError("no generator names given");
  }
  return names;
}

std::pair<std::size_t, std::size_t> parse_pair(std::string const& text, std::size_t n) {
  auto const comma = text.find(',');
  if (comma == std::string::npos) {
    throw PreconditionError("expected i,j, got '" + text + "'");
  }
  std::size_t i = 0;
  std::size_t j = 0;
  try {
    i = std::stoul(text.substr(0, comma));
    j = std::stoul(text.substr(comma + 1));
  } catch (std::exception const&) {
    throw PreconditionError("expected i,j, got '" + text + "'");
  }
  if (!(1 <= i && i < j && j <= n)) {
    throw PreconditionError("need 1 <= i < j <= " + std::to_string(n) + ", got " + text);
  }
  return {i, j};
}

// --------------------------------------------------------------- output

std::string rat(Rat const& r) { return to_string(r); }

Json bounded_json(Bounded const& b) {
  return Json{{"value", b.value}, {"status", std::string(to_string(b.status))}};
}

Json report_json(DimensionReport const& r) {
  Json j;
  j["dims"] = Json{{"q_mod_ext", bounded_json(r.q_mod_ext)},
                   {"q_mod_h1_ext", bounded_json(r.q_mod_h1_ext)}};
  j["h1NG"]    = bounded_json(r.h1_ng);
  j["h2Gamma"] = r.h2_gamma;
  if (r.h2_g) {
    j["h2G"] = *r.h2_g;
  }
  j["hypotheses"] = Json{
      {"quotient_boundedly_3_acyclic", std::string(to_string(r.hypotheses.quotient_boundedly_3_acyclic))},
      {"acyclicity_reason", r.hypotheses.acyclicity_reason},
      {"comparison_surjective", std::string(to_string(r.hypotheses.comparison_surjective))},
      {"n_is_commutator_subgroup", r.hypotheses.n_is_commutator_subgroup},
  };
  j["provenance"] = r.provenance;
  return j;
}

Json wedge_pairs_json(WedgeVec const& w) {
  Json pairs = Json::array();
  auto const ps = invqm::pairs(w.rank);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (w.coeffs[k] != 0) {
      pairs.push_back(Json::array({ps[k].first, ps[k].second, rat(w.coeffs[k])}));
    }
  }
  return pairs;
}

Json matrix_json(MatQ const& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(rat(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(VecZ const& v) {
  Json a = Json::array();
  for (auto const& x : v) {
    a.push_back(Json::parse(x.get_str()));
  }
  return a;
}

void table_row(std::ostream& out, std::string const& key, std::string const& value) {
  out << std::left << std::setw(26) << key << value << '\n';
}

std::string bounded_text(Json const& b) {
  return b["value"].dump() + " (" + b["status"].get<std::string>() + ")";
}

/// Flat key/value rendering of a top-level object.
void print_table(std::ostream& out, Json const& j) {
  for (auto const& [key, value] : j.items()) {
    if (key == "schema_version") {
      continue;
    }
    if (key == "dims") {
      for (auto const& [k, v] : value.items()) {
        table_row(out, k, bounded_text(v));
      }
    } else if (value.is_object() && value.contains("status")) {
      table_row(out, key, bounded_text(value));
    } else if (key == "provenance" && value.is_array()) {
      for (auto const& line : value) {
        table_row(out, key, line.get<std::string>());
      }
    } else if (value.is_string()) {
      table_row(out, key, value.get<std::string>());
    } else {
      table_row(out, key, value.dump());
    }
  }
}

// ------------------------------------------------------------------ app

struct Options {
  bool table  = false;
  bool pretty = false;

  std::string file;
  bool        assert_hyperbolic = false;
  bool        assert_atoroidal  = false;

  std::string                preset_name;
  std::optional<std::size_t> rank;
  std::optional<std::size_t> genus;
  std::optional<std::size_t> power;
  std::optional<long>        euler;
  std::optional<std::string> matrix;

  std::string shape;

  std::string word;
  std::string gens = "a,b";

  std::string                hom;
  std::optional<std::string> pairs_file;
  bool                       cup_matrix = false;

  std::string                qm_terms;
  std::string                qm_mode = "big";
  std::size_t                maxlen  = 3;
  std::size_t                kmax    = 32;
  std::size_t                threads = 0;
  std::optional<std::string> defect_upper;
  std::string                quotient_class = "generic";
  std::optional<std::string> constant;
};

class App {
 public:
  App(std::ostream& out, std::ostream& err) : _out(out), _err(err) { build(); }

  int run(int argc, char const* const* argv) {
    try {
      _app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
      int const code = _app.exit(e, _out, _err);
      return code == 0 ? 0 : 2;
    }
    try {
      emit(dispatch());
      return 0;
    } catch (PreconditionError const& e) {
      _err << "invqm: " << e.what() << '\n';
      return 2;
    } catch (std::exception const& e) {
      _err << "invqm: internal error: " << e.what() << '\n';
      return 1;
    }
  }

 private:
  void build() {
    _app.require_subcommand(1);
    _app.add_flag("--table", _o.table, "Plain-text table instead of JSON");
    _app.add_flag("--pretty", _o.pretty, "Indented JSON");
    // Accepted for symmetry with --table; JSON is the default.
    _app.add_flag("--json", _json_flag, "JSON output (default)");
    _app.set_help_all_flag("--help-all", "Help for every subcommand");
    // Output flags may appear after the subcommand.
    _app.fallthrough();

    auto* analyze = _app.add_subcommand("analyze", "Dimension report for a presentation file");
    analyze->add_option("file", _o.file, "Presentation (.grp)")->required();
    analyze->add_flag("--assert-hyperbolic", _o.assert_hyperbolic,
                      "Assert that H^2_b(G) -> H^2(G) is surjective");

    auto* preset = _app.add_subcommand("preset", "Dimension report for a named family");
    std::string names;
    for (auto const& n : preset_names()) {
      names += (names.empty() ? "" : ", ") + n;
    }
    preset->add_option("name", _o.preset_name, names)->required();
    preset->add_option("--rank", _o.rank);
    preset->add_option("--genus", _o.genus);
    preset->add_option("--power", _o.power);
    preset->add_option("--euler", _o.euler);
    preset->add_option("--matrix", _o.matrix, "Inline JSON or file");
    preset->add_flag("--assert-atoroidal,--assert-hyperbolic", _o.assert_atoroidal,
                     "free_torus: assert an atoroidal monodromy");

    auto* torus = _app.add_subcommand("torus", "Dimension report for a mapping torus");
    torus->add_option("--shape", _o.shape)->required()->check(CLI::IsMember({"surface", "free"}));
    torus->add_option("--genus", _o.genus);
    torus->add_option("--rank", _o.rank);
    torus->add_option("--matrix", _o.matrix, "Inline JSON or file")->required();
    torus->add_flag("--assert-hyperbolic", _o.assert_hyperbolic, "Assert a pseudo-Anosov monodromy");
    torus->add_flag("--assert-atoroidal", _o.assert_atoroidal, "Assert an atoroidal monodromy");

    auto* invhoms = _app.add_subcommand("invhoms", "Basis of invariant homomorphisms on [G,G]");
    invhoms->add_option("file", _o.file, "Presentation (.grp)")->required();

    auto* wedge = _app.add_subcommand("wedge", "Wedge class of a commutator-subgroup element");
    wedge->add_option("word", _o.word)->required();
    wedge->add_option("--gens", _o.gens, "Comma-separated generator names");

    auto* tr = _app.add_subcommand("transgress", "Transgression cocycle of alpha_{i,j} on Z^n");
    tr->add_option("--rank", _o.rank)->required();
    tr->add_option("--hom", _o.hom, "i,j")->required();
    tr->add_option("--pairs", _o.pairs_file, "JSON list of [g1, g2] integer vectors");
    tr->add_flag("--cup-matrix", _o.cup_matrix, "Emit the antisymmetrized pairing matrix");

    auto* qm = _app.add_subcommand("qm", "Counting quasimorphisms");
    qm->require_subcommand(1);
    auto common = [&](CLI::App* c) {
      c->add_option("--terms", _o.qm_terms, "e.g. \"ab:1,ba:-1\"")->required();
      c->add_option("--mode", _o.qm_mode)->check(CLI::IsMember({"big", "little"}));
      c->add_option("--gens", _o.gens, "Comma-separated generator names");
    };
    auto* eval = qm->add_subcommand("eval", "f(x)");
    common(eval);
    eval->add_option("word", _o.word)->required();
    auto* homog = qm->add_subcommand("homog", "Homogenization fbar(x)");
    common(homog);
    homog->add_option("word", _o.word)->required();
    homog->add_option("--kmax", _o.kmax);
    auto* defect = qm->add_subcommand("defect", "Enumerated lower bound for the defect");
    common(defect);
    defect->add_option("--maxlen", _o.maxlen);
    defect->add_option("--threads", _o.threads);
    auto* bavard = qm->add_subcommand("bavard", "Bavard lower bound |fbar(x)| / 2D");
    common(bavard);
    bavard->add_option("word", _o.word)->required();
    bavard->add_option("--defect-upper", _o.defect_upper, "Certified upper bound D for D(fbar)");
    bavard->add_option("--maxlen", _o.maxlen, "Enumeration length when no upper bound is given");
    bavard->add_option("--kmax", _o.kmax);
    bavard->add_option("--threads", _o.threads);
    auto* equiv = qm->add_subcommand("equivalence", "Comparison of scl_G and scl_{G,N}");
    equiv->add_option("--quotient", _o.quotient_class)
        ->check(CLI::IsMember({"solvable", "amenable", "generic"}));
    equiv->add_option("--constant", _o.constant, "C >= 1 for the generic comparison");
  }

  Json dispatch() {
    auto* sub = _app.get_subcommands().front();
    std::string const name = sub->get_name();
    if (name == "analyze") {
      return analyze();
    }
    if (name == "preset") {
      return preset_cmd();
    }
    if (name == "torus") {
      return torus();
    }
    if (name == "invhoms") {
      return invhoms();
    }
    if (name == "wedge") {
      return wedge();
    }
    if (name == "transgress") {
      return transgress_cmd();
    }
    return qm(sub->get_subcommands().front()->get_name());
  }

  void emit(Json j) {
    j["schema_version"] = schema_version;
    if (_o.table) {
      print_table(_out, j);
    } else {
      _out << j.dump(_o.pretty ? 2 : -1) << '\n';
    }
  }

  Json analyze() {
    auto const p = load_presentation(_o.file);
    Json j = report_json(analyze_presentation(p, _o.assert_hyperbolic));
    auto const ab = abelian_quotient(p);
    Json torsion = Json::array();
    for (auto const& t : ab.torsion) {
      torsion.push_back(t.get_str());
    }
    j["abelianization"] = Json{{"free_rank", ab.free_rank}, {"torsion", torsion}};
    return j;
  }

  Json preset_cmd() {
    PresetParams params;
    params.rank              = _o.rank;
    params.genus             = _o.genus;
    params.power             = _o.power;
    params.euler             = _o.euler;
    params.assert_hyperbolic = _o.assert_atoroidal;
    if (_o.matrix) {
      params.matrix = integer_matrix_argument(*_o.matrix);
    }
    return report_json(preset(_o.preset_name, params));
  }

  Json torus() {
    MatZ a = integer_matrix_argument(*_o.matrix);
    if (_o.shape == "surface") {
      if (_o.genus && a.rows() != 2 * *_o.genus) {
        throw PreconditionError("matrix size does not match --genus");
      }
      bool const asserted = _o.assert_hyperbolic || _o.assert_atoroidal;
      return report_json(analyze_mapping_torus(SemidirectQuotient(TorusShape::surface, std::move(a), asserted)));
    }
    if (_o.rank && a.rows() != *_o.rank) {
      throw PreconditionError("matrix size does not match --rank");
    }
    bool const asserted = _o.assert_atoroidal || _o.assert_hyperbolic;
    return report_json(analyze_free_by_cyclic(SemidirectQuotient(TorusShape::free, std::move(a), asserted)));
  }

  Json invhoms() {
    auto const p     = load_presentation(_o.file);
    auto const space = inv_hom_basis(p);
    auto const w     = constraint_space(p);
    Json basis       = Json::array();
    for (auto const& phi : space.basis) {
      basis.push_back(wedge_pairs_json(WedgeVec(phi.rank, phi.coeffs)));
    }
    Json constraints = Json::array();
    for (auto const& c : w.basis) {
      constraints.push_back(wedge_pairs_json(c));
    }
    return Json{{"gens", p.names},
                {"dim", space.dimension},
                {"basis", basis},
                {"constraint_dim", w.dim()},
                {"constraints", constraints}};
  }

  Json wedge() {
    auto const names = split_names(_o.gens);
    auto const w     = parse_word(_o.word, names);
    if (!is_in_commutator_subgroup(w)) {
      throw PreconditionError("'" + _o.word + "' is not in the commutator subgroup");
    }
    return Json{{"pairs", wedge_pairs_json(wedge_class(w))}};
  }

  Json transgress_cmd() {
    std::size_t const n = *_o.rank;
    if (n < 2) {
      throw PreconditionError("transgression needs rank >= 2");
    }
    auto const [i, j] = parse_pair(_o.hom, n);
    if (!_o.pairs_file && !_o.cup_matrix) {
      throw PreconditionError("nothing to do: give --pairs and/or --cup-matrix");
    }
    auto const f = InvariantHom::alpha(n, i, j);
    Json out{{"rank", n}, {"hom", Json::array({i, j})}};
    if (_o.pairs_file) {
      Json const input = json_argument(*_o.pairs_file, "pairs");
      if (!input.is_array()) {
        throw PreconditionError("pairs must be a JSON array of [g1, g2]");
      }
      TransgressionCocycle const cocycle(f);
      Json values = Json::array();
      for (auto const& item : input) {
        if (!item.is_array() || item.size() != 2) {
          throw PreconditionError("each pair must be [g1, g2], got " + item.dump());
        }
        VecZ const g1 = json_int_vector(item[0], n);
        VecZ const g2 = json_int_vector(item[1], n);
        values.push_back(Json{{"g1", vector_json(g1)}, {"g2", vector_json(g2)}, {"value", rat(cocycle(g1, g2))}});
      }
      out["values"] = values;
    }
    if (_o.cup_matrix) {
      out["cup_matrix"] = matrix_json(cup_class_matrix(f));
    }
    return out;
  }

  Json qm(std::string const& op) {
    if (op == "equivalence") {
      QuotientClass cls = QuotientClass::generic;
      if (_o.quotient_class == "solvable") {
        cls = QuotientClass::solvable;
      } else if (_o.quotient_class == "amenable") {
        cls = QuotientClass::amenable;
      }
      std::optional<Rat> c;
      if (_o.constant) {
        c = parse_rat(*_o.constant);
      }
      return Json{{"quotient", _o.quotient_class}, {"report", equivalence_report(cls, c)}};
    }

    auto const names = split_names(_o.gens);
    auto const f     = CountingQM::parse(_o.qm_terms, names, parse_count_mode(_o.qm_mode));
    Json out{{"terms", _o.qm_terms}, {"mode", _o.qm_mode}};

    if (op == "defect") {
      out["defect"] = certificate_json(defect_lower_bound(f, _o.maxlen, _o.threads), names);
      return out;
    }

    auto const x = parse_word(_o.word, names);
    out["word"]  = render(x, names);
    if (op == "eval") {
      out["value"] = rat(f(x));
    } else if (op == "homog") {
      auto const h   = homogenize(f, x, _o.kmax);
      out["value"]   = rat(h.value);
      out["horizon"] = h.horizon;
      out["window"]  = h.window;
    } else {
      DefectCertificate const d = _o.defect_upper
                                      ? DefectCertificate::upper(parse_rat(*_o.defect_upper), "user-supplied")
                                      : defect_lower_bound(f, _o.maxlen, _o.threads);
      auto const e      = bavard_estimate(f, x, d, _o.kmax);
      out["homogenized"] = rat(e.homogenized);
      out["value"]       = rat(e.value);
      out["certified"]   = e.certified;
      out["label"]       = e.label;
      out["defect"]      = certificate_json(d, names);
      out["note"] =
          "the supremum is zero when every invariant quasimorphism is an invariant homomorphism; "
          "that hypothesis is not decided here";
    }
    return out;
  }

  static Json certificate_json(DefectCertificate const& d, std::vector<std::string> const& names) {
    Json j{{"bound", rat(d.bound)},
           {"kind", d.kind == CertificateKind::lower ? "lower" : "upper"}};
    if (d.kind == CertificateKind::lower) {
      j["max_length"] = d.max_length;
    }
    if (d.witness) {
      j["witness"] = Json{{"x", render(d.witness->first, names)}, {"y", render(d.witness->second, names)}};
    }
    j["provenance"] = d.provenance;
    return j;
  }

  std::ostream& _out;
  std::ostream& _err;
  CLI::App      _app{"Invariant quasimorphisms and their extension problem", "invqm"};
  Options       _o;
  bool          _json_flag = false;
};

}  // namespace

int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
  App app(out, err);
  return app.run(argc, argv);
}

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  std::vector<char const*> argv{"invqm"};
  for (auto const& a : args) {
    argv.push_back(a.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace invqm::cli
