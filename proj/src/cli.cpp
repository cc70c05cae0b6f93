#include "jordan/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "jordan/automorphism.hpp"
#include "jordan/error.hpp"
#include "jordan/imagealg.hpp"
#include "jordan/jordan_plane.hpp"
#include "jordan/json_io.hpp"
#include "jordan/poly_parse.hpp"
#include "jordan/random.hpp"
#include "jordan/reps.hpp"
#include "jordan/rewrite.hpp"
#include "jordan/strata.hpp"

namespace jordan::cli {

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

// X and Y of a RepPair document without verifying the relation.
std::pair<QMatrix, QMatrix> load_pair(const std::string& path) {
  const Json doc = read_json_file(path);
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned())
    throw ParseError("'" + path + "': rep document needs an unsigned 'n'");
  const std::size_t n = doc["n"].get<std::size_t>();
  if (!doc.contains("X") || !doc.contains("Y")) throw ParseError("'" + path + "': needs 'X' and 'Y'");
  return {grid_from_json(doc["X"], n), grid_from_json(doc["Y"], n)};
}

RepPair load_rep(const std::string& path) { return rep_from_json(read_json_file(path)); }

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the Jordan plane k<x,y>/(xy - yx - y^2)", "jordan-lab"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  auto* seed_opt = app.add_option("--seed", g.seed, "Seed for randomized subroutines (default: $JORDAN_LAB_SEED or 0)");

  std::function<void()> action;
  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  // nf
  std::string poly_a, poly_b;
  auto* nf = sub(&app, "nf", "Normal form on the basis y^k x^m");
  nf->add_option("poly", poly_a, "Polynomial, e.g. \"x^2*y - 2*y^2*x\"")->required();
  nf->callback([&] {
    action = [&] {
      const NormalPoly result = normal_form(parse_ncpoly(poly_a));
      if (g.json) {
        print_json(out, Json{{"input", poly_a}, {"normal_form", result.str()}});
      } else {
        out << result.str() << '\n';
      }
    };
  });

  // mul
  auto* mul = sub(&app, "mul", "Product of two polynomials in normal form");
  mul->add_option("left", poly_a)->required();
  mul->add_option("right", poly_b)->required();
  mul->callback([&] {
    action = [&] {
      const NormalPoly result =
          multiply(normal_form(parse_ncpoly(poly_a)), normal_form(parse_ncpoly(poly_b)));
      if (g.json) {
        print_json(out, Json{{"product", result.str()}});
      } else {
        out << result.str() << '\n';
      }
    };
  });

  // hilbert
  std::size_t max_degree = 0;
  auto* hilbert = sub(&app, "hilbert", "Hilbert function against 1/(1 - 2t + t^2)");
  hilbert->add_option("--max-degree", max_degree, "Largest degree")->required();
  hilbert->callback([&] {
    action = [&] {
      const auto series = gs_series_coefficients(2, 1, max_degree);
      std::vector<std::uint64_t> dims;
      for (std::size_t d = 0; d <= max_degree; ++d) dims.push_back(hilbert_dim(d));
      bool agree = true;
      for (std::size_t d = 0; d <= max_degree; ++d)
        agree = agree && static_cast<std::int64_t>(dims[d]) == series[d];
      if (g.json) {
        print_json(out, Json{{"max_degree", max_degree}, {"hilbert", dims}, {"gs_series", series}, {"agree", agree}});
      } else {
        for (std::size_t d = 0; d <= max_degree; ++d) out << d << ' ' << dims[d] << ' ' << series[d] << '\n';
        out << (agree ? "agree" : "DISAGREE") << '\n';
      }
    };
  });

  // gb-check
  std::size_t gb_degree = 12;
  auto* gb = sub(&app, "gb-check", "Ambiguities of the rewriting system xy -> yx + y^2");
  gb->add_option("--max-degree", gb_degree, "Degree cap for resolving ambiguities");
  gb->callback([&] {
    action = [&] {
      const RewriteSystem rs = RewriteSystem::jordan();
      const auto ovs = overlaps(rs);
      const ConfluenceReport report = confluence_check(rs, gb_degree);
      if (g.json) {
        Json words = Json::array();
        for (const auto& o : ovs) words.push_back(o.word.str());
        print_json(out, Json{{"overlaps", words}, {"confluent", report.confluent}, {"checked", report.checked}});
      } else {
        out << "overlaps: " << ovs.size() << '\n';
        out << "confluent: " << (report.confluent ? "yes" : "no") << '\n';
      }
    };
  });

  // rep
  auto* rep = sub(&app, "rep", "Build, verify and evaluate representations");
  rep->require_subcommand(1);
  std::string partition_text, canonical_text, output_path, file;
  auto* build = sub(rep, "build", "Write a RepPair document");
  build->add_option("--partition", partition_text, "Jordan type of Y, e.g. 3,2,1")->required();
  auto* canonical_opt = build->add_option("--canonical", canonical_text, "lambda,mu: X = lambda I + mu Y + X0");
  build->add_option("-o,--output", output_path, "Write to a file instead of stdout");
  build->callback([&] {
    action = [&] {
      const Partition p = Partition::parse(partition_text);
      if (*canonical_opt && g.seed_given) throw OutOfRange("--canonical and --seed are exclusive");
      std::optional<RepPair> built;
      if (*canonical_opt) {
        const auto lm = parse_rational_list(canonical_text);
        if (lm.size() != 2) throw ParseError("--canonical expects two rationals L,M");
        const QMatrix y = jordan_matrix(p);
        built = RepPair::make(QMatrix::identity(p.size()) * lm[0] + y * lm[1] + x_zero(p), y, p);
      } else if (g.seed_given) {
        Sampler sampler(g.seed);
        built = sampler.fiber_point(p);
      } else {
        built = RepPair::make(x_zero(p), jordan_matrix(p), p);
      }
      const std::string text = rep_to_json(*built).dump(2) + "\n";
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream f(output_path);
        if (!f) throw IoError("cannot write '" + output_path + "'");
        f << text;
      }
    };
  });

  auto* verify = sub(rep, "verify", "Check XY - YX = Y^2 for a RepPair document");
  verify->add_option("file", file)->required();
  verify->callback([&] {
    action = [&] {
      auto [x, y] = load_pair(file);
      auto result = verify_rep(x, y);
      if (auto* v = std::get_if<Violation>(&result)) {
        if (g.json) print_json(out, Json{{"valid", false}, {"residual", matrix_to_json(v->residual)}});
        throw RelationViolated("XY - YX - Y^2 is nonzero:\n" + v->residual.str());
      }
      const RepPair& r = std::get<RepPair>(result);
      if (g.json) {
        print_json(out, Json{{"valid", true}, {"n", r.n()}, {"y_nilpotency_index", r.y_nilpotency_index()}});
      } else {
        out << "ok n=" << r.n() << " nilpotency(Y)=" << r.y_nilpotency_index() << '\n';
      }
    };
  });

  auto* rep_eval = sub(rep, "eval", "Evaluate a polynomial on a RepPair");
  rep_eval->add_option("file", file)->required();
  rep_eval->add_option("poly", poly_a)->required();
  rep_eval->callback([&] {
    action = [&] {
      const QMatrix m = eval(parse_ncpoly(poly_a), load_rep(file));
      if (g.json) {
        print_json(out, matrix_to_json(m));
      } else {
        out << m.str();
      }
    };
  });

  // image
  auto* image = sub(&app, "image", "Analyze the image algebra of a RepPair");
  image->require_subcommand(1);
  auto* image_dim = sub(image, "dim", "Dimension of the image algebra");
  image_dim->add_option("file", file)->required();
  image_dim->callback([&] {
    action = [&] {
      const ImageAlgebra a = image_algebra(load_rep(file));
      if (g.json) {
        print_json(out, Json{{"dim", a.dim}, {"bound", dim_bound(a.rep.n())}, {"closure_rounds", a.closure_rounds}});
      } else {
        out << a.dim << '\n';
      }
    };
  });

  std::size_t rel_degree = 0;
  auto* relations = sub(image, "relations", "Relations of degree <= D satisfied by the rep");
  relations->add_option("file", file)->required();
  relations->add_option("--max-degree", rel_degree)->required();
  relations->callback([&] {
    action = [&] {
      const auto rels = discover_relations(load_rep(file), rel_degree);
      if (g.json) {
        Json list = Json::array();
        for (const auto& r : rels) list.push_back(r.str());
        print_json(out, Json{{"relations", list}});
      } else {
        for (const auto& r : rels) out << r.str() << '\n';
      }
    };
  });

  auto* quiver_cmd = sub(image, "quiver", "Quiver of the image algebra");
  quiver_cmd->add_option("file", file)->required();
  quiver_cmd->callback([&] {
    action = [&] {
      const QuiverData q = quiver(image_algebra(load_rep(file)));
      if (g.json) {
        print_json(out, quiver_to_json(q));
      } else {
        out << "vertices:";
        for (const auto& v : q.vertices) out << ' ' << v;
        out << "\narrows:\n";
        for (const auto& row : q.arrows) {
          for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
          out << '\n';
        }
      }
    };
  });

  std::vector<std::string> gens_text;
  auto* codim = sub(image, "quotient-codim", "Codimension of the ideal generated by polynomials");
  codim->add_option("file", file)->required();
  codim->add_option("--gens", gens_text, "Generators (repeat or separate with commas)")->required();
  codim->callback([&] {
    action = [&] {
      std::vector<NcPoly> gens;
      for (const auto& item : gens_text) {
        std::stringstream ss(item);
        std::string piece;
        while (std::getline(ss, piece, ',')) gens.push_back(parse_ncpoly(piece));
      }
      const std::size_t c = ideal_codim(image_algebra(load_rep(file)), gens);
      if (g.json) {
        print_json(out, Json{{"codim", c}});
      } else {
        out << c << '\n';
      }
    };
  });

  // strata
  auto* strata = sub(&app, "strata", "Stratification of mod(R, n)");
  strata->require_subcommand(1);
  std::size_t census_n = 0;
  unsigned threads = 1;
  auto* census_cmd = sub(strata, "census", "One row per partition of n");
  census_cmd->add_option("--n", census_n)->required()->check(CLI::Range(1, 64));
  census_cmd->add_option("--threads", threads, "Worker threads; output order is fixed")->check(CLI::Range(1, 256));
  census_cmd->callback([&] {
    action = [&] {
      const auto rows = census(census_n, threads);
      if (g.json) {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(stratum_to_json(r));
        print_json(out, list);
      } else {
        out << "partition fiber_dim base_dim stratum_dim image_dim_bound tame\n";
        for (const auto& r : rows) {
          out << r.partition.str() << ' ' << r.fiber_dim << ' ' << r.base_dim << ' ' << r.stratum_dim << ' '
              << r.image_dim_bound << ' ' << to_string(r.tame_label) << '\n';
        }
      }
    };
  });

  // faithful
  std::size_t max_n = 0;
  auto* faithful = sub(&app, "faithful", "Least n with epsilon_n(f) != 0");
  faithful->add_option("poly", poly_a)->required();
  auto* max_n_opt = faithful->add_option("--max-n", max_n, "Largest n to try (default 2*deg+1)");
  faithful->callback([&] {
    action = [&] {
      const NcPoly f = parse_ncpoly(poly_a);
      const std::size_t limit = *max_n_opt ? max_n : static_cast<std::size_t>(2 * std::max(0L, f.degree()) + 1);
      const FaithfulResult r = faithful_witness(f, limit);
      const char* status = r.status == FaithfulResult::Status::Witness  ? "witness"
                           : r.status == FaithfulResult::Status::InIdeal ? "in-ideal"
                                                                         : "not-found";
      if (g.json) {
        Json j{{"status", status}, {"max_n", limit}};
        if (r.status == FaithfulResult::Status::Witness) j["n"] = r.n;
        print_json(out, j);
      } else if (r.status == FaithfulResult::Status::Witness) {
        out << status << ' ' << r.n << '\n';
      } else {
        out << status << '\n';
      }
    };
  });

  // decompose
  auto* decompose_cmd = sub(&app, "decompose", "Split into generalized eigenspaces of X");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->callback([&] {
    action = [&] {
      const Decomposition d = decompose(load_rep(file));
      if (g.json) {
        Json summands = Json::array();
        Json eigen = Json::array();
        for (const auto& s : d.summands) summands.push_back(rep_to_json(s));
        for (const auto& e : d.eigenvalues) eigen.push_back(e.str());
        print_json(out, Json{{"eigenvalues", eigen},
                             {"summands", summands},
                             {"change_of_basis", matrix_to_json(d.change_of_basis)}});
      } else {
        out << "summands: " << d.summands.size() << '\n';
        for (std::size_t i = 0; i < d.summands.size(); ++i)
          out << "lambda=" << d.eigenvalues[i] << " dim=" << d.summands[i].n() << '\n';
      }
    };
  });

  // orbit
  auto* orbit = sub(&app, "orbit", "Orbits of the unipotent centralizer on the full-block fiber");
  orbit->require_subcommand(1);
  std::size_t orbit_n = 0;
  auto* jac = sub(orbit, "jacobian-rank", "Rank of the orbit map differential at a random point");
  jac->add_option("--n", orbit_n)->required()->check(CLI::Range(2, 64));
  jac->callback([&] {
    action = [&] {
      Sampler sampler(g.seed);
      std::vector<Rational> c_coeffs, x_coeffs;
      for (std::size_t k = 1; k < orbit_n; ++k) c_coeffs.push_back(sampler.rational());
      for (std::size_t k = 1; k < orbit_n; ++k) x_coeffs.push_back(sampler.rational());
      const std::size_t r = jacobian_rank(orbit_n, c_coeffs, x_coeffs);
      if (g.json) {
        Json cj = Json::array(), xj = Json::array();
        for (const auto& c : c_coeffs) cj.push_back(c.str());
        for (const auto& c : x_coeffs) xj.push_back(c.str());
        print_json(out, Json{{"n", orbit_n}, {"seed", g.seed}, {"rank", r}, {"C", cj}, {"X", xj}});
      } else {
        out << r << '\n';
      }
    };
  });

  // canonical
  auto* canonical = sub(&app, "canonical", "Canonical parameters of full-block reps");
  canonical->require_subcommand(1);
  auto* extract = sub(canonical, "extract", "Read off (lambda, mu)");
  extract->add_option("file", file)->required();
  extract->callback([&] {
    action = [&] {
      const CanonicalParams params = extract_params(load_rep(file));
      if (g.json) {
        print_json(out, Json{{"lambda", params.lambda.str()}, {"mu", params.mu.str()}});
      } else {
        out << "lambda=" << params.lambda << " mu=" << params.mu << '\n';
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  g.seed_given = seed_opt->count() > 0;
  if (!g.seed_given) g.seed = default_seed();

  if (!action) {
    err << "error: no command given\n";
    return kUsageError;
  }
  try {
    action();
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace jordan::cli
