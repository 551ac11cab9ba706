#include "gecliff/tools/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gecliff/tools/parse.hpp"

namespace gecliff::tools {

namespace {

struct Globals {
  bool compact = false;
  std::uint64_t seed = 0;
  std::string file;
};

bool builtin_kind_known(const std::string& k) {
  const auto& kinds = builtin_kinds();
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string payload(const Globals& g, const std::string& inline_value, const char* what) {
  if (!inline_value.empty()) return inline_value;
  if (!g.file.empty()) return read_file(g.file);
  throw UsageError(std::string("missing ") + what + " (pass it inline or with --file)");
}

json integers_to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

json invariants_to_json(const AbelianInvariants& inv) {
  return json{{"torsion", integers_to_json(inv.torsion)}, {"rank", inv.rank}};
}

// Calls f(one, element_parser) for the context's element type.
template <typename F>
json with_context(const Context& ctx, F&& f) {
  if (ctx.is_gamma()) return f(CliffordElement::scalar(ctx.gamma_n, 1), clifford_parser(ctx.gamma_n));
  return f(ctx.order->one(), order_parser(ctx.order));
}

Context context_from(const std::string& flag, const json* j) {
  if (!flag.empty()) return parse_context(flag);
  if (j && j->is_object() && j->contains("ctx")) return parse_context(j->at("ctx").get<std::string>());
  throw UsageError("missing context (use --ctx or a \"ctx\" field)");
}

json family_reports(const std::vector<FamilyReport>& reports) {
  json fams = json::array();
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.pass();
    json f{{"family", r.family}, {"checked", r.checked}, {"failed", r.failed}, {"pass", r.pass()}};
    if (!r.pass()) f["counterexample"] = r.counterexample;
    fams.push_back(std::move(f));
  }
  return json{{"pass", all}, {"families", fams}};
}

json hom_to_json(const HomResult& h) {
  json j{{"ok", h.ok}, {"checked", h.checked}};
  if (!h.ok) j["witness"] = h.witness;
  return j;
}

Presentation presentation_from(const Globals& g, const std::string& kind, int n, const std::string& inline_text) {
  if (!kind.empty()) return builtin_presentation(kind, n);
  return parse_presentation_any(payload(g, inline_text, "presentation"));
}

std::vector<std::string> families_from(const std::string& family) {
  if (family.empty()) return relation_family_names();
  return {family};
}

OrderElement counterexample_omega() { return Order::o5()->basis_element(1); }

json cmd_counterexample() {
  const auto o5 = Order::o5();
  const auto o2 = Order::hurwitz();
  const OrderElement w = counterexample_omega();
  const OrderElement z = o5->zero();
  GenWord<OrderElement> lhs{o5->one(), {}};
  for (int k = 0; k < 2; ++k) lhs.push(GenToken<OrderElement>::elem(w.conj())).push(GenToken<OrderElement>::elem(w));
  GenWord<OrderElement> rhs{o5->one(), {GenToken<OrderElement>::elem(z), GenToken<OrderElement>::elem(z)}};
  auto f = [](const OrderElement& x) { return u_hom_f(x); };
  const auto flhs = transport(lhs, o2->one(), f);
  const auto frhs = transport(rhs, o2->one(), f);
  const auto image = eval_word(flhs);
  return json{{"omega", to_string(w)},
              {"omega_norm", to_string(w.norm())},
              {"relation", to_string(lhs) + " = " + to_string(rhs)},
              {"relation_holds_in_O5", eval_word(lhs) == eval_word(rhs)},
              {"image_relation", to_string(flhs) + " = " + to_string(frhs)},
              {"image_lhs", matrix_to_json(image)},
              {"image_rhs", matrix_to_json(eval_word(frhs))},
              {"image_holds_in_O2", image == eval_word(frhs)}};
}

json cmd_check_hom(const json& spec, const Globals& g) {
  RelationOptions opts;
  opts.seed = g.seed;
  if (spec.contains("budget")) opts.budget = spec.at("budget").get<std::size_t>();
  std::vector<std::string> families = relation_family_names();
  if (spec.contains("families")) families = spec.at("families").get<std::vector<std::string>>();
  json out = json::object();
  if (spec.contains("map")) {
    const std::string map = spec.at("map").get<std::string>();
    out["map"] = map;
    json per = json::array();
    bool ok = true;
    std::size_t checked = 0;
    auto record = [&](const std::string& fam, const HomResult& h) {
      json r = hom_to_json(h);
      r["family"] = fam;
      per.push_back(r);
      checked += h.checked;
      if (!h.ok && ok) {
        ok = false;
        out["witness"] = fam + ": " + h.witness;
      }
    };
    if (map == "phi") {
      const auto src = Order::by_name("Zsqrt:-3");
      const auto dst = Order::by_name("Imax:-11");
      for (const auto& f : families)
        record(f, check_hom_instances(relation_instances(src, f, opts), dst->one(),
                                      [](const OrderElement& x) { return phi_quadratic(x); }));
    } else if (map == "f") {
      for (const auto& f : families)
        record(f, check_hom_instances(relation_instances(Order::o5(), f, opts), Order::hurwitz()->one(),
                                      [](const OrderElement& x) { return u_hom_f(x); }));
    } else if (map == "n3quat") {
      const auto L = Order::lipschitz();
      const std::vector<OrderElement> units{L->basis_element(1), L->basis_element(2), L->basis_element(3)};
      for (const std::string kind : {"lemma53", "lemma54"}) {
        const Presentation p = builtin_presentation(kind, 4);
        record(kind, check_hom(p, lemma_model(kind, L->one(), units), L->one()));
      }
    } else if (map == "n3quat-inverse") {
      opts.de2_generator_form = true;
      const auto L = Order::lipschitz();
      auto lin = [](const OrderElement& x) { return CliffordElement::vector(4, x.coords()); };
      if (!spec.contains("families")) families = {"R1", "R2", "R3p", "R4", "R5", "alpha", "eq29", "DE2"};
      for (const auto& f : families)
        record(f, check_hom_instances(relation_instances(L, f, opts), CliffordElement::scalar(4, 1), lin));
    } else {
      throw InvalidArgument("unknown map '" + map + "' (phi, f, n3quat, n3quat-inverse)");
    }
    out["ok"] = ok;
    out["checked"] = checked;
    out["families"] = per;
    return out;
  }
  if (!spec.contains("presentation")) throw UsageError("check-hom spec needs \"map\" or \"presentation\"");
  const json& pj = spec.at("presentation");
  Presentation p = pj.is_string() && builtin_kind_known(pj.get<std::string>())
                       ? builtin_presentation(pj.get<std::string>(), spec.value("n", 1))
                       : parse_presentation_any(pj.is_string() ? pj.get<std::string>() : pj.dump());
  const json images = spec.value("images", json("identity"));
  if (images.is_string() && images.get<std::string>() == "identity") {
    if (!p.model) throw MissingModel("presentation has no matrix model to use as identity images");
    const auto one = CliffordElement::scalar(p.model->begin()->second.a.dimension(), 1);
    return hom_to_json(check_hom(p, *p.model, one));
  }
  const Context ctx = context_from(spec.value("ctx", std::string()), nullptr);
  return with_context(ctx, [&](const auto& one, const auto& parse) {
    using T = std::decay_t<decltype(one)>;
    MatrixModel<T> model;
    for (const auto& [gen, img] : images.items()) {
      if (img.is_string()) model.emplace(gen, eval_word(parse_word<T>(img.template get<std::string>(), one, parse)));
      else model.emplace(gen, matrix_from_json<T>(img, parse));
    }
    return hom_to_json(check_hom(p, model, one));
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Clifford-algebra and quaternion-order matrix groups", "gecliff"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.compact, "Compact single-line JSON output");
  app.add_option("--seed", g.seed, "Seed for sampled relation instances");
  app.add_option("--file", g.file, "Read the command input from a file");

  std::string ctx_flag, input, kind, presentation, split_kind = "lemma54", family, partition, spec;
  int n = 1, units_n = 0;
  bool integral = false;
  std::size_t budget = RelationOptions{}.budget;
  std::function<json()> action;

  auto input_opt = [&](CLI::App* s, const char* desc) { s->add_option("input", input, desc); };
  auto ctx_opt = [&](CLI::App* s) { s->add_option("--ctx", ctx_flag, "Context: gamma:<n>, Z, Zsqrt:-d, Imax:-d, lipschitz, hurwitz, O3, O5"); };

  auto* eval = app.add_subcommand("eval", "Evaluate a word in E, Einv, D and Diag tokens");
  ctx_opt(eval);
  input_opt(eval, "Word, e.g. \"E(i1) E(0)^-1 D(i1)\"");
  eval->callback([&] {
    action = [&] {
      const Context ctx = context_from(ctx_flag, nullptr);
      const std::string text = payload(g, input, "word");
      return with_context(ctx, [&](const auto& one, const auto& parse) {
        using T = std::decay_t<decltype(one)>;
        const auto w = parse_word<T>(text, one, parse);
        return json{{"ctx", ctx.name()}, {"word", to_string(w)}, {"matrix", matrix_to_json(eval_word(w))}};
      });
    };
  });

  auto* matmul = app.add_subcommand("matmul", "Multiply matrices left to right");
  ctx_opt(matmul);
  input_opt(matmul, "JSON {\"ctx\": ..., \"matrices\": [rows, rows, ...]}");
  matmul->callback([&] {
    action = [&] {
      const json j = parse_json(payload(g, input, "matrices"));
      const Context ctx = context_from(ctx_flag, &j);
      return with_context(ctx, [&](const auto& one, const auto& parse) {
        using T = std::decay_t<decltype(one)>;
        const json& ms = j.at("matrices");
        if (!ms.is_array() || ms.empty()) throw ParseError("\"matrices\" must be a nonempty array", 0);
        Matrix2<T> acc = mat_identity(one);
        for (const auto& m : ms) {
          Matrix2<T> x = matrix_from_json<T>(m, parse);
          require_consistent(x);
          acc = acc * x;
        }
        return json{{"ctx", ctx.name()}, {"matrix", matrix_to_json(acc)}};
      });
    };
  });

  auto* matinv = app.add_subcommand("matinv", "Invert a matrix");
  ctx_opt(matinv);
  input_opt(matinv, "JSON {\"ctx\": ..., \"rows\": [[a, b], [c, d]]}");
  matinv->callback([&] {
    action = [&] {
      const json j = parse_json(payload(g, input, "matrix"));
      const Context ctx = context_from(ctx_flag, &j);
      return with_context(ctx, [&](const auto& one, const auto& parse) {
        using T = std::decay_t<decltype(one)>;
        const Matrix2<T> m = matrix_from_json<T>(j, parse);
        return json{{"ctx", ctx.name()}, {"matrix", matrix_to_json(mat_inverse(m))}};
      });
    };
  });

  auto* member = app.add_subcommand("member", "Membership in Gamma_n, GL_2 or SL_+ / SL_2");
  ctx_opt(member);
  member->add_option("--kind", kind, "gamma | gl | slplus")->required()->check(CLI::IsMember({"gamma", "gl", "slplus"}));
  member->add_flag("--integral", integral, "Require integral coefficients");
  input_opt(member, "Element (gamma) or matrix JSON (gl, slplus)");
  member->callback([&] {
    action = [&]() -> json {
      const std::string text = payload(g, input, "input");
      if (kind == "gamma") {
        const Context ctx = context_from(ctx_flag, nullptr);
        if (!ctx.is_gamma()) throw InvalidArgument("--kind gamma needs a gamma:<n> context");
        const auto a = parse_clifford(text, ctx.gamma_n);
        return json{{"kind", kind}, {"element", to_string(a)}, {"member", gamma_membership(a, integral)}};
      }
      const json j = parse_json(text);
      const Context ctx = context_from(ctx_flag, &j);
      bool result = false;
      if (ctx.is_gamma()) {
        const auto m = matrix_from_json<CliffordElement>(j, clifford_parser(ctx.gamma_n));
        result = kind == "gl" ? gl_membership(m, integral) : slplus_membership(m, integral);
      } else {
        const auto m = matrix_from_json<OrderElement>(j, order_parser(ctx.order));
        result = kind == "gl" ? ring_gl_membership(m) : ring_sl_membership(m);
      }
      return json{{"kind", kind}, {"ctx", ctx.name()}, {"member", result}};
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "Write a matrix as a word in elementary and diagonal matrices");
  ctx_opt(decompose_cmd);
  input_opt(decompose_cmd, "Matrix JSON");
  decompose_cmd->callback([&] {
    action = [&] {
      const json j = parse_json(payload(g, input, "matrix"));
      const Context ctx = context_from(ctx_flag, &j);
      return with_context(ctx, [&](const auto& one, const auto& parse) {
        using T = std::decay_t<decltype(one)>;
        const Matrix2<T> m = matrix_from_json<T>(j, parse);
        DecompositionTrace trace;
        const auto w = decompose(m, &trace);
        json norms = json::array();
        for (const auto& q : trace.upper_right_norms) norms.push_back(to_string(q));
        return json{{"ctx", ctx.name()},
                    {"word", to_string(w)},
                    {"tokens", word_to_json(w)},
                    {"length", w.tokens.size()},
                    {"steps", trace.steps},
                    {"upper_right_norms", norms},
                    {"verified", eval_word(w) == m}};
      });
    };
  });

  auto* verify = app.add_subcommand("verify", "Check every relator of a builtin presentation in its matrix model");
  verify->add_option("--presentation", presentation, "lemma53 | lemma54 | sl2z-classic")->required();
  verify->add_option("--n", n, "Dimension n >= 1 (default 1)");
  verify->callback([&] {
    action = [&] {
      const Presentation p = builtin_presentation(presentation, n);
      const VerifyReport r = verify_presentation(p);
      return json{{"presentation", p.name}, {"pass", r.pass()}, {"relators_checked", r.checked}, {"failures", r.failures}};
    };
  });

  auto* relations = app.add_subcommand("relations", "Check relation families as matrix identities");
  ctx_opt(relations);
  relations->add_option("--family", family, "R1 | R2 | R3 | R3p | R4 | R5 | alpha | eq29 | DE2 (default: all)");
  relations->add_option("--budget", budget, "Instances per sampled family")->default_val(budget);
  relations->callback([&] {
    action = [&] {
      const Context ctx = context_from(ctx_flag, nullptr);
      RelationOptions opts;
      opts.seed = g.seed;
      opts.budget = budget;
      const auto fams = families_from(family);
      json j = ctx.is_gamma() ? family_reports(verify_relation_families(ctx.gamma_n, fams, opts))
                              : family_reports(verify_relation_families(ctx.order, fams, opts));
      j["ctx"] = ctx.name();
      return j;
    };
  });

  auto* abelianize = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  abelianize->add_option("--presentation", presentation, "Builtin kind; otherwise the input is a presentation");
  abelianize->add_option("--n", n, "Dimension n >= 1 (default 1)");
  input_opt(abelianize, "Presentation text or JSON");
  abelianize->callback([&] {
    action = [&] { return invariants_to_json(abelianization(presentation_from(g, presentation, n, input))); };
  });

  auto* split = app.add_subcommand("split", "Split a presentation along a generator partition");
  split->add_option("--presentation", split_kind, "Builtin kind (default lemma54)");
  split->add_option("--n", n, "Dimension n >= 1 (default 1)");
  split->add_option("--partition", partition, "JSON {\"A\": [...], \"B\": [...], \"C\": [...]}");
  split->callback([&] {
    action = [&] {
      const Presentation p = builtin_presentation(split_kind, n);
      const bool builtin_part = partition.empty();
      Partition part;
      if (builtin_part) {
        if (split_kind != "lemma54") throw UsageError("a --partition is required unless splitting lemma54");
        part = builtin_partition(n);
      } else {
        const json pj = parse_json(partition);
        for (const auto& x : pj.value("A", json::array())) part.a.insert(x.get<std::string>());
        for (const auto& x : pj.value("B", json::array())) part.b.insert(x.get<std::string>());
        for (const auto& x : pj.value("C", json::array())) part.c.insert(x.get<std::string>());
      }
      const AmalgamSplit s = amalgam_split(p, part);
      json j{{"presentation", p.name},
             {"partition", {{"A", s.partition.a}, {"B", s.partition.b}, {"C", s.partition.c}}},
             {"factor_ac", presentation_to_json(s.factor_ac)},
             {"factor_bc", presentation_to_json(s.factor_bc)},
             {"amalgamated_c", presentation_to_json(s.amalgamated_c)},
             {"factors_verified",
              verify_presentation(s.factor_ac).pass() && verify_presentation(s.factor_bc).pass()}};
      if (split_kind == "lemma54") j["c_matches_lemma54_n_minus_1"] = structurally_equal(s.amalgamated_c, expected_amalgamated(n));
      auto side_nonzero = [&](const std::set<std::string>& gens) {
        json per = json::object();
        bool any = false;
        for (const auto& x : gens) {
          const bool nz = !abelian_image_is_zero(p, {Letter{x, 1}});
          per[x] = nz;
          any = any || nz;
        }
        return json{{"nonzero", any}, {"generators", per}};
      };
      j["abelian_witness"] = {{"A_minus_C", side_nonzero(s.partition.a)}, {"B_minus_C", side_nonzero(s.partition.b)}};
      return j;
    };
  });

  auto* classify = app.add_subcommand("classify-order", "GE_2 classification and norm data of an order");
  ctx_opt(classify);
  classify->callback([&] {
    action = [&] {
      const Context ctx = context_from(ctx_flag, nullptr);
      if (ctx.is_gamma()) throw InvalidArgument("classify-order needs an order context");
      const auto units = unit_group(ctx.order);
      json j{{"ctx", ctx.name()},
             {"rank", ctx.order->rank()},
             {"quaternion", ctx.order->is_quaternion()},
             {"supports_decomposition", supports_decomposition(ctx.order)},
             {"discretely_normed", discretely_normed(ctx.order)},
             {"unit_count", units.order()},
             {"unit_abelianization", integers_to_json(units.abelianization().torsion)}};
      j["ge2"] = ctx.order->is_quaternion() ? json(nullptr) : json(to_string(ge2_classification(ctx.order)));
      return j;
    };
  });

  auto* units_cmd = app.add_subcommand("units", "Unit group of Gamma_n(Z) or of an order");
  units_cmd->add_option("--n", units_n, "Dimension n in 1..12");
  ctx_opt(units_cmd);
  units_cmd->callback([&] {
    action = [&] {
      json elems = json::array();
      if (!ctx_flag.empty() && parse_context(ctx_flag).order) {
        const auto grp = unit_group(parse_context(ctx_flag).order);
        for (const auto& u : grp.elements()) elems.push_back(to_string(u));
        const auto fp = grp.fingerprint();
        return json{{"ctx", ctx_flag},
                    {"order", fp.order},
                    {"exponent", fp.exponent},
                    {"center_order", fp.center_order},
                    {"abelianization", integers_to_json(fp.abelianization)},
                    {"elements", elems}};
      }
      int dim = units_n;
      if (!ctx_flag.empty()) dim = parse_context(ctx_flag).gamma_n;
      if (dim < 1) throw UsageError("units needs --n or --ctx");
      const UnitGroup ug = enumerate_units(dim);
      for (const auto& u : ug.elements) elems.push_back(to_string(u));
      return json{{"n", dim},
                  {"order", ug.fingerprint.order},
                  {"exponent", ug.fingerprint.exponent},
                  {"center_order", ug.fingerprint.center_order},
                  {"abelianization", integers_to_json(ug.fingerprint.abelianization)},
                  {"elements", elems}};
    };
  });

  auto* cex = app.add_subcommand("counterexample-o5", "Relation (alpha) in O5 and its image in O2");
  cex->callback([&] { action = [&] { return cmd_counterexample(); }; });

  auto* hom = app.add_subcommand("check-hom", "Check that generator images preserve every relator");
  hom->add_option("--spec", spec, "JSON spec (see README)");
  hom->callback([&] { action = [&] { return cmd_check_hom(parse_json(payload(g, spec, "spec")), g); }; });

  auto emit = [&](const json& j) { out << (g.compact ? j.dump() : j.dump(2)) << '\n'; };
  auto emit_error = [&](const std::string& kind_name, const std::string& message, const json& extra) {
    json e{{"kind", kind_name}, {"message", message}};
    for (const auto& [k, v] : extra.items()) e[k] = v;
    emit(json{{"error", e}});
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gecliff: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }
  if (!action) return 0;
  try {
    emit(action());
    return 0;
  } catch (const ParseError& e) {
    emit_error(e.kind(), e.what(), json{{"offset", e.offset()}});
    return 2;
  } catch (const RelatorCrossesFactors& e) {
    emit_error(e.kind(), e.what(), json{{"relator", e.relator()}});
    return 0;
  } catch (const Error& e) {
    emit_error(e.kind(), e.what(), json::object());
    return 0;
  } catch (const json::exception& e) {
    emit_error("ParseError", e.what(), json::object());
    return 2;
  } catch (const UsageError& e) {
    err << "gecliff: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace gecliff::tools
