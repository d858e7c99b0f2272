#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rwb/rwb.h"

namespace {

using Json = nlohmann::ordered_json;

struct InputError {
  std::string message;
};

// A failure reported by the library, already in JSON form.
struct ApiError {
  rwb_status status;
  Json error;
};

class Session {
 public:
  Session() {
    if (rwb_context_new(&ctx_) != RWB_OK) throw std::runtime_error("cannot allocate a context");
  }
  ~Session() {
    for (rwb_object* o : objects_) rwb_object_free(o);
    rwb_context_free(ctx_);
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  rwb_context* ctx() const { return ctx_; }

  void check(rwb_status s) const {
    if (s == RWB_OK) return;
    Json err = Json::parse(rwb_last_error(ctx_), nullptr, false);
    if (err.is_discarded()) err = Json{{"error", "Internal"}, {"message", rwb_last_error(ctx_)}};
    throw ApiError{s, err};
  }

  void option(const char* key, std::uint64_t value) {
    check(rwb_context_set_option(ctx_, key, std::to_string(value).c_str()));
  }

  std::string read(const std::string& flag, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError{flag + ": cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    char hash[65];
    check(rwb_content_hash(text.data(), text.size(), hash));
    inputs_.push_back(Json{{"flag", flag}, {"path", path}, {"sha256", hash}});
    return text;
  }

  rwb_object* load(const std::string& flag, const std::string& path) {
    const std::string text = read(flag, path);
    rwb_object* obj = nullptr;
    const rwb_status s = rwb_object_load(ctx_, text.c_str(), &obj);
    if (s != RWB_OK) {
      Json err = Json::parse(rwb_last_error(ctx_), nullptr, false);
      err["message"] = flag + ": " + err.value("message", std::string());
      throw ApiError{s, err};
    }
    objects_.push_back(obj);
    return obj;
  }

  Json report(const std::function<rwb_status(rwb_report**)>& call) const {
    rwb_report* r = nullptr;
    check(call(&r));
    Json j = Json::parse(rwb_report_json(r));
    rwb_report_free(r);
    return j;
  }

  const Json& inputs() const { return inputs_; }

 private:
  rwb_context* ctx_ = nullptr;
  std::vector<rwb_object*> objects_;
  Json inputs_ = Json::array();
};

std::size_t parse_chain_budget(const std::string& text) {
  std::string s = text;
  if (s.rfind("n<=", 0) == 0) s = s.substr(3);
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos == s.size() && v > 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw InputError{"--budget: expected n<=M or M with M a positive integer, got '" + text + "'"};
}

void write_out(const std::string& path, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError{"--out: cannot write '" + path + "'"};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey workbench for finite M-sets, chains and rooted forests"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(rwb_version()));

  std::size_t threads = 1;
  std::string out_path;
  bool timing = false;
  std::size_t hom_cap = 1'000'000, e_cap = 1'000'000, r_cap = 100'000, exhaustive_cap = 64, certify_cap = 20;
  std::size_t samples = 2000, node_budget = 200'000'000;
  app.add_option("--threads", threads, "Worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the report here instead of standard output");
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");
  app.add_option("--hom-cap", hom_cap, "Largest hom-set materialized");
  app.add_option("--e-cap", e_cap, "Largest E(A) materialized");
  app.add_option("--r-cap", r_cap, "Largest hom(A, hat_E(omega_N)) materialized");
  app.add_option("--exhaustive-cap", exhaustive_cap, "Exhaustive arrow search only up to this many copies of A");
  app.add_option("--certify-cap", certify_cap, "Exhaustive transport certification up to this many copies of U");
  app.add_option("--samples", samples, "Random colorings tried beyond the exhaustive cap");
  app.add_option("--node-budget", node_budget, "Search nodes allowed per arrow check");

  std::string command;
  Json parameters = Json::object();
  std::function<Json(Session&)> action;

  // validate
  auto* validate = app.add_subcommand("validate", "Parse and validate one object");
  std::string v_path, v_flag;
  std::string v_kind;
  for (const char* kind : {"object", "mset", "monoid", "chain", "unary", "coalgebra", "forest"}) {
    validate->add_option_function<std::string>(
        std::string("--") + kind,
        [&, kind](const std::string& p) {
          if (!v_path.empty()) throw CLI::ValidationError("validate takes exactly one input file");
          v_path = p;
          v_kind = kind;
        },
        std::string("Input file (") + kind + ")");
  }
  validate->callback([&] {
    if (v_path.empty())
      throw CLI::RequiredError("one of --object, --mset, --monoid, --chain, --unary, --coalgebra, --forest");
    action = [&](Session& s) {
      rwb_object* o = s.load("--" + v_kind, v_path);
      const std::string kind = rwb_object_kind(o);
      const bool ok = v_kind == "object" || kind == v_kind || (v_kind == "mset" && kind == "ordered_mset");
      if (!ok) throw InputError{"--" + v_kind + ": file holds a " + kind};
      return s.report([&](rwb_report** r) { return rwb_validate(s.ctx(), o, r); });
    };
  });

  // laws
  auto* laws = app.add_subcommand("laws", "Check the comonad laws exhaustively on a small carrier");
  std::string l_functor, l_monoid;
  std::size_t l_size = 2;
  laws->add_option("--functor", l_functor, "monoid_action or duplicate_free_list")
      ->required()
      ->check(CLI::IsMember({"monoid_action", "duplicate_free_list"}));
  laws->add_option("--monoid", l_monoid, "Monoid file (monoid_action only)");
  laws->add_option("--size", l_size, "Carrier size");
  laws->callback([&] {
    parameters = Json{{"functor", l_functor}, {"size", l_size}, {"e_cap", e_cap}};
    action = [&](Session& s) {
      rwb_object* m = nullptr;
      if (l_functor == "monoid_action") {
        if (l_monoid.empty()) throw InputError{"--monoid: required for the monoid_action functor"};
        m = s.load("--monoid", l_monoid);
      }
      return s.report([&](rwb_report** r) { return rwb_laws(s.ctx(), l_functor.c_str(), m, l_size, r); });
    };
  });

  // arrow-check
  auto* arrow = app.add_subcommand("arrow-check", "Decide C -> (B)^A_{k,t}");
  std::string a_path, b_path, c_path, a_ctx;
  std::size_t a_k = 2, a_t = 1;
  std::uint64_t a_seed = 0;
  arrow->add_option("--A", a_path, "Object A")->required();
  arrow->add_option("--B", b_path, "Object B")->required();
  arrow->add_option("--C", c_path, "Object C")->required();
  arrow->add_option("-k", a_k, "Number of colors");
  arrow->add_option("-t", a_t, "Allowed colors on the copy of B");
  arrow->add_option("--ctx", a_ctx, "chains, msets, ordered_msets or forests (default: from A)");
  arrow->add_option("--seed", a_seed, "Seed for sampled colorings");
  arrow->callback([&] {
    parameters = Json{{"k", a_k},       {"t", a_t},           {"ctx", a_ctx.empty() ? Json(nullptr) : Json(a_ctx)},
                      {"seed", a_seed}, {"hom_cap", hom_cap}, {"exhaustive_cap", exhaustive_cap},
                      {"samples", samples}, {"node_budget", node_budget}};
    action = [&](Session& s) {
      s.option("seed", a_seed);
      rwb_object* a = s.load("--A", a_path);
      rwb_object* b = s.load("--B", b_path);
      rwb_object* c = s.load("--C", c_path);
      return s.report([&](rwb_report** r) { return rwb_arrow_check(s.ctx(), a, b, c, a_k, a_t, a_ctx.c_str(), r); });
    };
  });

  // degree-probe
  auto* probe = app.add_subcommand("degree-probe", "Bracket the small Ramsey degree of A");
  std::string p_path, p_ctx, p_budget = "small";
  std::uint64_t p_seed = 0;
  probe->add_option("--A", p_path, "Object A")->required();
  probe->add_option("--ctx", p_ctx, "chains, msets, ordered_msets or forests (default: from A)");
  probe->add_option("--budget", p_budget, "small or medium")->check(CLI::IsMember({"small", "medium"}));
  probe->add_option("--seed", p_seed, "Seed for sampled colorings");
  probe->callback([&] {
    parameters = Json{{"ctx", p_ctx.empty() ? Json(nullptr) : Json(p_ctx)},
                      {"budget", p_budget},
                      {"seed", p_seed},
                      {"hom_cap", hom_cap},
                      {"samples", samples},
                      {"node_budget", node_budget}};
    action = [&](Session& s) {
      s.option("seed", p_seed);
      rwb_object* a = s.load("--A", p_path);
      return s.report([&](rwb_report** r) { return rwb_degree_probe(s.ctx(), a, p_ctx.c_str(), p_budget.c_str(), r); });
    };
  });

  // transport
  auto* transport = app.add_subcommand("transport", "Transport a chain witness to hat_E(W)");
  std::string t_u, t_v, t_budget = "n<=8";
  std::size_t t_k = 2, t_truncate = 0;
  std::uint64_t t_seed = 0;
  transport->add_option("--U", t_u, "Ordered M-set U")->required();
  transport->add_option("--V", t_v, "Ordered M-set V")->required();
  transport->add_option("-k", t_k, "Number of colors");
  transport->add_option("--budget", t_budget, "Largest chain tried, as n<=M");
  transport->add_option("--truncate-N", t_truncate, "Also embed V into hat_E(omega_N)");
  transport->add_option("--seed", t_seed, "Seed for sampled colorings");
  transport->callback([&] {
    const std::size_t max_chain = parse_chain_budget(t_budget);
    parameters = Json{{"k", t_k},          {"max_chain", max_chain},     {"truncate_N", t_truncate},
                      {"seed", t_seed},    {"certify_cap", certify_cap}, {"exhaustive_cap", exhaustive_cap},
                      {"samples", samples}, {"hom_cap", hom_cap}};
    action = [&, max_chain](Session& s) {
      s.option("seed", t_seed);
      rwb_object* u = s.load("--U", t_u);
      rwb_object* v = s.load("--V", t_v);
      return s.report([&](rwb_report** r) { return rwb_transport(s.ctx(), u, v, t_k, max_chain, t_truncate, r); });
    };
  });

  // bigramsey
  auto* big = app.add_subcommand("bigramsey", "Reduce colorings of hom(A, hat_E(omega_N)) to few colors");
  std::string g_path, g_coloring;
  std::size_t g_n = 20, g_k = 2, g_trials = 1, g_inner = 0;
  std::uint64_t g_seed = 0;
  big->add_option("--A", g_path, "Ordered M-set, chain, or M-set (every ordering is run)")->required();
  big->add_option("--N", g_n, "Truncation omega_N");
  big->add_option("-k,--k", g_k, "Number of colors");
  big->add_option("--trials", g_trials, "Seeded random colorings");
  big->add_option("--seed", g_seed, "Seed of the first trial; trial i uses seed + i");
  big->add_option("--n-inner", g_inner, "Smallest chain a step may keep (default |A|)");
  big->add_option("--coloring", g_coloring, "Coloring file replacing the random trials");
  big->callback([&] {
    parameters = Json{{"N", g_n},          {"k", g_k},      {"trials", g_trials}, {"seed", g_seed},
                      {"N_inner", g_inner == 0 ? Json("|A|") : Json(g_inner)}, {"r_cap", r_cap},
                      {"hom_cap", hom_cap}};
    action = [&](Session& s) {
      rwb_object* a = s.load("--A", g_path);
      std::string coloring;
      if (!g_coloring.empty()) coloring = s.read("--coloring", g_coloring);
      return s.report([&](rwb_report** r) {
        return rwb_bigramsey(s.ctx(), a, g_n, g_k, g_trials, g_seed, g_inner,
                             g_coloring.empty() ? nullptr : coloring.c_str(), r);
      });
    };
  });

  // degree-bound
  auto* bound = app.add_subcommand("degree-bound", "Sum ordered degrees over the order fiber of A");
  std::string d_path, d_degrees;
  bound->add_option("--A", d_path, "M-set A")->required();
  bound->add_option("--ordered-degrees", d_degrees, "[{order, degree}, ...]")->required();
  bound->callback([&] {
    action = [&](Session& s) {
      rwb_object* a = s.load("--A", d_path);
      const std::string degrees = s.read("--ordered-degrees", d_degrees);
      return s.report([&](rwb_report** r) { return rwb_degree_bound(s.ctx(), a, degrees.c_str(), r); });
    };
  });

  // forest
  auto* forest = app.add_subcommand("forest", "Encode a rooted forest as a list coalgebra");
  std::string f_path;
  forest->add_option("--forest", f_path, "Forest file")->required();
  forest->callback([&] {
    action = [&](Session& s) {
      rwb_object* f = s.load("--forest", f_path);
      return s.report([&](rwb_report** r) { return rwb_forest(s.ctx(), f, r); });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Json report{{"command", command}, {"version", rwb_version()}};
  int code = 0;
  try {
    Session s;
    s.option("threads", threads);
    s.option("hom_cap", hom_cap);
    s.option("e_cap", e_cap);
    s.option("r_cap", r_cap);
    s.option("exhaustive_cap", exhaustive_cap);
    s.option("certify_cap", certify_cap);
    s.option("samples", samples);
    s.option("node_budget", node_budget);
    try {
      Json result = action(s);
      report["inputs"] = s.inputs();
      report["parameters"] = parameters;
      report["result"] = std::move(result);
    } catch (...) {
      report["inputs"] = s.inputs();
      report["parameters"] = parameters;
      throw;
    }
  } catch (const InputError& e) {
    report["error"] = Json{{"error", "InvalidArgument"}, {"message", e.message}, {"witness", Json::array()}};
    code = 1;
  } catch (const ApiError& e) {
    report["error"] = e.error;
    code = e.status == RWB_ERR_OVERFLOW ? 2 : e.status == RWB_ERR_INTERNAL ? 3 : 1;
  } catch (const std::exception& e) {
    report["error"] = Json{{"error", "Internal"}, {"message", e.what()}, {"witness", Json::array()}};
    code = 3;
  }
  if (timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report["timing"] = Json{{"wall_ms", ms}, {"threads", threads}};
  }
  if (report.contains("error"))
    std::cerr << "error: " << report["error"].value("error", std::string()) << ": "
              << report["error"].value("message", std::string()) << "\n";
  try {
    write_out(out_path, report);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << "\n";
    return 1;
  }
  return code;
}
