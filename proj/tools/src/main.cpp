// lienil: command-line front end.  Reads one JSON document (--input FILE,
// --input - for stdin, or --json TEXT), prints a JSON result or, with
// --pretty, a readable rendering ending in a verdict line for checks.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>

#include <CLI11.hpp>

#include "lienil_tools/commands.hpp"

using namespace lienil;
using namespace lienil::tools;

namespace {

struct Sources {
  std::string input_path;
  std::string inline_json;
};

Json load_input(const Sources& s) {
  if (!s.inline_json.empty()) return parse_json(s.inline_json);
  if (s.input_path.empty()) throw InvalidArgument("no input: pass --input FILE, --input - or --json TEXT");
  if (s.input_path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_json(text);
  }
  std::ifstream in(s.input_path);
  if (!in) throw InvalidArgument("cannot read " + s.input_path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_json(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supermatrix algebras, symmetric determinants and Cayley-Hamilton identities over Lie nilpotent rings"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Readable output instead of JSON");

  CommandOptions opts;
  Sources src;
  std::uint64_t seed = 0;
  std::map<CLI::App*, std::string> names;

  auto input_opts = [&](CLI::App* c) {
    auto* f = c->add_option("--input,-i", src.input_path, "Input JSON file, or - for stdin");
    auto* j = c->add_option("--json", src.inline_json, "Inline input JSON");
    f->excludes(j);
    c->add_flag("--pretty", pretty, "Readable output instead of JSON");
  };
  auto add = [&](CLI::App* parent, const std::string& name, const std::string& full, const std::string& help,
                 bool input = true) {
    CLI::App* c = parent->add_subcommand(name, help);
    names[c] = full;
    if (input) input_opts(c);
    return c;
  };

  CLI::App* trans = app.add_subcommand("transitive", "Transitive matrices");
  trans->require_subcommand(1);
  add(trans, "check", "transitive check", "Check t_ii = 1 and t_ij t_jk = t_ik (input: ring, T)");
  add(trans, "build", "transitive build", "T = [g_i g_j^-1] (input: ring, units)");
  add(trans, "blowup", "transitive blowup", "Blow up T along cuts (input: ring, T, cuts)");
  add(trans, "factor", "transitive factor", "Recover g_i = t_i1 (input: ring, T)");

  add(&app, "theta", "theta", "Theta_T(A) = T * A, or a counterexample (input: ring, T, A[, B])");
  add(&app, "sdet", "sdet", "Symmetric determinant (input: ring, A)");
  add(&app, "preadjoint", "preadjoint", "Preadjoint A* (input: ring, A)");
  for (const char* name : {"rdet", "ldet"}) {
    auto* c = add(&app, name, name, std::string(name) + "_(k) (input: ring, A)");
    c->add_option("--k", opts.k, "Depth k")->check(CLI::PositiveNumber);
  }
  {
    auto* c = add(&app, "charpoly", "charpoly", "k-th characteristic polynomial (input: ring, A)");
    c->add_option("--k", opts.k, "Depth k")->check(CLI::PositiveNumber);
    c->add_option("--side", opts.side, "right or left")->check(CLI::IsMember({"right", "left"}));
  }
  {
    auto* c = add(&app, "ch-check", "ch-check", "Cayley-Hamilton residual (input: ring, A)");
    c->add_option("--k", opts.k, "Depth k")->check(CLI::PositiveNumber);
    c->add_option("--side", opts.side, "right or left")->check(CLI::IsMember({"right", "left"}));
  }
  for (const char* name : {"embed", "conditions", "membership"}) {
    std::string help = std::string(name) == "embed"        ? "delta-bar(r) (input: ring, delta, r[, T])"
                       : std::string(name) == "conditions" ? "Embedding conditions (input: ring, delta[, T])"
                                                           : "Supermatrix membership (input: ring, delta, T, A)";
    auto* c = add(&app, name, name, help);
    c->add_option("--n", opts.n, "Size n of P^(e) when no T is given");
    c->add_option("--root", opts.root, "Order of the root of unity e (default n)");
  }
  {
    auto* c = add(&app, "sample", "sample", "Random supermatrix (input: ring, delta, T; or --example)");
    c->add_option("--seed", seed, "Seed")->required();
    c->add_option("--example", opts.example, "5.1, 5.2 or 5.3 instead of an input document");
    c->add_option("--n", opts.n, "Example size");
    c->add_option("--d", opts.d, "Example block cut");
    c->add_option("--g", opts.g, "Generators");
  }
  {
    auto* c = add(&app, "integrality", "integrality", "Monic certificate over Fix(delta) (input: ring, delta, r)");
    c->add_option("--n", opts.n, "Order n of delta");
    c->add_option("--k", opts.k, "Lie nilpotency index k")->check(CLI::PositiveNumber);
  }
  {
    auto* c = add(&app, "example", "example", "Worked example algebra and its shape", false);
    c->add_option("name", opts.example, "5.1, 5.2 or 5.3")->required()->check(CLI::IsMember({"5.1", "5.2", "5.3"}));
    c->add_option("--n", opts.n, "Size");
    c->add_option("--d", opts.d, "Block cut");
    c->add_option("--g", opts.g, "Generators");
    c->add_flag("--pretty", pretty, "Readable output instead of JSON");
  }
  {
    auto* c = add(&app, "reproduce", "reproduce", "Run the acceptance suite", false);
    c->add_option("--seed", seed, "Master seed");
    c->add_option("--threads", opts.threads, "Worker threads");
    c->add_flag("--timings", opts.timings, "Include wall-clock timings in the report");
    c->add_flag("--pretty", pretty, "Readable output instead of JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInvalidInput;
  }

  std::string command;
  CLI::App* leaf = nullptr;
  for (CLI::App* c = &app; c; ) {
    auto subs = c->get_subcommands();
    if (subs.empty()) break;
    leaf = c = subs.front();
  }
  command = names.at(leaf);

  try {
    if (!src.inline_json.empty() || !src.input_path.empty()) opts.input = load_input(src);
    if (auto* s = leaf->get_option_no_throw("--seed"); s && s->count()) opts.seed = seed;
    if (opts.input.is_null() && command != "example" && command != "reproduce" &&
        !(command == "sample" && !opts.example.empty()))
      opts.input = load_input(src);
    CommandResult r = run_command(command, opts);
    if (pretty)
      std::cout << r.text;
    else
      std::cout << r.doc.dump(2) << "\n";
    return r.exit_code;
  } catch (const std::exception& e) {
    Json err = {{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return exit_code_for(e);
  }
}
