#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include "nearprim/catalog.hpp"
#include "nearprim/error.hpp"
#include "nearprim/io.hpp"
#include "nearprim/primitivity.hpp"

namespace nearprim::cli {

namespace {

using io::json;

struct Options {
  std::size_t max_group_order = 12;
  std::size_t max_elements = 4096;
  bool json_out = false;
  bool sequential = false;
  std::uint64_t seed = 1;

  Limits limits() const {
    Limits l;
    l.max_elements = max_elements;
    l.max_group_order = std::max(l.max_group_order, max_group_order);
    return l;
  }
};

int exit_code(Errc code) {
  switch (code) {
    case Errc::resource_limit:
      return resource;
    case Errc::theorem_mismatch:
    case Errc::internal_inconsistency:
      return mismatch;
    default:
      return input_error;
  }
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw Error(Errc::invalid_argument, "cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return io::parse(text);
}

std::string join(std::span<const Element> xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << ']';
  return os.str();
}

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string level(bool one, bool two) {
  if (two) return "2-primitive";
  if (one) return "1-primitive, not 2-primitive";
  return "not 1-primitive";
}

/// A near-ring given either by a scheme document or by
/// {"group": ..., "annihilate": [...]}.
struct Loaded {
  std::shared_ptr<const NearRing> nearring;
  std::optional<SandwichScheme> scheme;
};

Loaded load_nearring(const json& doc, const Limits& limits) {
  if (doc.is_object() && doc.contains("annihilate")) {
    const FiniteGroup g = io::group_from_json(doc.at("group"));
    std::vector<Element> z;
    try {
      z = doc.at("annihilate").get<std::vector<Element>>();
    } catch (const json::exception& e) {
      throw Error(Errc::parse_error, std::string("annihilate: ") + e.what());
    }
    return {std::make_shared<const NearRing>(build_annihilating_nearring(g, ElementSet(z), limits)),
            std::nullopt};
  }
  SandwichScheme s = io::scheme_from_json(doc);
  return {std::make_shared<const NearRing>(enumerate_centralizer_nearring(s, limits)), std::move(s)};
}

int cmd_axioms(const Options& o, const std::string& path, std::ostream& out) {
  const Limits limits = o.limits();
  const auto loaded = load_nearring(read_json(path), limits);
  const auto& n = *loaded.nearring;
  const auto rep = verify_axioms(n, limits);
  const auto ring = check_ring(n);
  const auto ids = identities(n);
  if (o.json_out) {
    json j = io::to_json(rep);
    j["size"] = n.size();
    j["ring"] = ring.ring;
    j["ring_witness"] = ring.witness;
    j["two_sided_identity"] = ids.two_sided ? json(*ids.two_sided) : json(nullptr);
    j["right_identities"] = ids.right.size();
    out << j.dump() << '\n';
  } else {
    out << "|N| = " << n.size() << '\n'
        << "additive group: " << yes(rep.additive_group) << '\n'
        << "associative: " << yes(rep.mul_associative) << '\n'
        << "right distributive: " << yes(rep.right_distributive) << '\n'
        << "zero symmetric: " << yes(rep.zero_symmetric) << '\n'
        << "triples checked: " << rep.triples_checked << (rep.exhaustive ? " (all)" : " (sample)") << '\n'
        << "ring: " << yes(ring.ring) << '\n'
        << "identity: " << (ids.two_sided ? "two-sided" : ids.right.empty() ? "none" : "right only")
        << '\n';
    if (!rep.ok()) {
      out << "failure: " << rep.failure << " at (" << (*rep.witness)[0] << ", " << (*rep.witness)[1]
          << ", " << (*rep.witness)[2] << ")\n";
    }
  }
  return rep.ok() ? ok : mismatch;
}

int cmd_build_phi(const Options& o, const std::string& path, std::ostream& out) {
  const SandwichScheme s = build_phi(io::recipe_from_json(read_json(path)));
  if (o.json_out) {
    out << io::to_json(s).dump() << '\n';
  } else {
    out << "phi = " << join(s.phi) << "\nX = " << join(s.x().members()) << '\n';
  }
  return ok;
}

int cmd_build_nearring(const Options& o, const std::string& path, std::ostream& out) {
  const auto loaded = load_nearring(read_json(path), o.limits());
  const auto& n = *loaded.nearring;
  if (o.json_out) {
    out << io::to_json(n).dump() << '\n';
  } else {
    out << "|N| = " << n.size() << "\ndomain = " << join(n.domain())
        << "\ncoordinates = " << n.coordinates().size() << '\n';
  }
  return ok;
}

void print_verdict(const SandwichScheme& s, const PrimitivityVerdict& v, bool as_json, std::ostream& out) {
  if (as_json) {
    out << io::to_json(s, v).dump() << '\n';
    return;
  }
  out << level(v.one_primitive, v.two_primitive) << ", "
      << (v.identities.two_sided ? "identity" : "no identity") << ", |N|=" << v.nearring_size << '\n';
  if (v.ring) out << "ring: the theorems do not apply\n";
  if (v.theorem) {
    const auto& t = *v.theorem;
    out << "theorem: P " << (t.p.holds ? "holds" : "fails") << ", Gamma_0 subgroup-free "
        << yes(t.gamma0_subgroup_free) << " -> " << level(t.one_primitive, t.two_primitive) << '\n';
  }
  if (v.direct) {
    const auto& d = v.direct->types;
    out << "direct: faithful " << yes(d.faithful) << ", type 1 " << yes(d.type1) << ", type 2 "
        << yes(d.type2) << " -> " << level(v.direct->one_primitive, v.direct->two_primitive) << '\n';
    if (d.ideal_witness) out << "N-ideal: " << join(d.ideal_witness->members()) << '\n';
    if (d.subgroup_witness) out << "N-subgroup: " << join(d.subgroup_witness->members()) << '\n';
  }
  out << "agree: " << yes(v.agree) << '\n';
}

int cmd_classify(const Options& o, const std::string& path, std::ostream& out) {
  const SandwichScheme s = io::scheme_from_json(read_json(path));
  print_verdict(s, cross_check(s, o.limits()), o.json_out, out);
  return ok;
}

int cmd_embed(const Options& o, const std::string& path, std::ostream& out) {
  const Limits limits = o.limits();
  const auto loaded = load_nearring(read_json(path), limits);
  const NGroupAction a = loaded.scheme ? action_from_scheme(loaded.nearring, *loaded.scheme, limits)
                                       : action_from_transformation(loaded.nearring);
  const EmbedResult e = embed(a, limits);
  const bool dense = density_check(e.image, e.scheme, limits);
  if (o.json_out) {
    out << json{{"scheme", io::to_json(e.scheme)},
                {"pairing", e.pairing},
                {"dense", dense},
                {"pairs_checked", e.pairs_checked},
                {"exhaustive", e.exhaustive}}
               .dump()
        << '\n';
  } else {
    out << "phi = " << join(e.scheme.phi) << "\nX = " << join(e.scheme.x().members())
        << "\n|S| = " << e.scheme.s.size() << "\n|N| = " << e.pairing.size()
        << "\ndense: " << yes(dense) << '\n';
  }
  return dense ? ok : mismatch;
}

struct Job {
  std::string group;
  SandwichScheme scheme;
};

/// Census over groups, automorphism subgroups and canonical sandwich
/// functions. Lines are written in enumeration order.
int cmd_search(const Options& o, bool cyclic_only, std::size_t sample, std::ostream& out, std::ostream& err) {
  const Limits limits = o.limits();
  std::vector<NamedGroup> groups;
  try {
    groups = small_groups(o.max_group_order, cyclic_only);
  } catch (const Error& e) {
    err << "notice: " << e.what() << '\n';
    return resource;
  }

  std::optional<std::vector<char>> keep;
  if (sample > 0) {
    std::size_t total = 0;
    for (const auto& g : groups) {
      try {
        for (const auto& s : automorphism_subgroups(automorphism_group(g.group, limits))) {
          total += for_each_canonical_scheme(g.group, s, o.max_elements, [](const SandwichScheme&) {});
        }
      } catch (const Error&) {
      }
    }
    std::vector<std::size_t> all(total);
    for (std::size_t i = 0; i < total; ++i) all[i] = i;
    std::vector<std::size_t> chosen;
    std::mt19937_64 rng(o.seed);
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), sample, rng);
    keep.emplace(total, 0);
    for (std::size_t i : chosen) (*keep)[i] = 1;
  }

  const std::size_t workers = o.sequential ? 1 : std::max(1u, std::thread::hardware_concurrency());
  std::vector<Job> batch;
  int status = ok;
  auto flush = [&] {
    std::vector<std::string> lines(batch.size());
    auto work = [&](std::size_t w) {
      for (std::size_t i = w; i < batch.size(); i += workers) {
        try {
          const auto v = evaluate(batch[i].scheme, limits);
          json line{{"group", batch[i].group}, {"verdict", io::to_json(batch[i].scheme, v)}};
          lines[i] = line.dump();
        } catch (const Error& e) {
          lines[i] = std::string("!") + e.what();
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& l : lines) {
      if (!l.empty() && l[0] == '!') {
        err << "notice: skipped: " << l.substr(1) << '\n';
        continue;
      }
      const auto j = json::parse(l);
      const auto& v = j.at("verdict");
      if (v.at("applicable").get<bool>() && !v.at("agree").get<bool>()) status = mismatch;
      out << l << '\n';
    }
    batch.clear();
  };

  std::size_t index = 0;
  for (const auto& g : groups) {
    std::vector<AutomorphismSet> subs;
    try {
      subs = automorphism_subgroups(automorphism_group(g.group, limits));
    } catch (const Error& e) {
      err << "notice: skipped " << g.name << ": " << e.what() << '\n';
      continue;
    }
    for (const auto& s : subs) {
      for_each_canonical_scheme(g.group, s, o.max_elements, [&](const SandwichScheme& scheme) {
        if (!keep || (*keep)[index]) batch.push_back({g.name, scheme});
        ++index;
        if (batch.size() >= 64 * workers) flush();
      });
    }
  }
  flush();
  return status;
}

int cmd_paper_examples(const Options& o, const std::vector<std::string>& fixture_args, std::ostream& out) {
  Fixtures fixtures;
  for (const auto& f : fixture_args) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw Error(Errc::invalid_argument, "fixture must be name=path: " + f);
    fixtures.emplace_back(f.substr(0, eq), read_json(f.substr(eq + 1)));
  }
  const auto claims = paper_examples(fixtures, o.limits());
  const bool all = std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
  if (o.json_out) {
    json list = json::array();
    for (const auto& c : claims) {
      list.push_back({{"scenario", c.scenario}, {"claim", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    out << json{{"passed", all}, {"claims", list}}.dump() << '\n';
  } else {
    for (const auto& c : claims) {
      out << (c.passed ? "PASS " : "FAIL ") << c.scenario << ": " << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ')';
      out << '\n';
    }
  }
  return all ? ok : mismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite sandwich centralizer near-rings and their primitivity", "nearprim"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-group-order", o.max_group_order, "Largest group order for search")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-elements", o.max_elements, "Largest near-ring to materialize")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", o.json_out, "Machine-readable output");
  app.add_flag("--sequential", o.sequential, "Single worker");
  app.add_option("--seed", o.seed, "Seed for sampled searches");

  std::string path;
  auto* axioms = app.add_subcommand("axioms", "Check the near-ring axioms");
  axioms->add_option("file", path, "Scheme or annihilator document")->required();
  auto* build_phi_cmd = app.add_subcommand("build-phi", "Build a sandwich function from a recipe");
  build_phi_cmd->add_option("file", path, "Recipe document")->required();
  auto* build_nr = app.add_subcommand("build-nearring", "Dump a near-ring");
  build_nr->add_option("file", path, "Scheme or annihilator document")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Decide 1- and 2-primitivity both ways");
  classify_cmd->add_option("file", path, "Scheme document")->required();
  auto* embed_cmd = app.add_subcommand("embed", "Recover a scheme from a faithful type-1 action");
  embed_cmd->add_option("file", path, "Scheme or annihilator document")->required();
  bool cyclic_only = false;
  std::size_t sample = 0;
  auto* search = app.add_subcommand("search", "Stream a census of schemes as JSON lines");
  search->add_flag("--cyclic-only", cyclic_only, "Only cyclic groups");
  search->add_option("--sample", sample, "Classify a seeded random sample of this many schemes");
  std::vector<std::string> fixture_args;
  auto* examples = app.add_subcommand("paper-examples", "Run the four worked scenarios");
  examples->add_option("--fixture", fixture_args, "Override a scenario input: name=path");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }

  try {
    if (*axioms) return cmd_axioms(o, path, out);
    if (*build_phi_cmd) return cmd_build_phi(o, path, out);
    if (*build_nr) return cmd_build_nearring(o, path, out);
    if (*classify_cmd) return cmd_classify(o, path, out);
    if (*embed_cmd) return cmd_embed(o, path, out);
    if (*search) return cmd_search(o, cyclic_only, sample, out, err);
    if (*examples) return cmd_paper_examples(o, fixture_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  }
  return input_error;
}

}  // namespace nearprim::cli
