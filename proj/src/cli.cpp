#include "idemlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "idemlab/campaign.hpp"
#include "idemlab/error.hpp"
#include "idemlab/hindman.hpp"
#include "idemlab/schema.hpp"
#include "idemlab/search.hpp"
#include "idemlab/subalgebra.hpp"
#include "idemlab/term.hpp"
#include "idemlab/ultrafilter.hpp"

namespace idemlab {

  Algebra load_algebra(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read algebra file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str());
  }

  namespace {

    using nlohmann::json;

    // Human-readable rendering of a report: one "key: value" per line,
    // multi-line strings (algebra tables) as indented blocks.
    void pretty(json const& j, std::ostream& out, int indent) {
      std::string const pad(indent, ' ');
      auto scalar = [](json const& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
      };
      for (auto it = j.begin(); it != j.end(); ++it) {
        std::string const key = j.is_object() ? it.key() + ":" : "-";
        json const&       v   = *it;
        bool const        flat_array
            = v.is_array()
              && std::none_of(v.begin(), v.end(), [](json const& e) {
                   return e.is_structured();
                 });
        if (v.is_object() || (v.is_array() && !flat_array)) {
          out << pad << key << '\n';
          pretty(v, out, indent + 2);
        } else if (v.is_string()
                   && v.get<std::string>().find('\n') != std::string::npos) {
          out << pad << key << '\n';
          std::istringstream lines(v.get<std::string>());
          for (std::string line; std::getline(lines, line);) {
            out << pad << "    " << line << '\n';
          }
        } else {
          out << pad << key << ' ' << scalar(v) << '\n';
        }
      }
    }

    struct Output {
      std::ostream& out;
      bool          pretty_mode = false;

      void emit(json const& j) const {
        if (pretty_mode) {
          pretty(j, out, 0);
        } else {
          out << j.dump(2) << '\n';
        }
      }
    };

    json assignment_json(std::optional<Assignment> const& w) {
      if (!w) {
        return nullptr;
      }
      json j = json::object();
      for (auto const& [v, e] : *w) {
        j[std::string(1, v)] = e;
      }
      return j;
    }

    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> parts;
      std::string              cur;
      std::istringstream       in(text);
      while (std::getline(in, cur, sep)) {
        cur.erase(0, cur.find_first_not_of(" \t"));
        cur.erase(cur.find_last_not_of(" \t") + 1);
        if (!cur.empty()) {
          parts.push_back(cur);
        }
      }
      return parts;
    }

    std::vector<std::uint64_t> parse_list(std::string const& text) {
      std::vector<std::uint64_t> out;
      for (auto const& part : split(text, ',')) {
        if (part.find_first_not_of("0123456789") != std::string::npos) {
          throw InvalidArgumentError("expected comma-separated integers, found '"
                                     + part + "'");
        }
        out.push_back(std::stoull(part));
      }
      return out;
    }

    OpSymbol parse_op(std::string const& s) {
      if (s == "*" || s == "\xC2\xB7") {
        return mul;
      }
      if (s == "+") {
        return add;
      }
      throw InvalidArgumentError("unknown operation symbol '" + s + "'");
    }

    Element parse_element(Algebra const& a, std::uint64_t e) {
      if (e >= a.size()) {
        throw InvalidArgumentError("element " + std::to_string(e)
                                   + " outside the carrier");
      }
      return static_cast<Element>(e);
    }

    int status_code(bool pass) {
      return pass ? exit_pass : exit_fail;
    }

    struct Options {
      bool        pretty     = false;
      bool        timing     = false;
      std::size_t workers    = 1;
      std::size_t cap        = 4;

      // term
      std::string term, var, assign;
      // shared
      std::string algebra_path, op = "*";
      // check
      std::string identity, quasi, property;
      // idempotents / minimal
      std::optional<std::uint64_t> power, left_image, stabilizer;
      std::string                  closure_seed;
      bool                         all_subuniverses = false;
      // schema
      bool        list = false;
      std::string builtin, schema_text;
      // search
      std::size_t              min_order = 1, max_order = 3;
      std::string              ops       = "*";
      std::vector<std::string> constraints, preconditions;
      bool                     left_semiring = false;
      std::string              target        = "verify";
      // campaign
      std::string campaign, out_dir = "reports";
      bool        no_write = false;
      // hindman
      std::string              elements, part;
      std::vector<std::string> classes;
      std::size_t              length = 2, colors = 2, max_n = 24;
      std::uint64_t            bound    = 0;
      bool                     products = false;
    };

    int cmd_term_parse(Options const& o, std::ostream& out) {
      out << render_term(parse_term(o.term)) << '\n';
      return exit_pass;
    }

    int cmd_term_rightmost(Options const& o, std::ostream& out) {
      if (o.var.size() != 1 || o.var[0] < 'a' || o.var[0] > 'z') {
        throw InvalidArgumentError("--var must be a single lowercase letter");
      }
      bool const r = is_rightmost(parse_term(o.term), o.var[0]);
      out << (r ? "true" : "false") << '\n';
      return status_code(r);
    }

    int cmd_term_eval(Options const& o, std::ostream& out) {
      Algebra const a = load_algebra(o.algebra_path);
      Assignment    asg;
      for (auto const& item : split(o.assign, ',')) {
        auto const eq = item.find('=');
        if (eq != 1 || item[0] < 'a' || item[0] > 'z') {
          throw InvalidArgumentError("expected v=<element>, found '" + item
                                     + "'");
        }
        asg[item[0]] = parse_element(a, parse_list(item.substr(2)).at(0));
      }
      out << evaluate(parse_term(o.term), a, asg) << '\n';
      return exit_pass;
    }

    int cmd_check(Options const& o, Output const& out) {
      Algebra const a = load_algebra(o.algebra_path);
      json          j;
      bool          holds = false;
      if (!o.identity.empty()) {
        Identity const id = parse_identity(o.identity);
        Verdict const  v  = check_identity(a, id);
        holds             = v.holds;
        j = {{"identity", render(id)}, {"witness", assignment_json(v.witness)}};
      } else if (!o.quasi.empty()) {
        QuasiIdentity const q = parse_quasi_identity(o.quasi);
        Verdict const       v = satisfies_quasi_identity(a, q);
        holds                 = v.holds;
        j = {{"quasi_identity", render(q)},
             {"witness", assignment_json(v.witness)}};
      } else if (!o.property.empty()) {
        holds = property_by_name(o.property).test(a);
        j     = {{"property", o.property}};
      } else {
        throw InvalidArgumentError(
            "check needs --identity, --quasi or --property");
      }
      j["holds"]  = holds;
      j["status"] = holds ? "pass" : "fail";
      out.emit(j);
      return status_code(holds);
    }

    int cmd_idempotents(Options const& o, Output const& out) {
      Algebra const a      = load_algebra(o.algebra_path);
      auto const    report = idempotent_report(a);
      json          per    = json::object();
      for (auto const& [op, set] : report.per_symbol) {
        per[std::string(1, op)] = set;
      }
      json j = {{"carrier", a.size()},
                {"idempotents", per},
                {"common", report.common}};
      if (o.power) {
        OpSymbol const op = parse_op(o.op);
        Element const  x  = parse_element(a, *o.power);
        j["power"] = {{"op", o.op},
                      {"element", x},
                      {"idempotent_power", find_idempotent_power(a, op, x)}};
      }
      out.emit(j);
      return exit_pass;
    }

    json sub_json(std::vector<SubUniverse> const& subs) {
      json arr = json::array();
      for (auto const& s : subs) {
        arr.push_back(s.members);
      }
      return arr;
    }

    json set_json(ElementSet const& s) {
      return {{"members", s.members}, {"closed", s.closed}};
    }

    int cmd_minimal(Options const& o, Output const& out) {
      Algebra const a = load_algebra(o.algebra_path);
      json          j = {{"carrier", a.size()},
                         {"is_minimal", is_minimal(a)},
                         {"minimal_subuniverses",
                          sub_json(minimal_subuniverses(a))}};
      if (!o.closure_seed.empty()) {
        std::vector<Element> seed;
        for (auto e : parse_list(o.closure_seed)) {
          seed.push_back(parse_element(a, e));
        }
        j["closure"] = closure(a, seed).members;
      }
      if (o.left_image) {
        j["left_image"] = set_json(
            left_image(a, parse_op(o.op), parse_element(a, *o.left_image)));
      }
      if (o.stabilizer) {
        j["left_stabilizer"] = set_json(left_stabilizer(
            a, parse_op(o.op), parse_element(a, *o.stabilizer)));
      }
      if (o.all_subuniverses) {
        j["all_subuniverses"] = sub_json(all_subuniverses(a));
      }
      out.emit(j);
      return exit_pass;
    }

    json condition_json(ConditionResult const& r) {
      return {{"status", to_string(r.status)},
              {"witness", assignment_json(r.witness)}};
    }

    int cmd_schema(Options const& o, Output const& out) {
      if (o.list) {
        json j = json::object();
        for (auto const& [name, sch] : builtin_schemas()) {
          j[name] = render_schema(sch);
        }
        out.emit(j);
        return exit_pass;
      }
      EllisSchema const sch = !o.builtin.empty() ? builtin_schema(o.builtin)
                              : !o.schema_text.empty()
                                  ? parse_schema(o.schema_text)
                                  : throw InvalidArgumentError(
                                      "schema needs --list, --builtin or "
                                      "--schema");
      auto const valid = validate_schema(sch);
      json       j     = {{"schema", render_schema(sch)},
                          {"valid", valid.ok()},
                          {"violations", valid.violations}};
      if (!valid.ok() || o.algebra_path.empty()) {
        j["status"] = valid.ok() ? "pass" : "fail";
        out.emit(j);
        return status_code(valid.ok());
      }
      Algebra const a = load_algebra(o.algebra_path);
      j["condition_one"] = condition_json(check_condition_one(a, sch));
      j["condition_two"] = condition_json(check_condition_two(a, sch));
      bool ok            = true;
      try {
        Element const e     = predict_idempotent(a, sch);
        j["idempotent"]     = e;
      } catch (HypothesisFailsError const& e) {
        ok                  = false;
        j["idempotent"]     = nullptr;
        j["hypothesis"]     = e.what();
      }
      j["status"] = ok ? "pass" : "fail";
      out.emit(j);
      return status_code(ok);
    }

    int cmd_search(Options const& o, Output const& out) {
      SearchSpec spec;
      spec.min_order      = o.min_order;
      spec.max_order      = o.max_order;
      spec.signature      = Signature(o.left_semiring ? "*+" : o.ops);
      spec.workers        = o.workers;
      spec.caps.max_order = o.cap;
      if (o.left_semiring) {
        spec.constraints = left_semiring_constraints();
      }
      for (auto const& c : o.constraints) {
        spec.constraints.push_back(parse_quasi_identity(c));
      }
      for (auto const& p : o.preconditions) {
        spec.preconditions.push_back(property_by_name(p));
      }
      if (o.property.empty()) {
        throw InvalidArgumentError("search needs --property");
      }
      spec.property = property_by_name(o.property);
      if (o.target == "verify") {
        spec.target = Target::verify;
      } else if (o.target == "counterexample") {
        spec.target = Target::counterexample;
      } else {
        throw InvalidArgumentError("--target must be verify or counterexample");
      }
      auto const report = run_search(spec);
      out.emit({{"spec", to_json(spec)}, {"result", to_json(report, o.timing)}});
      return status_code(report.pass);
    }

    int cmd_campaign(Options const& o, Output const& out, std::ostream& err) {
      if (o.max_order > o.cap) {
        throw CapExceededError("order " + std::to_string(o.max_order)
                               + " exceeds the cap " + std::to_string(o.cap));
      }
      CampaignOptions opt;
      opt.max_order = o.max_order;
      opt.workers   = o.workers;
      opt.timing    = o.timing;
      auto report   = run_campaign(o.campaign, opt);
      json doc      = report.body;
      doc["status"] = report.pass ? "pass" : "fail";
      if (!o.no_write) {
        auto path = write_campaign_report(report, o.out_dir);
        err << "report written to " << path.string() << '\n';
      }
      out.emit(doc);
      return status_code(report.pass);
    }

    int cmd_ultrafilter(Options const& o, Output const& out) {
      Algebra const a = load_algebra(o.algebra_path);
      std::vector<OpSymbol> ops;
      if (o.op.empty() || o.op == "all") {
        for (auto const& kv : a.tables()) {
          ops.push_back(kv.first);
        }
      } else {
        ops.push_back(parse_op(o.op));
      }
      json reports = json::array();
      bool ok      = true;
      for (OpSymbol op : ops) {
        auto const r = check_extension_laws(a, op);
        ok           = ok && r.ok();
        reports.push_back(to_json(r));
      }
      out.emit({{"extensions", reports}, {"status", ok ? "pass" : "fail"}});
      return status_code(ok);
    }

    int cmd_hindman(std::string const& verb,
                    Options const&     o,
                    Output const&      out) {
      using namespace hindman;
      Combine const combine = o.products ? Combine::product : Combine::sum;
      if (verb == "fs") {
        FSInstance const xs(parse_list(o.elements));
        out.emit({{"elements", xs.elements()},
                  {"combine", to_string(combine)},
                  {"finite_combinations", finite_combinations(xs, combine)}});
        return exit_pass;
      }
      if (verb == "witness") {
        auto const    part  = parse_list(o.part);
        std::uint64_t bound = o.bound;
        if (bound == 0 && !part.empty()) {
          bound = *std::max_element(part.begin(), part.end());
        }
        auto const w = find_fs_witness(part, o.length, bound, combine);
        out.emit({{"part", part},
                  {"length", o.length},
                  {"combine", to_string(combine)},
                  {"witness", w ? json(w->elements()) : json(nullptr)},
                  {"status", w ? "pass" : "fail"}});
        return status_code(w.has_value());
      }
      if (verb == "partition") {
        std::vector<std::vector<Integer>> classes;
        for (auto const& c : o.classes) {
          classes.push_back(parse_list(c));
        }
        auto const coloring = Coloring::from_classes(classes);
        auto const report   = check_partition(coloring, o.length, combine);
        json       j        = to_json(report, o.length, combine);
        bool const any      = j["monochromatic_witness"].get<bool>();
        j["status"]         = any ? "pass" : "fail";
        out.emit(j);
        return status_code(any);
      }
      if (verb == "forcing") {
        std::size_t const n = min_n_forcing(o.colors, o.length, o.max_n);
        json              j = {{"colors", o.colors},
                               {"length", o.length},
                               {"convention", "finite sums of distinct elements"},
                               {"min_n", n}};
        if (n > 1) {
          auto const avoider = find_avoiding_coloring(o.colors, o.length, n - 1);
          json       classes = json::array();
          for (int c = 0; c < avoider->colors(); ++c) {
            classes.push_back(avoider->members(c));
          }
          j["avoider_below"] = {{"n", n - 1}, {"classes", classes}};
        }
        out.emit(j);
        return exit_pass;
      }
      throw InvalidArgumentError("unknown hindman command");
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    Options  o;
    CLI::App app{"idemlab: finite algebra workbench for idempotent existence",
                 "idemlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", o.pretty, "Human-readable output instead of JSON");
    app.add_flag("--timing", o.timing, "Include wall time in search reports");
    app.add_option("--workers", o.workers, "Worker threads for searches")
        ->envname("IDEMLAB_WORKERS")
        ->check(CLI::Range(1, 256));
    app.add_option("--cap", o.cap, "Largest order a search may reach")
        ->envname("IDEMLAB_MAX_ORDER")
        ->check(CLI::Range(1, 6));

    auto* term = app.add_subcommand("term", "Parse terms and test occurrences");
    term->require_subcommand(1);
    auto* tparse = term->add_subcommand("parse", "Print the canonical form");
    tparse->add_option("--term", o.term)->required();
    auto* trm = term->add_subcommand("rightmost",
                                     "Is the variable right-most in the term");
    trm->add_option("--term", o.term)->required();
    trm->add_option("--var", o.var)->required();
    auto* teval = term->add_subcommand("eval", "Evaluate a term in an algebra");
    teval->add_option("--term", o.term)->required();
    teval->add_option("--algebra", o.algebra_path)->required();
    teval->add_option("--assign", o.assign, "e.g. x=0,y=1");

    auto* check = app.add_subcommand(
        "check", "Check an identity, quasi-identity or property");
    check->add_option("--algebra", o.algebra_path)->required();
    check->add_option("--identity", o.identity, "\"LHS = RHS\"");
    check->add_option("--quasi", o.quasi, "\"P1 & P2 -> C\"");
    check->add_option("--property", o.property, "Named property");

    auto* idem = app.add_subcommand("idempotents", "List idempotents");
    idem->add_option("--algebra", o.algebra_path)->required();
    idem->add_option("--op", o.op, "Operation for --power");
    idem->add_option("--power", o.power,
                     "Idempotent power of this element (associative op)");

    auto* minimal = app.add_subcommand("minimal", "Subuniverses and minimality");
    minimal->add_option("--algebra", o.algebra_path)->required();
    minimal->add_option("--op", o.op, "Operation for left image / stabilizer");
    minimal->add_option("--closure", o.closure_seed, "Seed, e.g. 0,2");
    minimal->add_option("--left-image", o.left_image);
    minimal->add_option("--stabilizer", o.stabilizer);
    minimal->add_flag("--all", o.all_subuniverses,
                      "List every subuniverse (order <= 4)");

    auto* schema = app.add_subcommand("schema", "Idempotent-existence schemas");
    schema->add_flag("--list", o.list, "Print the builtin catalog");
    schema->add_option("--builtin", o.builtin);
    schema->add_option("--schema", o.schema_text,
                       "\"r = <term>; s = <term>; t = <term>|none; product = "
                       "<symbol>\"");
    schema->add_option("--algebra", o.algebra_path);

    auto* search = app.add_subcommand("search", "Enumerate algebras up to "
                                                "isomorphism and check a "
                                                "property");
    search->add_option("--min-order", o.min_order)->check(CLI::Range(1, 6));
    search->add_option("--max-order", o.max_order)->check(CLI::Range(1, 6));
    search->add_option("--ops", o.ops, "Operation symbols, e.g. '*' or '*+'");
    search->add_flag("--left-semiring", o.left_semiring,
                     "Add the left semiring constraints over * and +");
    search->add_option("--constraint", o.constraints,
                       "Identity or quasi-identity (repeatable)");
    search->add_option("--require", o.preconditions,
                       "Precondition property (repeatable)");
    search->add_option("--property", o.property)->required();
    search->add_option("--target", o.target, "verify | counterexample");

    auto* campaign = app.add_subcommand("campaign", "Run a named campaign");
    campaign->add_option("name", o.campaign)
        ->required()
        ->check(CLI::IsMember(campaign_names()));
    campaign->add_option("--max-order", o.max_order)->check(CLI::Range(1, 6));
    campaign->add_option("--out-dir", o.out_dir, "Report directory");
    campaign->add_flag("--no-write", o.no_write, "Do not write a report file");

    auto* ultra = app.add_subcommand(
        "ultrafilter", "Extend operations to ultrafilters on the carrier");
    ultra->add_option("--algebra", o.algebra_path)->required();
    ultra->add_option("--op", o.op, "Symbol or 'all'");

    auto* hind = app.add_subcommand("hindman", "Finite sums and partitions");
    hind->require_subcommand(1);
    auto* hfs = hind->add_subcommand("fs", "Finite sums of an instance");
    hfs->add_option("--elements", o.elements, "e.g. 1,2,4")->required();
    hfs->add_flag("--products", o.products);
    auto* hw = hind->add_subcommand("witness", "Find a witness in a set");
    hw->add_option("--part", o.part)->required();
    hw->add_option("--length", o.length);
    hw->add_option("--bound", o.bound);
    hw->add_flag("--products", o.products);
    auto* hp = hind->add_subcommand("partition", "Check every color class");
    hp->add_option("--class", o.classes, "Comma-separated class (repeatable)")
        ->required();
    hp->add_option("--length", o.length);
    hp->add_flag("--products", o.products);
    auto* hf = hind->add_subcommand("forcing", "Least n forcing a witness");
    hf->add_option("--colors", o.colors);
    hf->add_option("--length", o.length);
    hf->add_option("--max-n", o.max_n);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return exit_pass;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return exit_pass;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n\n" << app.help();
      return exit_usage;
    }

    Output const output{out, o.pretty};
    try {
      if (*term) {
        if (*tparse) {
          return cmd_term_parse(o, out);
        }
        if (*trm) {
          return cmd_term_rightmost(o, out);
        }
        return cmd_term_eval(o, out);
      }
      if (*check) {
        return cmd_check(o, output);
      }
      if (*idem) {
        return cmd_idempotents(o, output);
      }
      if (*minimal) {
        return cmd_minimal(o, output);
      }
      if (*schema) {
        return cmd_schema(o, output);
      }
      if (*search) {
        return cmd_search(o, output);
      }
      if (*campaign) {
        return cmd_campaign(o, output, err);
      }
      if (*ultra) {
        if (!ultra->count("--op")) {
          o.op = "all";
        }
        return cmd_ultrafilter(o, output);
      }
      for (auto const* sub : {hfs, hw, hp, hf}) {
        if (*sub) {
          return cmd_hindman(sub->get_name(), o, output);
        }
      }
    } catch (HypothesisFailsError const& e) {
      err << "error: " << e.what() << '\n';
      return exit_fail;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    } catch (std::out_of_range const& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
    err << app.help();
    return exit_usage;
  }

}  // namespace idemlab
