#include "idemlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

#include "idemlab/error.hpp"
#include "idemlab/subalgebra.hpp"

namespace idemlab {

  ////////////////////////////////////////////////////////////////////////////
  // Properties
  ////////////////////////////////////////////////////////////////////////////

  namespace {
    OpSymbol main_op(Algebra const& a) {
      return a.has(mul) ? mul : a.signature().symbols().front();
    }

    bool subset(std::vector<Element> const& s, std::vector<Element> const& t) {
      return std::includes(t.begin(), t.end(), s.begin(), s.end());
    }

    std::map<std::string, std::function<bool(Algebra const&)>> const&
    named_properties() {
      static std::map<std::string, std::function<bool(Algebra const&)>> const
          props = {
              {"has-idempotent",
               [](Algebra const& a) {
                 return !idempotents(a, main_op(a)).empty();
               }},
              {"has-common-idempotent",
               [](Algebra const& a) { return !common_idempotents(a).empty(); }},
              {"is-minimal", [](Algebra const& a) { return is_minimal(a); }},
              {"not-minimal", [](Algebra const& a) { return !is_minimal(a); }},
              {"is-singleton",
               [](Algebra const& a) { return a.size() == 1; }},
              {"is-left-semiring",
               [](Algebra const& a) { return is_left_semiring(a); }},
              {"add-idem-subset-of-mult-idem",
               [](Algebra const& a) {
                 return subset(idempotents(a, add), idempotents(a, mul));
               }},
              {"mult-idem-subset-of-add-idem",
               [](Algebra const& a) {
                 return subset(idempotents(a, mul), idempotents(a, add));
               }},
          };
    return props;
    }
  }  // namespace

  Property condition_property(std::string name, EllisSchema schema, int which) {
    if (which != 1 && which != 2) {
      throw InvalidArgumentError("condition must be 1 or 2");
    }
    if (which == 2 && !schema.t) {
      throw InvalidArgumentError("schema makes no claim about condition two");
    }
    auto const valid = validate_schema(schema);
    if (!valid.ok()) {
      throw InvalidArgumentError("invalid schema: " + valid.violations.front());
    }
    return Property{std::move(name),
                    [schema = std::move(schema), which](Algebra const& a) {
                      auto r = which == 1 ? check_condition_one(a, schema)
                                          : check_condition_two(a, schema);
                      return r.status == ConditionStatus::holds;
                    }};
  }

  Property property_by_name(std::string_view name) {
    auto const& props = named_properties();
    if (auto it = props.find(std::string(name)); it != props.end()) {
      return Property{it->first, it->second};
    }
    for (auto [prefix, which] : {std::pair<std::string_view, int>{"condition-one:", 1},
                                 {"condition-two:", 2}}) {
      if (name.substr(0, prefix.size()) == prefix) {
        return condition_property(std::string(name),
                                  builtin_schema(name.substr(prefix.size())),
                                  which);
      }
    }
    throw InvalidArgumentError("unknown property '" + std::string(name) + "'");
  }

  std::vector<std::string> property_names() {
    std::vector<std::string> names;
    for (auto const& kv : named_properties()) {
      names.push_back(kv.first);
    }
    for (auto const& kv : builtin_schemas()) {
      names.push_back("condition-one:" + kv.first);
      if (kv.second.t) {
        names.push_back("condition-two:" + kv.first);
      }
    }
    return names;
  }

  std::vector<QuasiIdentity> left_semiring_constraints() {
    return {QuasiIdentity(parse_identity("(xy)z = x(yz)")),
            QuasiIdentity(parse_identity("(x+y)+z = x+(y+z)")),
            QuasiIdentity(parse_identity("x(y+z) = xy+xz"))};
  }

  ////////////////////////////////////////////////////////////////////////////
  // DFS engine
  ////////////////////////////////////////////////////////////////////////////

  namespace {

    using Cells = std::vector<std::int8_t>;

    struct CompiledConstraint {
      std::vector<std::pair<TermProgram, TermProgram>> premises;
      std::vector<TermProgram>                         conclusion;
      std::size_t                                      arity;
      std::uint32_t                                    assignments;
    };

    // Depth-first filling of the cells of all tables (symbols ascending,
    // row-major), pruning a partial table when
    //   - some constraint instance is already decided false, or
    //   - some carrier permutation maps it to a lexicographically smaller
    //     table on the decided prefix.
    // Leaves are exactly the canonical forms satisfying every constraint.
    class Engine {
     public:
      Engine(std::size_t                       n,
             std::string const&                ops,
             std::vector<QuasiIdentity> const& constraints)
          : _n(n),
            _ops(ops),
            _cells(ops.size() * n * n),
            _table(_cells, -1),
            _pending(_cells + 1) {
        for (auto const& q : constraints) {
          std::string const  vars = q.variables();
          CompiledConstraint c{{}, {}, vars.size(), 1};
          for (auto const& p : q.premises) {
            c.premises.emplace_back(TermProgram(p.lhs, vars, ops),
                                    TermProgram(p.rhs, vars, ops));
          }
          c.conclusion.emplace_back(q.conclusion.lhs, vars, ops);
          c.conclusion.emplace_back(q.conclusion.rhs, vars, ops);
          for (std::size_t i = 0; i < vars.size(); ++i) {
            c.assignments *= static_cast<std::uint32_t>(n);
          }
          _constraints.push_back(std::move(c));
        }
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
          std::vector<int> inv(n);
          for (std::size_t i = 0; i < n; ++i) {
            inv[perm[i]] = static_cast<int>(i);
          }
          _perms.push_back(perm);
          _inverses.push_back(std::move(inv));
        }
      }

      std::size_t cells() const noexcept {
        return _cells;
      }

      // Resets to the given prefix. Returns false if the prefix is pruned.
      bool reset(Cells const& prefix) {
        std::fill(_table.begin(), _table.end(), -1);
        _pending[0].clear();
        for (std::uint32_t c = 0; c < _constraints.size(); ++c) {
          for (std::uint32_t a = 0; a < _constraints[c].assignments; ++a) {
            _pending[0].push_back((c << 24) | a);
          }
        }
        if (!filter(0)) {
          return false;
        }
        std::swap(_pending[0], _pending[1]);
        for (std::size_t d = 0; d < prefix.size(); ++d) {
          _table[d] = prefix[d];
          if (!lex_leader(d + 1) || !filter(d)) {
            return false;
          }
          // filter(d) wrote _pending[d + 1] from _pending[d]
        }
        _depth = prefix.size();
        return true;
      }

      // All surviving partial tables with `depth` cells filled, below the
      // current state.
      void collect(std::size_t depth, std::vector<Cells>& out, std::uint64_t& nodes) {
        if (_depth == depth) {
          out.emplace_back(_table.begin(), _table.begin() + depth);
          return;
        }
        step([&] { collect(depth, out, nodes); }, nodes);
      }

      template <typename Visit>
      void run(Visit&& visit, std::uint64_t& nodes) {
        if (_depth == _cells) {
          visit(_table);
          return;
        }
        step([&] { run(visit, nodes); }, nodes);
      }

      Algebra to_algebra(Cells const& cells) const {
        std::map<OpSymbol, Table> tables;
        std::size_t const         nn = _n * _n;
        for (std::size_t k = 0; k < _ops.size(); ++k) {
          std::vector<Element> entries(cells.begin() + k * nn,
                                       cells.begin() + (k + 1) * nn);
          tables.emplace(_ops[k], Table(_n, entries));
        }
        return Algebra(_n, std::move(tables));
      }

     private:
      template <typename Recurse>
      void step(Recurse&& recurse, std::uint64_t& nodes) {
        std::size_t const d = _depth;
        for (int v = 0; v < static_cast<int>(_n); ++v) {
          _table[d] = static_cast<std::int8_t>(v);
          ++nodes;
          if (lex_leader(d + 1) && filter(d)) {
            _depth = d + 1;
            recurse();
            _depth = d;
          }
        }
        _table[d] = -1;
      }

      int lookup(int op, int a, int b) const {
        return _table[(op * _n + a) * _n + b];
      }

      // Moves the undecided instances of _pending[d] into _pending[d + 1];
      // false if one is decided false.
      bool filter(std::size_t d) {
        auto&       next = _pending[d + 1];
        auto const& cur  = _pending[d];
        next.clear();
        auto look = [this](int op, int a, int b) { return lookup(op, a, b); };
        int  values[16];
        for (std::uint32_t entry : cur) {
          auto const& c   = _constraints[entry >> 24];
          std::uint32_t idx = entry & 0xFFFFFF;
          for (std::size_t i = c.arity; i-- > 0;) {
            values[i] = static_cast<int>(idx % _n);
            idx /= static_cast<std::uint32_t>(_n);
          }
          std::span<int const> vals(values, c.arity);
          bool                 undecided = false;
          bool                 vacuous   = false;
          for (auto const& [pl, pr] : c.premises) {
            int const l = pl.run(vals, look);
            int const r = pr.run(vals, look);
            if (l < 0 || r < 0) {
              undecided = true;
            } else if (l != r) {
              vacuous = true;
              break;
            }
          }
          if (vacuous) {
            continue;
          }
          int const l = c.conclusion[0].run(vals, look);
          int const r = c.conclusion[1].run(vals, look);
          if (l >= 0 && r >= 0 && l == r) {
            continue;
          }
          if (!undecided && l >= 0 && r >= 0) {
            return false;
          }
          next.push_back(entry);
        }
        return true;
      }

      // The first `filled` cells are decided.
      bool lex_leader(std::size_t filled) const {
        std::size_t const nn = _n * _n;
        for (std::size_t k = 0; k < _perms.size(); ++k) {
          auto const& perm = _perms[k];
          auto const& inv  = _inverses[k];
          for (std::size_t p = 0; p < filled; ++p) {
            std::size_t const op = p / nn, i = (p % nn) / _n, j = p % _n;
            std::size_t const src = op * nn + inv[i] * _n + inv[j];
            if (src >= filled) {
              break;
            }
            int const image = perm[_table[src]];
            if (image < _table[p]) {
              return false;
            }
            if (image > _table[p]) {
              break;
            }
          }
        }
        return true;
      }

      std::size_t                             _n;
      std::string                             _ops;
      std::size_t                             _cells;
      Cells                                   _table;
      std::vector<CompiledConstraint>         _constraints;
      std::vector<std::vector<std::uint32_t>> _pending;
      std::vector<std::vector<int>>           _perms;
      std::vector<std::vector<int>>           _inverses;
      std::size_t                             _depth = 0;
    };

    struct TaskResult {
      std::uint64_t          nodes      = 0;
      std::uint64_t          classes    = 0;
      std::uint64_t          checked    = 0;
      std::uint64_t          violations = 0;
      std::optional<Algebra> witness;
    };

    bool passes(std::vector<Property> const& pre, Algebra const& a) {
      return std::all_of(
          pre.begin(), pre.end(), [&](Property const& p) { return p.test(a); });
    }

    // One order, all workers. Results are merged in prefix order, so they do
    // not depend on scheduling.
    TaskResult search_order(SearchSpec const& spec, std::size_t n) {
      std::string const ops = spec.signature.symbols();
      Engine            root(n, ops, spec.constraints);
      TaskResult        total;
      if (!root.reset({})) {
        return total;
      }
      std::vector<Cells> prefixes;
      root.collect(std::min(n, root.cells()), prefixes, total.nodes);

      std::vector<TaskResult> results(prefixes.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        Engine engine(n, ops, spec.constraints);
        for (std::size_t i = next++; i < prefixes.size(); i = next++) {
          TaskResult& r = results[i];
          if (!engine.reset(prefixes[i])) {
            continue;
          }
          engine.run(
              [&](Cells const& cells) {
                ++r.classes;
                Algebra const a = engine.to_algebra(cells);
                if (!passes(spec.preconditions, a)) {
                  return;
                }
                ++r.checked;
                if (spec.property && !spec.property->test(a)) {
                  ++r.violations;
                  if (!r.witness) {
                    r.witness = a;
                  }
                }
              },
              r.nodes);
        }
      };
      std::size_t const workers
          = std::max<std::size_t>(1, std::min(spec.workers, prefixes.size()));
      if (workers == 1) {
        worker();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back(worker);
        }
      }
      for (auto& r : results) {
        total.nodes += r.nodes;
        total.classes += r.classes;
        total.checked += r.checked;
        total.violations += r.violations;
        if (!total.witness && r.witness) {
          total.witness = std::move(r.witness);
        }
      }
      return total;
    }

  }  // namespace

  void validate(SearchSpec const& spec) {
    std::size_t const k = spec.signature.size();
    if (k != 1 && k != 2) {
      throw InvalidArgumentError("signature must have one or two operations");
    }
    for (char op : spec.signature.symbols()) {
      if (op != mul && op != add) {
        throw UnknownSymbolError(op);
      }
    }
    if (spec.min_order == 0 || spec.min_order > spec.max_order) {
      throw InvalidArgumentError("order range must satisfy 1 <= min <= max");
    }
    std::size_t const cap = spec.constraints.empty()
                                ? spec.caps.max_order_unconstrained
                                : spec.caps.max_order;
    if (spec.max_order > cap) {
      throw CapExceededError(
          "order " + std::to_string(spec.max_order) + " exceeds the cap "
          + std::to_string(cap)
          + (spec.constraints.empty() ? " for unconstrained scans" : ""));
    }
    if (spec.max_order > 6) {
      throw CapExceededError("orders above 6 are not supported");
    }
    for (auto const& q : spec.constraints) {
      if (q.variables().size() > 6) {
        throw CapExceededError("constraints may use at most 6 variables");
      }
      for (auto const& id : q.premises) {
        for (auto const* t : {&id.lhs, &id.rhs}) {
          for (char op : t->symbols()) {
            if (!spec.signature.contains(op)) {
              throw UnknownSymbolError(op);
            }
          }
        }
      }
      for (auto const* t : {&q.conclusion.lhs, &q.conclusion.rhs}) {
        for (char op : t->symbols()) {
          if (!spec.signature.contains(op)) {
            throw UnknownSymbolError(op);
          }
        }
      }
    }
  }

  std::uint64_t for_each_algebra(SearchSpec const&                          spec,
                                 std::function<void(Algebra const&)> const& visit) {
    validate(spec);
    std::uint64_t nodes = 0;
    for (std::size_t n = spec.min_order; n <= spec.max_order; ++n) {
      Engine engine(n, spec.signature.symbols(), spec.constraints);
      if (engine.reset({})) {
        engine.run([&](Cells const& c) { visit(engine.to_algebra(c)); }, nodes);
      }
    }
    return nodes;
  }

  std::vector<Algebra> enumerate_algebras(SearchSpec const& spec) {
    std::vector<Algebra> out;
    for_each_algebra(spec, [&out](Algebra const& a) { out.push_back(a); });
    return out;
  }

  namespace {
    SearchReport search(SearchSpec const& spec, bool stop_at_first_order) {
      validate(spec);
      if (!spec.property) {
        throw InvalidArgumentError("search needs a property");
      }
      auto const   start = std::chrono::steady_clock::now();
      SearchReport report;
      for (std::size_t n = spec.min_order; n <= spec.max_order; ++n) {
        TaskResult r = search_order(spec, n);
        report.nodes += r.nodes;
        report.classes += r.classes;
        report.classes_per_order[n] = r.classes;
        report.checked += r.checked;
        report.violations += r.violations;
        if (!report.witness && r.witness) {
          report.witness = std::move(r.witness);
        }
        if (stop_at_first_order && report.witness) {
          break;
        }
      }
      report.pass       = !report.witness;
      report.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
      return report;
    }
  }  // namespace

  SearchReport verify_universally(SearchSpec const& spec) {
    return search(spec, false);
  }

  std::optional<Algebra> find_counterexample(SearchSpec const& spec) {
    return search(spec, true).witness;
  }

  SearchReport run_search(SearchSpec const& spec) {
    return search(spec, spec.target == Target::counterexample);
  }

  nlohmann::json to_json(SearchSpec const& spec) {
    nlohmann::json constraints = nlohmann::json::array();
    for (auto const& q : spec.constraints) {
      constraints.push_back(render(q));
    }
    nlohmann::json pre = nlohmann::json::array();
    for (auto const& p : spec.preconditions) {
      pre.push_back(p.name);
    }
    return {{"orders", {spec.min_order, spec.max_order}},
            {"signature", spec.signature.symbols()},
            {"constraints", constraints},
            {"preconditions", pre},
            {"property", spec.property ? spec.property->name : ""},
            {"target",
             spec.target == Target::verify ? "verify" : "counterexample"}};
  }

  nlohmann::json to_json(SearchReport const& report, bool timing) {
    nlohmann::json per_order = nlohmann::json::object();
    for (auto const& [n, c] : report.classes_per_order) {
      per_order[std::to_string(n)] = c;
    }
    nlohmann::json j
        = {{"counts",
            {{"partial_tables_visited", report.nodes},
             {"classes", report.classes},
             {"classes_per_order", per_order},
             {"checked", report.checked},
             {"violations", report.violations}}},
           {"status", report.pass ? "pass" : "fail"},
           {"witness",
            report.witness ? nlohmann::json(format_algebra(*report.witness))
                           : nlohmann::json(nullptr)}};
    if (timing) {
      j["elapsed_ms"] = report.elapsed_ms;
    }
    return j;
  }

}  // namespace idemlab
