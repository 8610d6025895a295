#include "idemlab/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "idemlab/error.hpp"

namespace idemlab {

  Table::Table(std::size_t n, std::vector<Element> const& cells) : _n(n) {
    if (n == 0 || n > Algebra::max_carrier) {
      throw InvalidArgumentError("table order must be in [1, "
                                 + std::to_string(Algebra::max_carrier)
                                 + "], found " + std::to_string(n));
    }
    if (cells.size() != n * n) {
      throw InvalidArgumentError("expected " + std::to_string(n * n)
                                 + " table entries, found "
                                 + std::to_string(cells.size()));
    }
    _cells.reserve(cells.size());
    for (Element c : cells) {
      if (c >= n) {
        throw InvalidArgumentError("table entry " + std::to_string(c)
                                   + " out of range [0, " + std::to_string(n)
                                   + ")");
      }
      _cells.push_back(static_cast<std::uint8_t>(c));
    }
  }

  Table Table::from_function(std::size_t                               n,
                             std::function<Element(Element, Element)> f) {
    std::vector<Element> cells;
    cells.reserve(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        cells.push_back(f(a, b));
      }
    }
    return Table(n, cells);
  }

  Algebra::Algebra(std::size_t n, std::map<OpSymbol, Table> ops)
      : _n(n), _ops(std::move(ops)) {
    if (_ops.empty()) {
      throw InvalidArgumentError("an algebra needs at least one operation");
    }
    for (auto const& [op, table] : _ops) {
      if (table.size() != n) {
        throw InvalidArgumentError(std::string("table for '") + op
                                   + "' has order "
                                   + std::to_string(table.size())
                                   + ", carrier has "
                                   + std::to_string(n));
      }
    }
  }

  Algebra::Algebra(OpSymbol op, Table table)
      : Algebra(table.size(), {{op, std::move(table)}}) {}

  Signature Algebra::signature() const {
    std::string s;
    for (auto const& kv : _ops) {
      s.push_back(kv.first);
    }
    return Signature(s);
  }

  Table const& Algebra::table(OpSymbol op) const {
    auto it = _ops.find(op);
    if (it == _ops.end()) {
      throw UnknownSymbolError(op);
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Idempotents
  ////////////////////////////////////////////////////////////////////////////

  std::vector<Element> idempotents(Algebra const& a, OpSymbol op) {
    Table const&         t = a.table(op);
    std::vector<Element> result;
    for (Element e = 0; e < a.size(); ++e) {
      if (t(e, e) == e) {
        result.push_back(e);
      }
    }
    return result;
  }

  std::vector<Element> common_idempotents(Algebra const& a) {
    std::vector<Element> result;
    for (Element e = 0; e < a.size(); ++e) {
      if (std::all_of(a.tables().begin(),
                      a.tables().end(),
                      [e](auto const& kv) { return kv.second(e, e) == e; })) {
        result.push_back(e);
      }
    }
    return result;
  }

  IdempotentReport idempotent_report(Algebra const& a) {
    IdempotentReport report;
    for (auto const& kv : a.tables()) {
      report.per_symbol[kv.first] = idempotents(a, kv.first);
    }
    report.common = common_idempotents(a);
    return report;
  }

  Element find_idempotent_power(Algebra const& a, OpSymbol op, Element x) {
    Table const& t = a.table(op);
    if (x >= a.size()) {
      throw InvalidArgumentError("element out of the carrier");
    }
    if (!is_associative(a, op)) {
      throw NotAssociativeError(std::string("operation '") + op
                                + "' is not associative; powers are "
                                  "ill-defined");
    }
    // first_seen[v] = least k with x^k = v
    std::vector<std::size_t> first_seen(a.size(), 0);
    std::vector<Element>     powers{0, x};  // powers[k] = x^k, k >= 1
    first_seen[x] = 1;
    for (std::size_t k = 2;; ++k) {
      Element next = t(powers.back(), x);
      if (first_seen[next] != 0) {
        std::size_t const index  = first_seen[next];
        std::size_t const period = k - index;
        // least multiple of the period at or past the cycle start; it is
        // below k = index + period, so already computed
        std::size_t const m = ((index + period - 1) / period) * period;
        return powers[m];
      }
      first_seen[next] = k;
      powers.push_back(next);
    }
  }

  ////////////////////////////////////////////////////////////////////////////
  // Satisfaction
  ////////////////////////////////////////////////////////////////////////////

  namespace {
    std::string op_symbols(Algebra const& a) {
      return a.signature().symbols();
    }

    Assignment to_assignment(std::string_view vars, std::vector<int> const& v) {
      Assignment asg;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        asg[vars[i]] = static_cast<Element>(v[i]);
      }
      return asg;
    }
  }  // namespace

  Verdict satisfies_quasi_identity(Algebra const&       a,
                                   QuasiIdentity const& q,
                                   std::string_view     vars) {
    std::string const ops = op_symbols(a);
    std::vector<std::pair<TermProgram, TermProgram>> premises;
    for (auto const& p : q.premises) {
      premises.emplace_back(TermProgram(p.lhs, vars, ops),
                            TermProgram(p.rhs, vars, ops));
    }
    TermProgram const lhs(q.conclusion.lhs, vars, ops);
    TermProgram const rhs(q.conclusion.rhs, vars, ops);

    std::vector<Table const*> tables;
    for (auto const& kv : a.tables()) {
      tables.push_back(&kv.second);
    }
    auto lookup = [&tables](int op, int x, int y) {
      return static_cast<int>((*tables[op])(x, y));
    };

    int const        n = static_cast<int>(a.size());
    std::vector<int> values(vars.size(), 0);
    while (true) {
      bool premises_hold = true;
      for (auto const& [pl, pr] : premises) {
        if (pl.run(values, lookup) != pr.run(values, lookup)) {
          premises_hold = false;
          break;
        }
      }
      if (premises_hold && lhs.run(values, lookup) != rhs.run(values, lookup)) {
        return Verdict{false, to_assignment(vars, values)};
      }
      // odometer, last variable fastest
      std::size_t i = values.size();
      while (i > 0 && ++values[i - 1] == n) {
        values[i - 1] = 0;
        --i;
      }
      if (i == 0) {
        return Verdict{};
      }
    }
  }

  Verdict satisfies_quasi_identity(Algebra const& a, QuasiIdentity const& q) {
    return satisfies_quasi_identity(a, q, q.variables());
  }

  Verdict check_identity(Algebra const& a, Identity const& id) {
    return satisfies_quasi_identity(a, QuasiIdentity(id));
  }

  bool satisfies_identity(Algebra const& a, Identity const& id) {
    return check_identity(a, id).holds;
  }

  bool is_associative(Algebra const& a, OpSymbol op) {
    Table const&      t = a.table(op);
    std::size_t const n = a.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const xy = t(x, y);
        for (Element z = 0; z < n; ++z) {
          if (t(xy, z) != t(x, t(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_left_distributive(Algebra const& a, OpSymbol times, OpSymbol plus) {
    Table const&      m = a.table(times);
    Table const&      p = a.table(plus);
    std::size_t const n = a.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (m(x, p(y, z)) != p(m(x, y), m(x, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_left_semiring(Algebra const& a) {
    a.table(add);
    a.table(mul);
    return is_associative(a, add) && is_associative(a, mul)
           && is_left_distributive(a, mul, add);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////////

  Algebra relabel(Algebra const& a, std::span<Element const> perm) {
    std::size_t const n = a.size();
    if (perm.size() != n) {
      throw InvalidArgumentError("permutation size does not match carrier");
    }
    std::map<OpSymbol, Table> ops;
    for (auto const& [op, t] : a.tables()) {
      std::vector<Element> cells(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          cells[perm[x] * n + perm[y]] = perm[t(x, y)];
        }
      }
      ops.emplace(op, Table(n, cells));
    }
    return Algebra(n, std::move(ops));
  }

  Algebra canonicalize(Algebra const& a, std::size_t max_order) {
    std::size_t const n = a.size();
    if (n > max_order) {
      throw CapExceededError("canonicalize: order " + std::to_string(n)
                             + " exceeds the cap " + std::to_string(max_order));
    }
    std::vector<Table const*> tables;
    for (auto const& kv : a.tables()) {
      tables.push_back(&kv.second);
    }
    std::size_t const         cells = tables.size() * n * n;
    std::vector<std::uint8_t> best(cells, 0xFF), current(cells);
    std::vector<Element>      perm(n), best_perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::size_t k = 0; k < tables.size(); ++k) {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            current[k * n * n + perm[x] * n + perm[y]]
                = static_cast<std::uint8_t>(perm[(*tables[k])(x, y)]);
          }
        }
      }
      if (current < best) {
        best      = current;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return relabel(a, best_perm);
  }

  bool are_isomorphic(Algebra const& a, Algebra const& b, std::size_t cap) {
    if (a.size() != b.size()
        || a.signature().symbols() != b.signature().symbols()) {
      return false;
    }
    return canonicalize(a, cap) == canonicalize(b, cap);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////////

  namespace {

    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    std::vector<Token> tokenize(std::string_view line) {
      std::vector<Token> tokens;
      std::size_t        i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
          ++i;
        }
        std::size_t const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
          ++i;
        }
        if (i > start) {
          tokens.push_back(
              {std::string(line.substr(start, i - start)), start + 1});
        }
      }
      return tokens;
    }

    std::size_t parse_number(Token const& tok, std::size_t line) {
      if (tok.text.empty() || tok.text.size() > 6
          || !std::all_of(tok.text.begin(), tok.text.end(), [](char c) {
               return c >= '0' && c <= '9';
             })) {
        throw ParseError("expected a non-negative integer, found '" + tok.text
                             + "'",
                         line,
                         tok.column);
      }
      return std::stoul(tok.text);
    }

    OpSymbol parse_symbol(Token const& tok, std::size_t line) {
      if (tok.text == "*" || tok.text == "\xC2\xB7") {
        return mul;
      }
      if (tok.text == "+") {
        return add;
      }
      throw ParseError("unknown operation symbol '" + tok.text + "'",
                       line,
                       tok.column);
    }

  }  // namespace

  Algebra parse_algebra(std::string_view text) {
    // Split into (line number, tokens), skipping blank lines.
    std::vector<std::pair<std::size_t, std::vector<Token>>> lines;
    std::size_t                                             number = 0;
    std::size_t                                             pos    = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      ++number;
      auto tokens = tokenize(line);
      if (!tokens.empty()) {
        lines.emplace_back(number, std::move(tokens));
      }
      pos = end + 1;
    }
    if (lines.empty()) {
      throw ParseError("empty algebra file", 1, 1);
    }

    auto const& [first_no, header] = lines.front();
    if (header[0].text != "carrier" || header.size() != 2) {
      throw ParseError("expected 'carrier <n>'", first_no, 1);
    }
    std::size_t const n = parse_number(header[1], first_no);
    if (n == 0 || n > Algebra::max_carrier) {
      throw ParseError("carrier size must be in [1, "
                           + std::to_string(Algebra::max_carrier) + "]",
                       first_no,
                       header[1].column);
    }

    std::map<OpSymbol, Table> ops;
    std::size_t               i = 1;
    while (i < lines.size()) {
      auto const& [op_no, op_line] = lines[i];
      if (op_line[0].text != "op" || op_line.size() != 2) {
        throw ParseError("expected 'op <symbol>'", op_no, op_line[0].column);
      }
      OpSymbol const op = parse_symbol(op_line[1], op_no);
      if (ops.count(op) != 0) {
        throw ParseError(std::string("duplicate operation '") + op + "'",
                         op_no,
                         op_line[1].column);
      }
      ++i;
      std::vector<Element> cells;
      cells.reserve(n * n);
      for (std::size_t row = 0; row < n; ++row, ++i) {
        if (i >= lines.size()) {
          throw ParseError("expected " + std::to_string(n) + " rows for '"
                               + op + "', found "
                               + std::to_string(row),
                           number,
                           1);
        }
        auto const& [row_no, tokens] = lines[i];
        if (tokens.size() != n) {
          throw ParseError("expected " + std::to_string(n)
                               + " entries in row, found "
                               + std::to_string(tokens.size()),
                           row_no,
                           tokens.front().column);
        }
        for (auto const& tok : tokens) {
          std::size_t const v = parse_number(tok, row_no);
          if (v >= n) {
            throw ParseError("entry " + tok.text + " out of range [0, "
                                 + std::to_string(n) + ")",
                             row_no,
                             tok.column);
          }
          cells.push_back(static_cast<Element>(v));
        }
      }
      ops.emplace(op, Table(n, cells));
    }
    if (ops.empty()) {
      throw ParseError("no operation tables", first_no, 1);
    }
    return Algebra(n, std::move(ops));
  }

  std::string format_algebra(Algebra const& a) {
    std::ostringstream out;
    std::size_t const  n = a.size();
    out << "carrier " << n << '\n';
    for (auto const& [op, t] : a.tables()) {
      out << "op " << op << '\n';
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          out << (y == 0 ? "" : " ") << t(x, y);
        }
        out << '\n';
      }
    }
    return out.str();
  }

}  // namespace idemlab
