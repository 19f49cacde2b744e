#include "cylgame/algebra_io.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

#include "cylgame/error.hpp"

namespace cylgame {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

[[noreturn]] void parse_error(int line, int column, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::vector<Token> tokenize(const std::string& line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), lineno, static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct Section {
  std::string kind;
  std::vector<int> args;
  Token header;
  std::vector<std::vector<Token>> lines;
};

int parse_int(const Token& t) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t.text, &used);
    if (used != t.text.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    parse_error(t.line, t.column, "expected an integer, got '" + t.text + "'");
  }
}

std::vector<Section> read_sections(std::istream& in) {
  std::vector<Section> sections;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '[') {
      auto close = line.find(']', first);
      if (close == std::string::npos) parse_error(lineno, static_cast<int>(first) + 1, "unterminated section header");
      Token header{line.substr(first + 1, close - first - 1), lineno, static_cast<int>(first) + 1};
      auto rest = tokenize(line.substr(close + 1), lineno);
      if (!rest.empty()) parse_error(lineno, static_cast<int>(close) + 2, "unexpected text after section header");
      auto words = tokenize(header.text, lineno);
      if (words.empty()) parse_error(lineno, header.column, "empty section name");
      Section s{words[0].text, {}, header, {}};
      static const std::map<std::string, std::size_t> arity{
          {"atoms", 0}, {"identity", 0}, {"converse", 0}, {"triples", 0}, {"rule", 0},
          {"dim", 0},   {"acc", 1},      {"diag", 2},     {"sub", 2}};
      auto it = arity.find(s.kind);
      if (it == arity.end()) parse_error(lineno, header.column + 1, "unknown section '" + s.kind + "'");
      if (words.size() != it->second + 1)
        parse_error(lineno, header.column, "section '" + s.kind + "' takes " + std::to_string(it->second) + " index argument(s)");
      for (std::size_t k = 1; k < words.size(); ++k) {
        Token t = words[k];
        t.column += header.column;
        s.args.push_back(parse_int(t));
      }
      sections.push_back(std::move(s));
      continue;
    }
    auto toks = tokenize(line, lineno);
    if (toks.empty()) continue;
    if (sections.empty()) parse_error(lineno, toks[0].column, "content before the first section");
    sections.back().lines.push_back(std::move(toks));
  }
  return sections;
}

class Names {
 public:
  void add(const Token& t) {
    if (!index_.emplace(t.text, static_cast<AtomId>(names_.size())).second)
      parse_error(t.line, t.column, "duplicate atom '" + t.text + "'");
    names_.push_back(t.text);
  }
  AtomId at(const Token& t) const {
    auto it = index_.find(t.text);
    if (it == index_.end()) parse_error(t.line, t.column, "unknown atom '" + t.text + "'");
    return it->second;
  }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, AtomId> index_;
};

void expect_width(const std::vector<Token>& line, std::size_t width, const std::string& section) {
  if (line.size() != width)
    parse_error(line.front().line, line.front().column,
                "section [" + section + "] expects " + std::to_string(width) + " tokens per line");
}

RaAtomStructure build_ra(const std::vector<Section>& sections, const Names& atoms) {
  const std::size_t n = atoms.size();
  std::vector<AtomId> identity;
  std::vector<AtomId> converse(n);
  for (std::size_t a = 0; a < n; ++a) converse[a] = static_cast<AtomId>(a);
  std::set<std::tuple<AtomId, AtomId, AtomId>> triples;
  std::optional<std::string> rule;
  bool have_triples = false;

  for (const auto& s : sections) {
    if (s.kind == "identity") {
      for (const auto& line : s.lines)
        for (const auto& t : line) identity.push_back(atoms.at(t));
    } else if (s.kind == "converse") {
      for (const auto& line : s.lines) {
        expect_width(line, 2, s.kind);
        const AtomId a = atoms.at(line[0]), b = atoms.at(line[1]);
        converse[static_cast<std::size_t>(a)] = b;
        converse[static_cast<std::size_t>(b)] = a;
      }
    } else if (s.kind == "triples") {
      have_triples = true;
      for (const auto& line : s.lines) {
        expect_width(line, 3, s.kind);
        triples.emplace(atoms.at(line[0]), atoms.at(line[1]), atoms.at(line[2]));
      }
    } else if (s.kind == "rule") {
      if (s.lines.size() != 1 || s.lines[0].size() != 1)
        parse_error(s.header.line, s.header.column, "[rule] takes exactly one rule name");
      const Token& t = s.lines[0][0];
      if (t.text != "monochromatic-forbidden" && t.text != "all-consistent")
        parse_error(t.line, t.column, "unknown rule '" + t.text + "'");
      rule = t.text;
    } else if (s.kind != "atoms") {
      parse_error(s.header.line, s.header.column, "section [" + s.kind + "] is not valid in a relation-algebra file");
    }
  }
  if (rule && have_triples)
    parse_error(sections.front().header.line, 1, "give either [triples] or [rule], not both");
  if (!rule && !have_triples) parse_error(1, 1, "relation-algebra file needs [triples] or [rule]");

  AtomSet ids(n);
  for (AtomId e : identity) ids.insert(e);
  RaAtomStructure::TriplePredicate pred;
  if (rule) {
    const bool mono = *rule == "monochromatic-forbidden";
    pred = [ids, mono, converse](AtomId a, AtomId b, AtomId c) {
      if (ids.contains(a)) return b == c;
      if (ids.contains(b)) return a == c;
      if (ids.contains(c)) return converse[static_cast<std::size_t>(a)] == b;
      return !(mono && a == b && b == c);
    };
  } else {
    pred = [triples](AtomId a, AtomId b, AtomId c) { return triples.count({a, b, c}) != 0; };
  }
  RaAtomStructure out(atoms.names(), identity, converse, pred);
  if (rule) out.set_rule(*rule);
  return out;
}

CaAtomStructure build_ca(const std::vector<Section>& sections, const Names& atoms, int dim) {
  const std::size_t n = atoms.size();
  CaAtomStructure::Spec spec;
  spec.dimension = dim;
  spec.names = atoms.names();
  spec.acc.assign(static_cast<std::size_t>(dim), std::vector<AtomSet>(n, AtomSet(n)));
  spec.diag.assign(static_cast<std::size_t>(dim), std::vector<AtomSet>(static_cast<std::size_t>(dim), AtomSet(n)));
  std::vector<std::vector<std::vector<AtomId>>> sub;
  std::vector<bool> acc_seen(static_cast<std::size_t>(dim), false);

  for (const auto& s : sections) {
    auto index_ok = [&](int v) {
      if (v < 0 || v >= dim) parse_error(s.header.line, s.header.column, "index " + std::to_string(v) + " out of range");
    };
    if (s.kind == "acc") {
      const int i = s.args[0];
      index_ok(i);
      acc_seen[static_cast<std::size_t>(i)] = true;
      auto& rel = spec.acc[static_cast<std::size_t>(i)];
      for (const auto& line : s.lines) {
        if (line.size() >= 2 && line[1].text == "->") {
          const AtomId a = atoms.at(line[0]);
          for (std::size_t k = 2; k < line.size(); ++k) rel[static_cast<std::size_t>(a)].insert(atoms.at(line[k]));
        } else {
          AtomSet cls(n);
          for (const auto& t : line) cls.insert(atoms.at(t));
          cls.for_each([&](AtomId a) { rel[static_cast<std::size_t>(a)] |= cls; });
        }
      }
    } else if (s.kind == "diag") {
      const int i = s.args[0], j = s.args[1];
      index_ok(i);
      index_ok(j);
      if (i >= j) parse_error(s.header.line, s.header.column, "[diag i j] needs i < j");
      for (const auto& line : s.lines)
        for (const auto& t : line) spec.diag[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].insert(atoms.at(t));
    } else if (s.kind == "sub") {
      const int i = s.args[0], j = s.args[1];
      index_ok(i);
      index_ok(j);
      if (i >= j) parse_error(s.header.line, s.header.column, "[sub i j] needs i < j");
      if (sub.empty()) {
        sub.assign(static_cast<std::size_t>(dim), std::vector<std::vector<AtomId>>(static_cast<std::size_t>(dim)));
        for (int x = 0; x < dim; ++x)
          for (int y = x + 1; y < dim; ++y) {
            auto& p = sub[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            for (std::size_t a = 0; a < n; ++a) p.push_back(static_cast<AtomId>(a));
          }
      }
      auto& p = sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (const auto& line : s.lines) {
        expect_width(line, 2, "sub");
        const AtomId a = atoms.at(line[0]), b = atoms.at(line[1]);
        p[static_cast<std::size_t>(a)] = b;
        p[static_cast<std::size_t>(b)] = a;
      }
    } else if (s.kind != "atoms" && s.kind != "dim") {
      parse_error(s.header.line, s.header.column, "section [" + s.kind + "] is not valid in a cylindric file");
    }
  }
  for (int i = 0; i < dim; ++i)
    if (!acc_seen[static_cast<std::size_t>(i)]) parse_error(1, 1, "missing section [acc " + std::to_string(i) + "]");
  spec.sub = std::move(sub);
  return CaAtomStructure(std::move(spec));
}

}  // namespace

AtomStructure parse_algebra(std::istream& in) {
  const auto sections = read_sections(in);
  Names atoms;
  std::optional<int> dim;
  bool have_atoms = false;
  for (const auto& s : sections) {
    if (s.kind == "atoms") {
      have_atoms = true;
      for (const auto& line : s.lines)
        for (const auto& t : line) atoms.add(t);
    } else if (s.kind == "dim") {
      if (s.lines.size() != 1 || s.lines[0].size() != 1)
        parse_error(s.header.line, s.header.column, "[dim] takes exactly one integer");
      dim = parse_int(s.lines[0][0]);
      if (*dim < 1) parse_error(s.lines[0][0].line, s.lines[0][0].column, "dimension must be positive");
    }
  }
  if (!have_atoms || atoms.size() == 0) parse_error(1, 1, "missing or empty [atoms] section");
  try {
    if (dim) return build_ca(sections, atoms, *dim);
    return build_ra(sections, atoms);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw;
    fail(ErrorKind::Parse, std::string("invalid structure: ") + e.what());
  }
}

AtomStructure parse_algebra(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

void print_algebra(std::ostream& out, const RaAtomStructure& s) {
  const auto n = static_cast<AtomId>(s.size());
  out << "[atoms]\n";
  for (AtomId a = 0; a < n; ++a) out << s.name(a) << '\n';
  out << "[identity]\n";
  s.identity().for_each([&](AtomId e) { out << s.name(e) << '\n'; });
  out << "[converse]\n";
  for (AtomId a = 0; a < n; ++a)
    if (s.converse(a) > a) out << s.name(a) << ' ' << s.name(s.converse(a)) << '\n';
  if (!s.rule().empty()) {
    out << "[rule]\n" << s.rule() << '\n';
    return;
  }
  out << "[triples]\n";
  for (AtomId a = 0; a < n; ++a)
    for (AtomId b = 0; b < n; ++b)
      s.compose_atoms(a, b).for_each([&](AtomId c) {
        out << s.name(a) << ' ' << s.name(b) << ' ' << s.name(c) << '\n';
      });
}

void print_algebra(std::ostream& out, const CaAtomStructure& s) {
  const auto n = static_cast<AtomId>(s.size());
  const int dim = s.dimension();
  out << "[dim]\n" << dim << '\n' << "[atoms]\n";
  for (AtomId a = 0; a < n; ++a) out << s.name(a) << '\n';
  for (int i = 0; i < dim; ++i) {
    out << "[acc " << i << "]\n";
    if (s.equivalence_accessibility()) {
      for (std::size_t c = 0; c < s.class_count(i); ++c) {
        bool first = true;
        s.class_members(i, static_cast<int>(c)).for_each([&](AtomId a) {
          out << (first ? "" : " ") << s.name(a);
          first = false;
        });
        out << '\n';
      }
    } else {
      for (AtomId a = 0; a < n; ++a) {
        out << s.name(a) << " ->";
        s.acc_row(i, a).for_each([&](AtomId b) { out << ' ' << s.name(b); });
        out << '\n';
      }
    }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      out << "[diag " << i << ' ' << j << "]\n";
      s.diag(i, j).for_each([&](AtomId a) { out << s.name(a) << '\n'; });
    }
  if (s.has_substitutions())
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        out << "[sub " << i << ' ' << j << "]\n";
        for (AtomId a = 0; a < n; ++a) {
          const AtomId b = s.substitute(i, j, a);
          if (b > a) out << s.name(a) << ' ' << s.name(b) << '\n';
        }
      }
}

std::string to_text(const RaAtomStructure& s) {
  std::ostringstream os;
  print_algebra(os, s);
  return os.str();
}

std::string to_text(const CaAtomStructure& s) {
  std::ostringstream os;
  print_algebra(os, s);
  return os.str();
}

std::string to_text(const AtomStructure& s) {
  return std::visit([](const auto& x) { return to_text(x); }, s);
}

}  // namespace cylgame
