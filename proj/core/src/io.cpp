#include "semiord/io.hpp"

#include <fstream>
#include <sstream>

#include "semiord/errors.hpp"

namespace semiord {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  std::string s = (hash == std::string::npos) ? line : line.substr(0, hash);
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::pair<long long, long long> parse_range(const std::string& tok) {
  const auto dots = tok.find("..");
  if (dots == std::string::npos) throw ParseError("expected a..b range, got: " + tok);
  try {
    return {std::stoll(tok.substr(0, dots)), std::stoll(tok.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range: " + tok);
  }
}

Vec parse_tuple(const std::string& tok) {
  // "(a,b,...)" or bare "a"
  std::string body = tok;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw ParseError("unclosed tuple: " + tok);
    body = body.substr(1, body.size() - 2);
  }
  Vec out;
  std::string cur;
  std::istringstream in(body);
  while (std::getline(in, cur, ',')) {
    try {
      out.push_back(std::stoll(cur));
    } catch (const std::exception&) {
      throw ParseError("bad integer in tuple: " + tok);
    }
  }
  if (out.empty()) throw ParseError("empty tuple: " + tok);
  return out;
}

}  // namespace

Poset parse_poset(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    const std::string s = strip_comment(line);
    if (s.empty()) continue;
    std::istringstream ls(s);
    if (n < 0) {
      std::string kw;
      ls >> kw >> n;
      if (kw != "poset" || ls.fail() || n < 0) throw ParseError("expected header: poset <n>");
      continue;
    }
    int i, j;
    std::string rel;
    ls >> i >> rel >> j;
    if (ls.fail() || rel != "<") throw ParseError("expected edge line: <i> < <j>");
    edges.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing poset header");
  return build_poset(n, edges);
}

Poset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_poset(in);
}

Window parse_window(const std::string& text) {
  Window w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "x") continue;
    w.bounds.push_back(parse_range(tok));
  }
  if (w.bounds.empty()) throw ParseError("empty window spec");
  return w;
}

namespace {

GroupPtr parse_group_lines(std::vector<std::string>& lines, std::size_t& pos,
                           std::optional<Window>& window);

FinalSegment parse_threshold_tail(std::istringstream& ls) {
  std::string tuple, mode;
  ls >> tuple >> mode;
  if (ls.fail()) throw ParseError("expected: threshold: (t1,...) closed|open");
  if (mode != "closed" && mode != "open") throw ParseError("threshold mode must be closed or open");
  return FinalSegment{parse_tuple(tuple), mode == "closed"};
}

GroupPtr parse_zn(std::vector<std::string>& lines, std::size_t& pos, int n) {
  std::optional<std::vector<Vec>> rows;
  std::optional<FinalSegment> seg;
  while (pos < lines.size() && (!rows || !seg)) {
    std::istringstream ls(lines[pos]);
    std::string kw;
    ls >> kw;
    if (kw == "weights:") {
      ++pos;
      std::string rest;
      std::getline(ls, rest);
      std::vector<Vec> r;
      std::istringstream rowstream(rest);
      std::string rowtext;
      while (std::getline(rowstream, rowtext, ';')) {
        Vec row;
        std::istringstream vs(rowtext);
        long long v;
        while (vs >> v) row.push_back(v);
        if (!row.empty()) r.push_back(std::move(row));
      }
      rows = std::move(r);
    } else if (kw == "threshold:") {
      ++pos;
      seg = parse_threshold_tail(ls);
    } else {
      break;
    }
  }
  if (!rows) throw ParseError("zn spec needs a weights: line");
  if (!seg) throw ParseError("zn spec needs a threshold: line");
  return std::make_shared<ZnGroup>(WeightOrder(n, std::move(*rows)), std::move(*seg));
}

GroupPtr parse_group_lines(std::vector<std::string>& lines, std::size_t& pos,
                           std::optional<Window>& window) {
  if (pos >= lines.size()) throw ParseError("missing group header");
  std::istringstream ls(lines[pos]);
  std::string kw, kind;
  ls >> kw >> kind;
  if (kw != "group") throw ParseError("expected: group <kind> ...");
  ++pos;
  GroupPtr g;
  if (kind == "zn") {
    int n = 0;
    ls >> n;
    if (ls.fail() || n < 1) throw ParseError("expected: group zn <n>");
    g = parse_zn(lines, pos, n);
  } else if (kind == "lexprod") {
    long long k = 0;
    ls >> k;
    if (ls.fail() || k < 1) throw ParseError("expected: group lexprod <k>");
    GroupPtr inner = parse_group_lines(lines, pos, window);
    g = std::make_shared<LexProdGroup>(k, std::move(inner));
  } else if (kind == "odot") {
    std::string ftok, mode, atok;
    ls >> ftok >> mode >> atok;
    if (ls.fail() || ftok.substr(0, 3) != "F=(" || atok.substr(0, 7) != "alpha=(")
      throw ParseError("expected: group odot F=(f) closed|open alpha=(a1,...)");
    if (mode != "closed" && mode != "open") throw ParseError("odot segment mode must be closed or open");
    const Vec f = parse_tuple(ftok.substr(2));
    const Vec alpha = parse_tuple(atok.substr(6));
    GroupPtr inner = parse_group_lines(lines, pos, window);
    g = std::make_shared<OdotGroup>(WeightOrder::lex(1), FinalSegment{f, mode == "closed"},
                                    std::move(inner), alpha);
  } else {
    throw ParseError("unknown group kind: " + kind);
  }
  // trailing window line, if any, belongs to the outermost spec
  if (pos < lines.size()) {
    std::istringstream ws(lines[pos]);
    std::string head;
    ws >> head;
    if (head == "window:") {
      std::string rest;
      std::getline(ws, rest);
      window = parse_window(rest);
      ++pos;
    }
  }
  return g;
}

}  // namespace

GroupSpecFile parse_group(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const std::string s = strip_comment(line);
    if (!s.empty()) lines.push_back(s);
  }
  std::size_t pos = 0;
  GroupSpecFile out;
  out.group = parse_group_lines(lines, pos, out.window);
  if (pos != lines.size()) throw ParseError("trailing content in group spec");
  if (out.window) out.window = make_window(*out.group, out.window->bounds);
  return out;
}

GroupSpecFile parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_group(in);
}

namespace {

std::string dot_of(const Poset& p, const std::vector<std::string>& labels) {
  // cover relation only
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
  for (int i = 0; i < p.size(); ++i) {
    for (int j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      bool cover = true;
      for (int z = 0; z < p.size(); ++z)
        if (p.less(i, z) && p.less(z, j)) { cover = false; break; }
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string window_poset_dot(const WindowPoset& wp) {
  std::vector<std::string> labels;
  labels.reserve(wp.elements.size());
  for (const Vec& v : wp.elements) labels.push_back(vec_str(v));
  return dot_of(wp.poset, labels);
}

std::string poset_dot(const Poset& p) {
  std::vector<std::string> labels;
  if (p.labels().empty()) {
    for (int i = 0; i < p.size(); ++i) labels.push_back(std::to_string(i));
  } else {
    labels = p.labels();
  }
  return dot_of(p, labels);
}

}  // namespace semiord
