#include "qwb/parse.hpp"

#include <fstream>
#include <sstream>

namespace qwb {
namespace {

struct Token {
  std::string text;
  int col;
};

struct Line {
  int no;
  std::vector<Token> toks;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    Line line{no, {}};
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(raw[i]))) { ++i; continue; }
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])) &&
             raw[j] != '#')
        ++j;
      line.toks.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.toks.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void fail(const std::string& msg, const Line& line, int col = 1) {
  throw ParseError(msg, line.no, col);
}

int find_in(const std::vector<std::string>& labels, const Token& t, const Line& line) {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == t.text) return static_cast<int>(i);
  fail("unknown label '" + t.text + "'", line, t.col);
}

/// Split "a<=b" into the two labels.
std::pair<std::string, std::string> split_pair(const Token& t, const Line& line) {
  size_t p = t.text.find("<=");
  if (p == std::string::npos || p == 0 || p + 2 >= t.text.size())
    fail("expected a pair of the form a<=b, got '" + t.text + "'", line, t.col);
  return {t.text.substr(0, p), t.text.substr(p + 2)};
}

/// Reflexive-transitive closure of listed pairs over n labels.
std::vector<char> close_order(int n, std::vector<char> leq) {
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<size_t>(k) * n + j]) leq[static_cast<size_t>(i) * n + j] = 1;
  return leq;
}

/// Collected key -> lines map for one section, preserving order of lines.
struct Section {
  std::string kind;
  int header_line;
  std::vector<Line> lines;

  const Line* first(const std::string& key) const {
    for (const auto& l : lines)
      if (l.toks[0].text == key) return &l;
    return nullptr;
  }
  const Line& need(const std::string& key) const {
    const Line* l = first(key);
    if (!l) throw ParseError("[" + kind + "] section is missing a '" + key + "' line",
                             header_line, 1);
    return *l;
  }
  std::string name() const {
    const Line& l = need("name");
    if (l.toks.size() != 2)
      throw ParseError("'name' takes exactly one value", l.no, l.toks[0].col);
    return l.toks[1].text;
  }
};

std::vector<std::string> value_list(const Line& l) {
  std::vector<std::string> out;
  for (size_t i = 1; i < l.toks.size(); ++i) out.push_back(l.toks[i].text);
  return out;
}

void check_fresh(const std::vector<std::string>& labels, const Line& line) {
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) fail("duplicate label '" + labels[i] + "'", line);
}

void parse_quantale(const Section& sec, Document& doc) {
  std::string name = sec.name();
  std::vector<std::string> labels = value_list(sec.need("elements"));
  if (labels.empty()) fail("a quantale needs at least one element", sec.need("elements"));
  check_fresh(labels, sec.need("elements"));
  int n = static_cast<int>(labels.size());

  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  bool order_seen = false, numeric = false;
  for (const auto& l : sec.lines) {
    if (l.toks[0].text != "order") continue;
    order_seen = true;
    for (size_t i = 1; i < l.toks.size(); ++i) {
      if (l.toks[i].text == "numeric-reversed") { numeric = true; continue; }
      auto [a, b] = split_pair(l.toks[i], l);
      int x = find_in(labels, {a, l.toks[i].col}, l);
      int y = find_in(labels, {b, l.toks[i].col}, l);
      leq[static_cast<size_t>(x) * n + y] = 1;
    }
  }
  if (!order_seen) fail("[quantale] section is missing an 'order' line",
                        {sec.header_line, {}});
  if (numeric) {
    // label order is the numeric order; the quantale order reverses it
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) leq[static_cast<size_t>(i) * n + j] = 1;
  } else {
    leq = close_order(n, std::move(leq));
  }

  std::vector<Elem> tensor(static_cast<size_t>(n) * n, -1);
  bool trunc = false, rows_seen = false;
  for (const auto& l : sec.lines) {
    if (l.toks[0].text != "tensor") continue;
    if (l.toks.size() == 2 && l.toks[1].text == "plus-truncated") { trunc = true; continue; }
    rows_seen = true;
    if (static_cast<int>(l.toks.size()) != n + 2)
      fail("tensor row needs an element followed by " + std::to_string(n) + " values", l,
           l.toks[0].col);
    int x = find_in(labels, l.toks[1], l);
    for (int j = 0; j < n; ++j)
      tensor[static_cast<size_t>(x) * n + j] = find_in(labels, l.toks[static_cast<size_t>(j) + 2], l);
  }
  if (trunc == rows_seen)
    fail("tensor must be either 'plus-truncated' or a full set of rows",
         {sec.header_line, {}});
  if (trunc) {
    // labels are read as numerals, the last being absorbing
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        tensor[static_cast<size_t>(i) * n + j] = std::min(i + j, n - 1);
  } else {
    for (Elem v : tensor)
      if (v < 0) fail("tensor table has missing rows", {sec.header_line, {}});
  }

  const Line& ul = sec.need("unit");
  if (ul.toks.size() != 2) fail("'unit' takes exactly one value", ul, ul.toks[0].col);
  Elem unit = find_in(labels, ul.toks[1], ul);

  QuantalePtr q = make_quantale(name, labels, std::move(leq), std::move(tensor), unit);
  auto errs = validate(*q);
  if (!errs.empty()) fail("invalid quantale: " + errs.front(), {sec.header_line, {}});
  if (doc.quantales.count(name)) fail("duplicate quantale '" + name + "'", {sec.header_line, {}});
  doc.quantales.emplace(name, std::move(q));
  doc.order.emplace_back("quantale", name);
}

QuantalePtr quantale_of(const Document& doc, const Section& sec) {
  const Line& l = sec.need("quantale");
  if (l.toks.size() != 2) throw ParseError("'quantale' takes exactly one name", l.no, l.toks[0].col);
  try {
    return resolve_quantale(doc, l.toks[1].text);
  } catch (const std::exception& e) {
    throw ParseError(e.what(), l.no, l.toks[1].col);
  }
}

void parse_vcat(const Section& sec, Document& doc) {
  std::string name = sec.name();
  QuantalePtr q = quantale_of(doc, sec);
  std::vector<std::string> objs = value_list(sec.need("objects"));
  check_fresh(objs, sec.need("objects"));
  VCat X(q, objs);
  for (const auto& l : sec.lines) {
    if (l.toks[0].text != "hom") continue;
    if (l.toks.size() != 4) fail("hom lines read: hom x y v", l, l.toks[0].col);
    int x = find_in(X.objects, l.toks[1], l);
    int y = find_in(X.objects, l.toks[2], l);
    Elem v = q->find_label(l.toks[3].text);
    if (v < 0) fail("unknown quantale element '" + l.toks[3].text + "'", l, l.toks[3].col);
    X.hom.at(x, y) = v;
  }
  auto errs = validate(X);
  if (!errs.empty()) fail("invalid structure: " + errs.front(), {sec.header_line, {}});
  if (doc.vcats.count(name)) fail("duplicate vcat '" + name + "'", {sec.header_line, {}});
  doc.vcats.emplace(name, std::move(X));
  doc.order.emplace_back("vcat", name);
}

/// dom/cod of a [vrel]: either a number or a vcat name; labels are the vcat's
/// object labels, or decimal indices for a bare number.
std::vector<std::string> carrier_labels(const Document& doc, const Line& l) {
  if (l.toks.size() != 2)
    throw ParseError("'" + l.toks[0].text + "' takes one value", l.no, l.toks[0].col);
  const std::string& s = l.toks[1].text;
  auto it = doc.vcats.find(s);
  if (it != doc.vcats.end()) return it->second.objects;
  try {
    size_t pos = 0;
    int n = std::stoi(s, &pos);
    if (pos == s.size() && n >= 0) {
      std::vector<std::string> out;
      for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
      return out;
    }
  } catch (const std::exception&) {}
  throw ParseError("expected a size or a vcat name, got '" + s + "'", l.no, l.toks[1].col);
}

VRel parse_entries(const Section& sec, const QuantalePtr& q,
                   const std::vector<std::string>& dom,
                   const std::vector<std::string>& cod) {
  VRel r(q, static_cast<int>(dom.size()), static_cast<int>(cod.size()));
  for (const auto& l : sec.lines) {
    if (l.toks[0].text != "entry") continue;
    if (l.toks.size() != 4) fail("entry lines read: entry x y v", l, l.toks[0].col);
    int x = find_in(dom, l.toks[1], l);
    int y = find_in(cod, l.toks[2], l);
    Elem v = q->find_label(l.toks[3].text);
    if (v < 0) fail("unknown quantale element '" + l.toks[3].text + "'", l, l.toks[3].col);
    r.at(x, y) = v;
  }
  return r;
}

void parse_vrel(const Section& sec, Document& doc) {
  std::string name = sec.name();
  QuantalePtr q = quantale_of(doc, sec);
  auto dom = carrier_labels(doc, sec.need("dom"));
  auto cod = carrier_labels(doc, sec.need("cod"));
  VRel r = parse_entries(sec, q, dom, cod);
  if (doc.vrels.count(name)) fail("duplicate vrel '" + name + "'", {sec.header_line, {}});
  doc.vrels.emplace(name, std::move(r));
  doc.order.emplace_back("vrel", name);
}

const VCat& vcat_ref(const Document& doc, const Line& l) {
  if (l.toks.size() != 2)
    throw ParseError("'" + l.toks[0].text + "' takes one vcat name", l.no, l.toks[0].col);
  auto it = doc.vcats.find(l.toks[1].text);
  if (it == doc.vcats.end())
    throw ParseError("unknown vcat '" + l.toks[1].text + "'", l.no, l.toks[1].col);
  return it->second;
}

void parse_vmod(const Section& sec, Document& doc) {
  std::string name = sec.name();
  const VCat& X = vcat_ref(doc, sec.need("dom"));
  const VCat& Y = vcat_ref(doc, sec.need("cod"));
  if (!same_quantale(*X.q, *Y.q))
    fail("dom and cod live over different quantales", {sec.header_line, {}});
  VRel r = parse_entries(sec, X.q, X.objects, Y.objects);
  if (!is_module(X, Y, r))
    fail("entries do not form a module between the given categories",
         {sec.header_line, {}});
  if (doc.vmods.count(name)) fail("duplicate vmod '" + name + "'", {sec.header_line, {}});
  doc.vmods.emplace(name, VModule{X, Y, std::move(r)});
  doc.order.emplace_back("vmod", name);
}

void parse_lattice(const Section& sec, Document& doc) {
  std::string name = sec.name();
  std::vector<std::string> labels = value_list(sec.need("elements"));
  if (labels.empty()) fail("a lattice needs at least one element", sec.need("elements"));
  check_fresh(labels, sec.need("elements"));
  int n = static_cast<int>(labels.size());
  std::vector<char> leq(static_cast<size_t>(n) * n, 0);
  for (const auto& l : sec.lines) {
    if (l.toks[0].text != "leq") continue;
    for (size_t i = 1; i < l.toks.size(); ++i) {
      auto [a, b] = split_pair(l.toks[i], l);
      int x = find_in(labels, {a, l.toks[i].col}, l);
      int y = find_in(labels, {b, l.toks[i].col}, l);
      leq[static_cast<size_t>(x) * n + y] = 1;
    }
  }
  leq = close_order(n, std::move(leq));
  MeetSemilattice L = make_semilattice(labels, std::move(leq));
  auto errs = validate_semilattice(L);
  if (!errs.empty()) fail("invalid semilattice: " + errs.front(), {sec.header_line, {}});
  if (doc.lattices.count(name)) fail("duplicate lattice '" + name + "'", {sec.header_line, {}});
  doc.lattices.emplace(name, std::move(L));
  doc.order.emplace_back("lattice", name);
}

void parse_space(const Section& sec, Document& doc) {
  std::string name = sec.name();
  std::vector<std::string> pts = value_list(sec.need("points"));
  check_fresh(pts, sec.need("points"));
  if (pts.size() > 20) fail("spaces are capped at 20 points", sec.need("points"));
  FiniteSpace X;
  X.labels = pts;
  for (const auto& l : sec.lines) {
    if (l.toks[0].text != "open") continue;
    std::uint32_t m = 0;
    for (size_t i = 1; i < l.toks.size(); ++i)
      m |= 1u << find_in(pts, l.toks[i], l);
    X.opens.push_back(m);
  }
  std::sort(X.opens.begin(), X.opens.end());
  X.opens.erase(std::unique(X.opens.begin(), X.opens.end()), X.opens.end());
  auto errs = validate_space(X);
  if (!errs.empty()) fail("invalid space: " + errs.front(), {sec.header_line, {}});
  if (doc.spaces.count(name)) fail("duplicate space '" + name + "'", {sec.header_line, {}});
  doc.spaces.emplace(name, std::move(X));
  doc.order.emplace_back("space", name);
}

}  // namespace

QuantalePtr resolve_quantale(const Document& doc, const std::string& name) {
  auto it = doc.quantales.find(name);
  if (it != doc.quantales.end()) return it->second;
  if (name == "boolean") return make_boolean();
  if (name.rfind("chain(", 0) == 0 && name.back() == ')') {
    std::string num = name.substr(6, name.size() - 7);
    try {
      size_t pos = 0;
      int n = std::stoi(num, &pos);
      if (pos == num.size() && n >= 0) return make_chain(n);
    } catch (const std::exception&) {}
  }
  throw std::runtime_error("unknown quantale '" + name +
                           "' (builtins: boolean, chain(n))");
}

Document parse_text(const std::string& text) {
  std::vector<Line> lines = tokenize(text);
  Document doc;
  size_t i = 0;
  while (i < lines.size()) {
    const Line& h = lines[i];
    const std::string& t = h.toks[0].text;
    if (t.size() < 3 || t.front() != '[' || t.back() != ']')
      fail("expected a section header like [vcat]", h, h.toks[0].col);
    Section sec{t.substr(1, t.size() - 2), h.no, {}};
    ++i;
    while (i < lines.size()) {
      const std::string& s = lines[i].toks[0].text;
      if (s.front() == '[') break;
      sec.lines.push_back(lines[i]);
      ++i;
    }
    for (const auto& l : sec.lines)
      if (l.toks.size() < 2 && !(sec.kind == "space" && l.toks[0].text == "open"))
        fail("'" + l.toks[0].text + "' needs at least one value", l, l.toks[0].col);
    if (sec.kind == "quantale") parse_quantale(sec, doc);
    else if (sec.kind == "vcat") parse_vcat(sec, doc);
    else if (sec.kind == "vrel") parse_vrel(sec, doc);
    else if (sec.kind == "vmod") parse_vmod(sec, doc);
    else if (sec.kind == "lattice") parse_lattice(sec, doc);
    else if (sec.kind == "space") parse_space(sec, doc);
    else fail("unknown section kind [" + sec.kind + "]", h, h.toks[0].col);
  }
  return doc;
}

Document parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

namespace {

/// Name a quantale for reference lines; document-local quantales keep their
/// section name, builtins their canonical name.
std::string qname(const Document& doc, const QuantalePtr& q) {
  for (const auto& [n, p] : doc.quantales)
    if (same_quantale(*p, *q)) return n;
  return q->name();
}

void dump_quantale(std::ostream& os, const std::string& name, const Quantale& q) {
  os << "[quantale]\nname " << name << "\nelements";
  for (const auto& l : q.labels()) os << ' ' << l;
  os << "\norder";
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem y = 0; y < q.size(); ++y)
      if (x != y && q.leq(x, y)) os << ' ' << q.label(x) << "<=" << q.label(y);
  os << '\n';
  for (Elem x = 0; x < q.size(); ++x) {
    os << "tensor " << q.label(x);
    for (Elem y = 0; y < q.size(); ++y) os << ' ' << q.label(q.tensor(x, y));
    os << '\n';
  }
  os << "unit " << q.label(q.unit()) << "\n\n";
}

void dump_entries(std::ostream& os, const VRel& r, const std::vector<std::string>& dom,
                  const std::vector<std::string>& cod) {
  for (int x = 0; x < r.rows; ++x)
    for (int y = 0; y < r.cols; ++y)
      if (r.at(x, y) != r.q->bottom())
        os << "entry " << dom[static_cast<size_t>(x)] << ' ' << cod[static_cast<size_t>(y)]
           << ' ' << r.q->label(r.at(x, y)) << '\n';
}

}  // namespace

std::string dump_document(const Document& doc) {
  std::ostringstream os;
  for (const auto& [kind, name] : doc.order) {
    if (kind == "quantale") {
      dump_quantale(os, name, *doc.quantales.at(name));
    } else if (kind == "vcat") {
      const VCat& X = doc.vcats.at(name);
      os << "[vcat]\nname " << name << "\nquantale " << qname(doc, X.q) << "\nobjects";
      for (const auto& o : X.objects) os << ' ' << o;
      os << '\n';
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
          os << "hom " << X.objects[static_cast<size_t>(x)] << ' '
             << X.objects[static_cast<size_t>(y)] << ' ' << X.q->label(X.a(x, y)) << '\n';
      os << '\n';
    } else if (kind == "vrel") {
      const VRel& r = doc.vrels.at(name);
      os << "[vrel]\nname " << name << "\nquantale " << qname(doc, r.q) << "\ndom "
         << r.rows << "\ncod " << r.cols << '\n';
      std::vector<std::string> dom, cod;
      for (int i = 0; i < r.rows; ++i) dom.push_back(std::to_string(i));
      for (int i = 0; i < r.cols; ++i) cod.push_back(std::to_string(i));
      dump_entries(os, r, dom, cod);
      os << '\n';
    } else if (kind == "vmod") {
      const VModule& m = doc.vmods.at(name);
      std::string dn, cn;
      for (const auto& [vn, vc] : doc.vcats) {
        if (vc == m.dom && dn.empty()) dn = vn;
        if (vc == m.cod && cn.empty()) cn = vn;
      }
      os << "[vmod]\nname " << name << "\ndom " << dn << "\ncod " << cn << '\n';
      dump_entries(os, m.rel, m.dom.objects, m.cod.objects);
      os << '\n';
    } else if (kind == "lattice") {
      const MeetSemilattice& L = doc.lattices.at(name);
      os << "[lattice]\nname " << name << "\nelements";
      for (const auto& l : L.labels) os << ' ' << l;
      os << "\nleq";
      for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y)
          if (x != y && L.le(x, y))
            os << ' ' << L.labels[static_cast<size_t>(x)] << "<="
               << L.labels[static_cast<size_t>(y)];
      os << "\n\n";
    } else if (kind == "space") {
      const FiniteSpace& X = doc.spaces.at(name);
      os << "[space]\nname " << name << "\npoints";
      for (const auto& p : X.labels) os << ' ' << p;
      os << '\n';
      for (std::uint32_t m : X.opens) {
        os << "open";
        for (int p = 0; p < X.size(); ++p)
          if ((m >> p) & 1u) os << ' ' << X.labels[static_cast<size_t>(p)];
        os << '\n';
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace qwb
